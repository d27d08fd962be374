// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_ERRORS_HPP
#define DPR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpr {

/// Error categories. `usage` class errors come from malformed user input
/// (expressions, literals, documents); `domain` class errors come from
/// mathematically invalid requests on well-formed input.
enum class Errc {
  bad_literal,
  parse_error,
  unknown_identifier,
  field_mismatch,
  division_by_zero,
  ring_mismatch,
  invalid_spec,
  unfiltered_ring,
  variable_out_of_range,
  zero_argument,
  not_monic,
  not_invariant,
  incomplete_factorization,
  too_many_factors,
  bad_argument,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

  /// True for errors caused by unparseable input rather than domain state.
  bool is_usage() const {
    switch (code_) {
      case Errc::bad_literal:
      case Errc::parse_error:
      case Errc::unknown_identifier:
      case Errc::bad_argument:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dpr

#endif
