// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_COEFF_HPP
#define DPR_COEFF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace dpr {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Checks primality by trial division; throws on composite or out-of-range p.
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  /// Characteristic: 0 for the rationals, p otherwise.
  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Immutable exact field element. Rationals are reduced fractions with
/// positive denominator; prime-field elements are residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long v);
  static Scalar from_mpz(const Field& f, const mpz_class& v);
  static Scalar from_mpq(const Field& f, const mpq_class& v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used only for deterministic sorting, not field structure.
  static bool less(const Scalar& a, const Scalar& b);

  /// "a/b" over the rationals ("/1" omitted), bare residue over F_p.
  std::string to_string() const;

  /// Parses `'-'? digits ('/' digits)?`; fractions are legal only over Q.
  static Scalar parse(const std::string& text, const Field& f);

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;          // rationals only
  std::uint32_t r_ = 0;  // prime field only
};

}  // namespace dpr

#endif
