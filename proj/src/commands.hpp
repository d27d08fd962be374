// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_COMMANDS_HPP
#define DPR_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "specdoc.hpp"

namespace dpr {

/// Outcome of one CLI invocation. Exit codes: 0 success, 1 domain error,
/// 2 usage or parse error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Dispatches one command line (without the program name). Commands:
/// validate, nf, mul, gb, powint, iterate, cert, invariant-factor, lie,
/// verify. `--format=json` switches the report to a structured document.
CommandResult run_command(const std::vector<std::string>& argv);

struct LieFlags {
  bool solvable = false;
  bool completely_solvable = false;
  bool nilpotent = false;
  bool derived_nilpotent = false;
};

/// Hypothesis checks, the iterated power-intersection run, the applicable
/// vanishing bound, and a verdict that is CONSISTENT or INCONCLUSIVE; the
/// harness never claims a refutation from truncated data.
struct VerifyReport {
  int deg = 0;
  int maxpow = 0;
  int iters = 0;
  std::vector<std::string> ideal_gens;

  bool table_validated = false;
  bool filtered = false;
  bool linear_leading = false;
  // Scalars sit in a field, so derivations vanish on them and the only
  // invariant scalar ideals are 0 and the field itself.
  bool scalars_stable = true;
  bool scalar_field_simple = true;
  std::optional<LieFlags> lie;

  bool ideal_proper = false;
  QuotientDim qdim;

  IterationResult iteration;
  std::optional<int> m_obs;
  int bound_nvars = 0;                // from the variable count
  std::optional<int> bound_codim;    // 2 when the finite-codimension route applies
  std::optional<int> bound;          // minimum of the applicable bounds
  std::string verdict = "INCONCLUSIVE";
};

VerifyReport verify_theorem(const SpecDocument& doc, const std::vector<Poly>& gens, int d,
                            int kmax, int mmax);

}  // namespace dpr

#endif
