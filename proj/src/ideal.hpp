// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_IDEAL_HPP
#define DPR_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gb.hpp"

namespace dpr {

/// Two-sided ideal: generators plus a lazily computed, write-once two-sided
/// Groebner basis. Handles are cheap to copy and share the cache.
class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped; the empty list is the zero ideal.
  Ideal(RingSpec ring, std::vector<Poly> gens);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced two-sided basis; computed once, then immutable.
  const GBasis& gb() const;

  bool is_zero() const { return gens_.empty(); }

 private:
  RingSpec ring_;
  std::vector<Poly> gens_;
  struct Cache {
    std::once_flag once;
    std::optional<GBasis> basis;
  };
  std::shared_ptr<Cache> cache_;
};

/// Generated by {g*h : g in gb(I), h in gens(J)}; the left factor's two-sided
/// basis makes this a generating set of I*J.
Ideal product(const Ideal& I, const Ideal& J);
Ideal power(const Ideal& I, int k);
Ideal sum(const Ideal& I, const Ideal& J);
bool equals(const Ideal& I, const Ideal& J);
bool is_proper(const Ideal& I);
bool ideal_member(const Poly& f, const Ideal& I);

enum class PowIntStatus { certified_zero, observed_zero, candidate_nonzero, inconclusive };

std::string to_string(PowIntStatus s);

struct ZeroCertificate {
  Poly generator;  // monic, normal, degree >= 1
  std::string justification;
};

enum class CertFailure { not_principal, not_normal, degree_zero };

std::string to_string(CertFailure f);

/// Truncated power-intersection evidence: dimensions of I^k cap S_{<=d} for
/// k = 1..kmax, the stabilization point, and candidate generators for the
/// intersection of all powers.
struct PowIntReport {
  int degree_bound = 0;
  int kmax = 0;
  std::vector<int> dims;                  // dims[k-1] = dim of I^k cap S_{<=d}
  std::vector<TruncatedBasis> truncations;  // per k, canonical echelon bases
  std::optional<int> stable_k;            // smallest k whose truncation persists to kmax
  std::vector<Poly> candidates;           // echelon basis at stable_k
  PowIntStatus status = PowIntStatus::inconclusive;
  std::optional<ZeroCertificate> certificate;  // set only by iterate_powint
};

/// Exact truncations of I^k for k = 1..kmax. The final truncation always
/// contains the truncation of the intersection of all powers.
PowIntReport powint(const Ideal& I, int d, int kmax);

/// Proof that the intersection of all powers is zero: the two-sided basis is
/// a single monic normal element of positive degree, so I^k = f^k S and
/// degrees in I^k grow without bound.
std::variant<ZeroCertificate, CertFailure> cert_zero_principal(const Ideal& I);

struct IterationRound {
  int round = 0;       // 1-based
  bool heuristic = false;  // seeded from truncation candidates
  PowIntReport report;
};

struct IterationResult {
  std::vector<IterationRound> rounds;
  std::optional<int> m_obs;  // rounds needed to reach a zero status
  std::vector<std::string> warnings;
};

/// Iterates the power-intersection operator: each round certifies if the
/// current ideal is principal-normal, otherwise truncates; stabilized nonzero
/// candidates seed the next round and are flagged heuristic.
IterationResult iterate_powint(const Ideal& I, int d, int kmax, int mmax);

/// Generators must use only variables below min(ds); membership of their
/// derivative images is decided in that prefix subring.
bool is_invariant(const Ideal& I, const std::vector<int>& ds);

}  // namespace dpr

#endif
