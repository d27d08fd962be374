// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "ideal.hpp"

#include <algorithm>

namespace dpr {

Ideal::Ideal(RingSpec ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Poly& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring().same_ring(ring_)) fail(Errc::ring_mismatch, "generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

const GBasis& Ideal::gb() const {
  if (!cache_) fail(Errc::bad_argument, "empty ideal handle");
  std::call_once(cache_->once, [this] { cache_->basis = twosided_gb(ring_, gens_); });
  return *cache_->basis;
}

Ideal product(const Ideal& I, const Ideal& J) {
  if (!I.ring().same_ring(J.ring())) fail(Errc::ring_mismatch, "ideals from different rings");
  std::vector<Poly> gens;
  for (const Poly& g : I.gb().elements)
    for (const Poly& h : J.generators()) gens.push_back(mul(g, h));
  return Ideal(I.ring(), std::move(gens));
}

Ideal power(const Ideal& I, int k) {
  if (k < 1) fail(Errc::bad_argument, "ideal power wants k >= 1");
  Ideal acc = I;
  for (int i = 1; i < k; ++i) acc = product(acc, I);
  return acc;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  if (!I.ring().same_ring(J.ring())) fail(Errc::ring_mismatch, "ideals from different rings");
  std::vector<Poly> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

bool equals(const Ideal& I, const Ideal& J) {
  if (!I.ring().same_ring(J.ring())) fail(Errc::ring_mismatch, "ideals from different rings");
  for (const Poly& g : I.generators())
    if (!member(g, J.gb())) return false;
  for (const Poly& h : J.generators())
    if (!member(h, I.gb())) return false;
  return true;
}

bool is_proper(const Ideal& I) { return !I.gb().is_unit_ideal(); }

bool ideal_member(const Poly& f, const Ideal& I) { return member(f, I.gb()); }

std::string to_string(PowIntStatus s) {
  switch (s) {
    case PowIntStatus::certified_zero: return "CERTIFIED_ZERO";
    case PowIntStatus::observed_zero: return "OBSERVED_ZERO";
    case PowIntStatus::candidate_nonzero: return "CANDIDATE_NONZERO";
    case PowIntStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string to_string(CertFailure f) {
  switch (f) {
    case CertFailure::not_principal: return "NOT_PRINCIPAL";
    case CertFailure::not_normal: return "NOT_NORMAL";
    case CertFailure::degree_zero: return "DEGREE_ZERO";
  }
  return "NOT_PRINCIPAL";
}

PowIntReport powint(const Ideal& I, int d, int kmax) {
  if (d < 1) fail(Errc::bad_argument, "degree bound must be at least 1");
  if (kmax < 2) fail(Errc::bad_argument, "kmax must be at least 2");
  PowIntReport rep;
  rep.degree_bound = d;
  rep.kmax = kmax;
  Ideal pk = I;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) pk = product(pk, I);
    TruncatedBasis tb = truncated_basis(pk.gb(), d);
    if (!rep.dims.empty() && tb.dim() > rep.dims.back())
      fail(Errc::internal, "truncation dimensions increased with the power");
    rep.dims.push_back(tb.dim());
    rep.truncations.push_back(std::move(tb));
  }
  // Smallest k whose truncation equals all later ones.
  int stable = -1;
  for (int k = kmax; k >= 1; --k) {
    if (k == kmax || rep.truncations[k - 1] == rep.truncations[k]) {
      stable = k;
    } else {
      break;
    }
  }
  if (stable >= 1 && (stable < kmax || rep.dims.back() == 0)) {
    rep.stable_k = stable;
    rep.candidates = rep.truncations[stable - 1].rows;
  }
  if (rep.dims.back() == 0) {
    rep.status = PowIntStatus::observed_zero;
  } else if (rep.stable_k && *rep.stable_k < kmax) {
    rep.status = PowIntStatus::candidate_nonzero;
  } else {
    rep.status = PowIntStatus::inconclusive;
  }
  return rep;
}

std::variant<ZeroCertificate, CertFailure> cert_zero_principal(const Ideal& I) {
  const GBasis& G = I.gb();
  if (G.elements.size() != 1) return CertFailure::not_principal;
  const Poly& f = G.elements.front();
  if (f.degree() < 1) return CertFailure::degree_zero;
  if (!is_normal(f)) return CertFailure::not_normal;
  ZeroCertificate cert;
  cert.generator = f;
  cert.justification =
      "the two-sided basis is the single monic element f = " + f.to_string() +
      (is_central(f) ? " (central)" : " (normal: x*f in f*S and f*x in S*f for every variable)") +
      "; hence I^k = f^k*S, every nonzero element of I^k has degree >= k by the filtered "
      "degree law, and the intersection of all powers is 0";
  return cert;
}

IterationResult iterate_powint(const Ideal& I, int d, int kmax, int mmax) {
  if (mmax < 1) fail(Errc::bad_argument, "mmax must be at least 1");
  IterationResult res;
  Ideal cur = I;
  bool heuristic = false;
  for (int m = 1; m <= mmax; ++m) {
    IterationRound round;
    round.round = m;
    round.heuristic = heuristic;
    if (!is_proper(cur)) {
      round.report = powint(cur, d, kmax);
      res.warnings.push_back("round " + std::to_string(m) +
                             ": ideal is not proper; the vanishing statements do not apply");
      res.rounds.push_back(std::move(round));
      return res;
    }
    auto cert = cert_zero_principal(cur);
    round.report = powint(cur, d, kmax);
    if (std::holds_alternative<ZeroCertificate>(cert)) {
      round.report.status = PowIntStatus::certified_zero;
      round.report.certificate = std::get<ZeroCertificate>(cert);
      res.rounds.push_back(std::move(round));
      res.m_obs = m;
      return res;
    }
    PowIntStatus status = round.report.status;
    std::vector<Poly> candidates = round.report.candidates;
    res.rounds.push_back(std::move(round));
    if (status == PowIntStatus::observed_zero) {
      res.m_obs = m;
      return res;
    }
    if (status == PowIntStatus::inconclusive) {
      res.warnings.push_back("round " + std::to_string(m) +
                             ": truncations still shrinking at kmax; raise kmax or deg");
      return res;
    }
    // Candidate generators seed the next round; the degree-d shadow may miss
    // high-degree generators, so everything downstream is heuristic.
    cur = Ideal(I.ring(), candidates);
    heuristic = true;
  }
  res.warnings.push_back("round limit reached without a zero status");
  return res;
}

bool is_invariant(const Ideal& I, const std::vector<int>& ds) {
  const RingSpec& R = I.ring();
  if (ds.empty()) return true;
  int dmin = *std::min_element(ds.begin(), ds.end());
  for (int i : ds)
    if (i < 0 || i >= R.nvars())
      fail(Errc::variable_out_of_range, "derivation index out of range");
  for (const Poly& g : I.generators()) {
    if (g.top_var() >= dmin)
      fail(Errc::variable_out_of_range,
           "generators must use only variables below every listed derivation");
  }
  if (I.generators().empty()) return true;
  // Work inside the prefix subring where the listed derivations act.
  RingSpec sub = R.prefix(dmin);
  auto restrict_poly = [&](const Poly& p) {
    Poly q(sub);
    for (const auto& [m, c] : p.terms()) {
      std::vector<std::uint32_t> exps(m.exps().begin(), m.exps().begin() + dmin);
      q.add_term(Monomial(std::move(exps)), c);
    }
    return q;
  };
  std::vector<Poly> sub_gens;
  for (const Poly& g : I.generators()) sub_gens.push_back(restrict_poly(g));
  GBasis G = twosided_gb(sub, sub_gens);
  for (const Poly& g : I.generators()) {
    for (int i : ds) {
      Poly image = apply_derivation(R, i, g);
      if (!member(restrict_poly(image), G)) return false;
    }
  }
  return true;
}

}  // namespace dpr
