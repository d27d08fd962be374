// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "gb.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dpr {

namespace {

void require_gb_ring(const RingSpec& ring) {
  if (!ring.is_valid())
    fail(Errc::invalid_spec, "derivation table fails validation; fix the spec first");
  if (!ring.filtered())
    fail(Errc::unfiltered_ring,
         "Groebner computations need a filtered table (all entries of degree <= 1)");
}

Poly reduce_impl(const Poly& f, const std::vector<Poly>& gens, const RingSpec& ring) {
  Poly p = f;
  Poly r(ring);
  while (!p.is_zero()) {
    const Monomial& m = p.leading_monomial();
    const Poly* divisor = nullptr;
    for (const Poly& g : gens) {
      if (!g.is_zero() && g.leading_monomial().divides(m)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Scalar c = p.leading_coeff() / divisor->leading_coeff();
      Monomial q = m / divisor->leading_monomial();
      p = p - mul(Poly::monomial(ring, q, c), *divisor);
    } else {
      Scalar c = p.leading_coeff();
      r.add_term(m, c);
      p = p - Poly::monomial(ring, m, c);
    }
  }
  return r;
}

struct PairKey {
  int deg;
  Monomial lcm;
  std::size_t a, b;

  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return deglex_less(lcm, o.lcm);
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

// Buchberger with normal pair selection; no pair criteria, correctness first.
std::vector<Poly> buchberger(const RingSpec& ring, std::vector<Poly> gens) {
  std::vector<Poly> G;
  for (Poly& g : gens) {
    if (!g.is_zero()) G.push_back(g.monic());
  }
  std::set<PairKey> pairs;
  auto add_pairs_for = [&](std::size_t idx) {
    for (std::size_t a = 0; a < idx; ++a) {
      Monomial l = Monomial::lcm(G[a].leading_monomial(), G[idx].leading_monomial());
      pairs.insert(PairKey{l.degree(), l, a, idx});
    }
  };
  for (std::size_t i = 0; i < G.size(); ++i) add_pairs_for(i);
  while (!pairs.empty()) {
    PairKey key = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly& f = G[key.a];
    const Poly& g = G[key.b];
    Monomial uf = key.lcm / f.leading_monomial();
    Monomial ug = key.lcm / g.leading_monomial();
    Poly spair = mul(Poly::monomial(ring, uf, Scalar::one(ring.field())), f) -
                 mul(Poly::monomial(ring, ug, Scalar::one(ring.field())), g);
    Poly h = reduce_impl(spair, G, ring);
    if (!h.is_zero()) {
      G.push_back(h.monic());
      add_pairs_for(G.size() - 1);
    }
  }
  return G;
}

// Unique reduced basis: minimal leading monomials, tails fully reduced,
// ascending order.
std::vector<Poly> reduce_basis(const RingSpec& ring, std::vector<Poly> G) {
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      const Monomial &mi = G[i].leading_monomial(), &mj = G[j].leading_monomial();
      if (mj.divides(mi) && mj != mi) {
        redundant = true;
        break;
      }
      if (mj == mi && j < i) {  // keep one representative of equal leads
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
    return deglex_less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Poly> out = minimal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    out[i] = reduce_impl(out[i], others, ring).monic();
  }
  return out;
}

}  // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& gens, const RingSpec& ring) {
  require_gb_ring(ring);
  return reduce_impl(f, gens, ring);
}

Poly reduce(const Poly& f, const GBasis& G) { return reduce(f, G.elements, G.ring); }

GBasis left_gb(const RingSpec& ring, const std::vector<Poly>& gens) {
  require_gb_ring(ring);
  for (const Poly& g : gens)
    if (!g.ring().same_ring(ring)) fail(Errc::ring_mismatch, "generator from a different ring");
  GBasis out;
  out.ring = ring;
  out.sided = Sidedness::left;
  out.elements = reduce_basis(ring, buchberger(ring, gens));
  return out;
}

GBasis twosided_gb(const RingSpec& ring, const std::vector<Poly>& gens) {
  require_gb_ring(ring);
  std::vector<Poly> work = gens;
  GBasis G;
  while (true) {
    G = left_gb(ring, work);
    if (G.is_unit_ideal()) break;
    std::vector<Poly> fresh;
    for (const Poly& g : G.elements) {
      for (int i = 0; i < ring.nvars(); ++i) {
        Poly r = reduce_impl(mul(g, Poly::variable(ring, i)), G.elements, ring);
        if (!r.is_zero()) fresh.push_back(r.monic());
      }
    }
    if (fresh.empty()) break;
    work = G.elements;
    work.insert(work.end(), fresh.begin(), fresh.end());
  }
  G.sided = Sidedness::two_sided;
  // Left closure must hold for any left basis; violation means a defect.
  for (const Poly& g : G.elements) {
    for (int i = 0; i < ring.nvars(); ++i) {
      if (!reduce_impl(mul(Poly::variable(ring, i), g), G.elements, ring).is_zero())
        fail(Errc::internal, "two-sided basis is not left-closed");
    }
  }
  return G;
}

bool member(const Poly& f, const GBasis& G) { return reduce(f, G).is_zero(); }

std::vector<Monomial> monomials_up_to(const RingSpec& ring, int d) {
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(ring.nvars()));
  // Depth-first enumeration of exponent vectors with total degree <= d.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == ring.nvars()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur.exp(var) = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e);
    }
    cur.exp(var) = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return deglex_less(b, a);  // descending
  });
  return out;
}

TruncatedBasis truncated_basis(const GBasis& G, int d) {
  if (d < 0) fail(Errc::bad_argument, "degree bound must be non-negative");
  TruncatedBasis out;
  out.degree_bound = d;
  if (G.elements.empty()) return out;
  const RingSpec& ring = G.ring;
  std::vector<Monomial> cols = monomials_up_to(ring, d);
  std::map<Monomial, std::size_t, DeglexLess> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);
  Matrix mat(ring.field(), cols.size());
  for (const Poly& g : G.elements) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const Monomial& m : monomials_up_to(ring, d - g.degree())) {
      Poly prod = mul(Poly::monomial(ring, m, Scalar::one(ring.field())), g);
      std::vector<Scalar> row(cols.size(), Scalar::zero(ring.field()));
      for (const auto& [mono, c] : prod.terms()) row[col_index.at(mono)] = c;
      mat.add_row(std::move(row));
    }
  }
  mat.rref();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    Poly p(ring);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!mat.row(r)[c].is_zero()) p.add_term(cols[c], mat.row(r)[c]);
    }
    out.rows.push_back(std::move(p));
  }
  return out;
}

QuotientDim quotient_dim(const GBasis& G) {
  if (G.sided != Sidedness::two_sided)
    fail(Errc::bad_argument, "quotient dimension needs a two-sided basis");
  QuotientDim out;
  const int n = G.ring.nvars();
  if (G.elements.empty()) return out;  // zero ideal: infinite
  if (G.is_unit_ideal()) {
    out.finite = true;
    out.dim = 0;
    return out;
  }
  std::vector<std::uint32_t> cap(n, 0);
  std::vector<Monomial> lms;
  for (const Poly& g : G.elements) lms.push_back(g.leading_monomial());
  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (const Monomial& m : lms) {
      if (m.exp(v) > 0 && m.degree() == static_cast<int>(m.exp(v))) {
        if (!found || m.exp(v) < cap[v]) cap[v] = m.exp(v);
        found = true;
      }
    }
    if (!found) return out;  // a variable's powers all survive
  }
  out.finite = true;
  // Walk the finite box below the pure-power staircase.
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    Monomial m{std::vector<std::uint32_t>(e.begin(), e.end())};
    bool divisible = false;
    for (const Monomial& lm : lms) {
      if (lm.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++out.dim;
    int v = 0;
    while (v < n) {
      if (++e[v] < cap[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return out;
}

}  // namespace dpr
