// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_GB_HPP
#define DPR_GB_HPP

#include <cstdint>
#include <vector>

#include "ring.hpp"

namespace dpr {

enum class Sidedness { left, two_sided };

/// Reduced Groebner basis under deglex: monic elements with pairwise distinct
/// leading monomials, no term of any element divisible by another's leading
/// monomial, sorted ascending. Unique for the ideal, hence byte-stable.
struct GBasis {
  RingSpec ring;
  Sidedness sided = Sidedness::left;
  std::vector<Poly> elements;

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements.front().degree() == 0;
  }
};

/// Normal form of f modulo the left ideal of G; no term of the result is
/// divisible by a leading monomial of G.
Poly reduce(const Poly& f, const GBasis& G);
Poly reduce(const Poly& f, const std::vector<Poly>& gens, const RingSpec& ring);

/// Reduced left Groebner basis of sum S*g. Requires a validated filtered ring.
GBasis left_gb(const RingSpec& ring, const std::vector<Poly>& gens);

/// Reduced basis whose left ideal equals the two-sided ideal of the
/// generators: a left basis closed under right multiplication by variables.
GBasis twosided_gb(const RingSpec& ring, const std::vector<Poly>& gens);

bool member(const Poly& f, const GBasis& G);

/// Canonical echelon basis (reduced row echelon, rows listed by descending
/// leading monomial) of the span of {m*g : deg m + deg g <= d}. For the left
/// ideal of G under the degree-compatible order this equals I cap S_{<=d}.
struct TruncatedBasis {
  int degree_bound = 0;
  std::vector<Poly> rows;

  int dim() const { return static_cast<int>(rows.size()); }
  bool operator==(const TruncatedBasis& o) const {
    return degree_bound == o.degree_bound && rows == o.rows;
  }
};

TruncatedBasis truncated_basis(const GBasis& G, int d);

/// Number of standard monomials of a two-sided basis; infinite iff some
/// variable has no pure power among the leading monomials.
struct QuotientDim {
  bool finite = false;
  std::uint64_t dim = 0;
};

QuotientDim quotient_dim(const GBasis& G);

/// All monomials of degree <= d in descending deglex order.
std::vector<Monomial> monomials_up_to(const RingSpec& ring, int d);

}  // namespace dpr

#endif
