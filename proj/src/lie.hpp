// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_LIE_HPP
#define DPR_LIE_HPP

#include <string>
#include <vector>

#include "ring.hpp"

namespace dpr {

struct LieValidation {
  bool ok = true;
  // Failing Jacobi triples, 0-based (i > j > k), with printable detail.
  struct Violation {
    int i, j, k;
    std::string detail;
  };
  std::vector<Violation> violations;
};

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// basis: c[i][j] is the coordinate vector of [x_{i+1}, x_{j+1}] for i > j,
/// extended by antisymmetry.
class LieAlgebra {
 public:
  /// `brackets[{i,j}]` with 0-based i > j, coordinate vectors of length dim.
  static LieAlgebra create(const Field& field, int dim,
                           const std::map<std::pair<int, int>, std::vector<Scalar>>& brackets);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }

  /// Coordinates of [x_{i+1}, x_{j+1}] for any i, j.
  std::vector<Scalar> basis_bracket(int i, int j) const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

  /// Jacobi identity on all basis triples; failures are data.
  const LieValidation& validation() const { return validation_; }
  bool is_valid() const { return validation_.ok; }

  /// True iff [x_i, x_j] lies in span(x_1..x_j) for all i > j, i.e. the basis
  /// exhibits a full flag of ideals.
  bool is_adapted_flag() const;

  /// Dimensions of L, [L,L], [[L,L],[L,L]], ... until stable or zero.
  std::vector<int> derived_series() const;
  bool is_solvable() const;

  /// Dimensions of L, [L,L], [L,[L,L]], ... until stable or zero.
  std::vector<int> lower_central_series() const;
  bool is_nilpotent() const;

  /// Lower central series of the subalgebra [L,L] with induced brackets.
  bool derived_is_nilpotent() const;

  /// Universal-enveloping-algebra presentation: ring with
  /// delta[i][j] = [x_{i+1}, x_{j+1}]. Requires is_adapted_flag().
  RingSpec to_ring_spec(std::vector<std::string> names = {}) const;

 private:
  LieAlgebra(const Field& f, int dim) : field_(f), dim_(dim) {}

  Field field_;
  int dim_;
  std::vector<std::vector<std::vector<Scalar>>> c_;  // c_[i][j], i > j
  LieValidation validation_;
};

}  // namespace dpr

#endif
