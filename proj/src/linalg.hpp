// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_LINALG_HPP
#define DPR_LINALG_HPP

#include <vector>

#include "coeff.hpp"

namespace dpr {

/// Dense exact matrix used for echelon computations. Rows are vectors of
/// scalars over one field.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t cols) : field_(f), cols_(cols) {}

  void add_row(std::vector<Scalar> row);
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& row(std::size_t i) const { return rows_[i]; }
  const Field& field() const { return field_; }

  /// In-place reduced row echelon form. Zero rows are dropped, pivots are 1,
  /// pivot columns are cleared elsewhere, rows ordered by pivot column.
  /// The result is canonical for the row space. Returns the pivot columns.
  std::vector<std::size_t> rref();

  /// Reduces `v` against the rows of an RREF matrix; the remainder is zero
  /// iff `v` lies in the row space.
  std::vector<Scalar> reduce(std::vector<Scalar> v, const std::vector<std::size_t>& pivots) const;

 private:
  Field field_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
};

bool is_zero_vector(const std::vector<Scalar>& v);

}  // namespace dpr

#endif
