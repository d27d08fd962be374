// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <algorithm>

namespace dpr {

void Matrix::add_row(std::vector<Scalar> row) {
  if (row.size() != cols_) fail(Errc::bad_argument, "row has wrong length");
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows_.size() && rows_[sel][col].is_zero()) ++sel;
    if (sel == rows_.size()) continue;
    std::swap(rows_[pivot_row], rows_[sel]);
    Scalar inv = rows_[pivot_row][col].inverse();
    for (std::size_t c = col; c < cols_; ++c) rows_[pivot_row][c] = rows_[pivot_row][c] * inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pivot_row || rows_[r][col].is_zero()) continue;
      Scalar factor = rows_[r][col];
      for (std::size_t c = col; c < cols_; ++c)
        rows_[r][c] = rows_[r][c] - factor * rows_[pivot_row][c];
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  rows_.resize(pivot_row, std::vector<Scalar>());
  return pivots;
}

std::vector<Scalar> Matrix::reduce(std::vector<Scalar> v,
                                   const std::vector<std::size_t>& pivots) const {
  if (v.size() != cols_) fail(Errc::bad_argument, "vector has wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots[r]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t j = pivots[r]; j < cols_; ++j) v[j] = v[j] - factor * rows_[r][j];
  }
  return v;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace dpr
