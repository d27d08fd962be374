// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "lie.hpp"

#include "linalg.hpp"

namespace dpr {

namespace {

std::vector<Scalar> unit_vector(const Field& f, int dim, int k) {
  std::vector<Scalar> v(dim, Scalar::zero(f));
  v[k] = Scalar::one(f);
  return v;
}

// Canonical echelon basis of the span of the given coordinate vectors.
std::vector<std::vector<Scalar>> echelon_span(const Field& f, int dim,
                                              const std::vector<std::vector<Scalar>>& vectors) {
  Matrix m(f, static_cast<std::size_t>(dim));
  for (const auto& v : vectors)
    if (!is_zero_vector(v)) m.add_row(v);
  m.rref();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

LieAlgebra LieAlgebra::create(
    const Field& field, int dim,
    const std::map<std::pair<int, int>, std::vector<Scalar>>& brackets) {
  if (dim < 1) fail(Errc::bad_argument, "Lie algebra dimension must be at least 1");
  LieAlgebra L(field, dim);
  L.c_.resize(dim);
  for (int i = 0; i < dim; ++i)
    L.c_[i].assign(i, std::vector<Scalar>(dim, Scalar::zero(field)));
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (j < 0 || i <= j || i >= dim)
      fail(Errc::bad_argument, "bracket index (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") out of range (need i > j)");
    if (static_cast<int>(v.size()) != dim)
      fail(Errc::bad_argument, "bracket coordinate vector has wrong length");
    for (const auto& s : v)
      if (s.field() != field) fail(Errc::field_mismatch, "bracket coordinate from wrong field");
    L.c_[i][j] = v;
  }
  // Jacobi on all strictly decreasing triples.
  for (int i = 2; i < dim; ++i) {
    for (int j = 1; j < i; ++j) {
      for (int k = 0; k < j; ++k) {
        auto ei = L.basis_bracket(i, j);
        std::vector<Scalar> sum = L.bracket(ei, unit_vector(field, dim, k));
        auto t2 = L.bracket(L.basis_bracket(j, k), unit_vector(field, dim, i));
        auto t3 = L.bracket(L.basis_bracket(k, i), unit_vector(field, dim, j));
        for (int t = 0; t < dim; ++t) sum[t] = sum[t] + t2[t] + t3[t];
        if (!is_zero_vector(sum)) {
          LieValidation::Violation viol{i, j, k, ""};
          viol.detail = "Jacobi fails on (x" + std::to_string(i + 1) + ", x" +
                        std::to_string(j + 1) + ", x" + std::to_string(k + 1) + ")";
          L.validation_.violations.push_back(std::move(viol));
        }
      }
    }
  }
  L.validation_.ok = L.validation_.violations.empty();
  return L;
}

std::vector<Scalar> LieAlgebra::basis_bracket(int i, int j) const {
  std::vector<Scalar> zero(dim_, Scalar::zero(field_));
  if (i == j) return zero;
  if (i > j) return c_[i][j];
  std::vector<Scalar> v = c_[j][i];
  for (auto& s : v) s = -s;
  return v;
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& u,
                                        const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j].is_zero() || i == j) continue;
      std::vector<Scalar> b = basis_bracket(i, j);
      Scalar factor = u[i] * v[j];
      for (int t = 0; t < dim_; ++t) out[t] = out[t] + factor * b[t];
    }
  }
  return out;
}

bool LieAlgebra::is_adapted_flag() const {
  for (int i = 1; i < dim_; ++i)
    for (int j = 0; j < i; ++j)
      for (int t = j + 1; t < dim_; ++t)
        if (!c_[i][j][t].is_zero()) return false;
  return true;
}

std::vector<int> LieAlgebra::derived_series() const {
  std::vector<int> dims{dim_};
  std::vector<std::vector<Scalar>> cur;
  for (int i = 0; i < dim_; ++i) cur.push_back(unit_vector(field_, dim_, i));
  while (true) {
    std::vector<std::vector<Scalar>> images;
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) images.push_back(bracket(cur[a], cur[b]));
    auto next = echelon_span(field_, dim_, images);
    int d = static_cast<int>(next.size());
    if (d == dims.back()) break;
    dims.push_back(d);
    cur = std::move(next);
    if (d == 0) break;
  }
  return dims;
}

bool LieAlgebra::is_solvable() const { return derived_series().back() == 0; }

std::vector<int> LieAlgebra::lower_central_series() const {
  std::vector<int> dims{dim_};
  std::vector<std::vector<Scalar>> full;
  for (int i = 0; i < dim_; ++i) full.push_back(unit_vector(field_, dim_, i));
  std::vector<std::vector<Scalar>> cur = full;
  while (true) {
    std::vector<std::vector<Scalar>> images;
    for (const auto& a : full)
      for (const auto& b : cur) images.push_back(bracket(a, b));
    auto next = echelon_span(field_, dim_, images);
    int d = static_cast<int>(next.size());
    if (d == dims.back()) break;
    dims.push_back(d);
    cur = std::move(next);
    if (d == 0) break;
  }
  return dims;
}

bool LieAlgebra::is_nilpotent() const { return lower_central_series().back() == 0; }

bool LieAlgebra::derived_is_nilpotent() const {
  std::vector<std::vector<Scalar>> full;
  for (int i = 0; i < dim_; ++i) full.push_back(unit_vector(field_, dim_, i));
  std::vector<std::vector<Scalar>> images;
  for (std::size_t a = 0; a < full.size(); ++a)
    for (std::size_t b = a + 1; b < full.size(); ++b) images.push_back(bracket(full[a], full[b]));
  auto derived = echelon_span(field_, dim_, images);
  // Lower central series of [L,L] computed inside L.
  std::vector<std::vector<Scalar>> cur = derived;
  int prev = static_cast<int>(cur.size());
  while (prev > 0) {
    std::vector<std::vector<Scalar>> step;
    for (const auto& a : derived)
      for (const auto& b : cur) step.push_back(bracket(a, b));
    auto next = echelon_span(field_, dim_, step);
    int d = static_cast<int>(next.size());
    if (d == prev) return false;
    prev = d;
    cur = std::move(next);
  }
  return true;
}

RingSpec LieAlgebra::to_ring_spec(std::vector<std::string> names) const {
  if (!is_adapted_flag())
    fail(Errc::bad_argument,
         "basis is not adapted to a flag of ideals; cannot present the enveloping algebra");
  if (names.empty()) {
    for (int i = 0; i < dim_; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != dim_)
    fail(Errc::bad_argument, "need one variable name per basis element");
  std::map<std::pair<int, int>, TermMap> entries;
  for (int i = 1; i < dim_; ++i) {
    for (int j = 0; j < i; ++j) {
      TermMap tm;
      for (int t = 0; t < dim_; ++t) {
        if (c_[i][j][t].is_zero()) continue;
        tm.emplace(Monomial::var(static_cast<std::size_t>(dim_), t), c_[i][j][t]);
      }
      if (!tm.empty()) entries[{i, j}] = std::move(tm);
    }
  }
  return RingSpec::create(field_, std::move(names), entries);
}

}  // namespace dpr
