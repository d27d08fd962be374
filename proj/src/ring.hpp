// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_RING_HPP
#define DPR_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"

namespace dpr {

/// Exponent vector of a normal word x1^e1 ... xn^en. Variable indices are
/// 0-based throughout the C++ API; reports print them 1-based.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial var(std::size_t nvars, std::size_t index, std::uint32_t exp = 1) {
    Monomial m(nvars);
    m.e_[index] = exp;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t exp(std::size_t i) const { return e_[i]; }
  std::uint32_t& exp(std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  int degree() const;
  bool is_unit() const { return degree() == 0; }
  /// Largest variable index with nonzero exponent, or -1 for the unit monomial.
  int top_var() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Componentwise quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

/// Degree-lexicographic order with x1 < x2 < ... < xn: total degree first,
/// ties broken on the exponent of the largest variable downwards.
bool deglex_less(const Monomial& a, const Monomial& b);

struct DeglexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return deglex_less(a, b); }
};

using TermMap = std::map<Monomial, Scalar, DeglexLess>;

struct ValidationViolation {
  // 0-based indices; (i, k, j) with j < k < i for compatibility failures,
  // k == -1 for support failures of delta[i][j].
  int i = -1;
  int k = -1;
  int j = -1;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationViolation> violations;
};

class Poly;

/// Iterated differential polynomial ring over a field: n variables and a
/// derivation table delta[i][j] = value of the i-th derivation on x_{j+1},
/// an element of the subring generated by the variables below i.
class RingSpec {
 public:
  RingSpec() = default;

  /// `entries[{i,j}]` (0-based, j < i) are term maps supported on variables
  /// strictly below i. Structural errors throw; algebraic violations land in
  /// validation().
  static RingSpec create(const Field& field, std::vector<std::string> names,
                         const std::map<std::pair<int, int>, TermMap>& entries);

  bool empty() const { return impl_ == nullptr; }
  const Field& field() const;
  int nvars() const;
  const std::vector<std::string>& names() const;
  /// delta[i][j] as a polynomial of this ring; zero when absent.
  Poly delta(int i, int j) const;
  bool has_delta(int i, int j) const;

  /// All table entries have total degree <= 1.
  bool filtered() const;
  /// Every entry has x_{j+1}-degree <= 1 (entries of the form u*x_j + v).
  bool linear_leading_shape() const;
  /// All table entries are homogeneous linear (a Lie-algebra table).
  bool linear_homogeneous() const;

  const ValidationReport& validation() const;
  bool is_valid() const { return validation().ok; }

  /// Ring on the first k variables with the induced table.
  RingSpec prefix(int k) const;

  bool same_ring(const RingSpec& o) const;

  int var_index(const std::string& name) const;  // -1 when unknown

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Normal-form element of a RingSpec: finite monomial-to-scalar map with no
/// zero coefficients stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingSpec ring) : ring_(std::move(ring)) {}
  Poly(RingSpec ring, TermMap terms);

  static Poly zero(const RingSpec& r) { return Poly(r); }
  static Poly constant(const RingSpec& r, const Scalar& c);
  static Poly variable(const RingSpec& r, int index, std::uint32_t exp = 1);
  static Poly monomial(const RingSpec& r, const Monomial& m, const Scalar& c);

  const RingSpec& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; kZeroPolyDegree for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  /// Largest variable index appearing, or -1 for constants.
  int top_var() const;

  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;
  std::pair<Monomial, Scalar> leading_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  void add_term(const Monomial& m, const Scalar& c);

  /// Terms in descending deglex order, e.g. "x1*x2^2 + 2*x1*x2 + x1".
  std::string to_string() const;

 private:
  RingSpec ring_;
  TermMap terms_;
};

inline constexpr int kZeroPolyDegree = -1;

/// Normal-form product under the commutation rule x_i*x_j = x_j*x_i + delta[i][j].
Poly mul(const Poly& f, const Poly& g);

/// Leibniz extension of table row i applied to f; f may use only variables
/// with index < i.
Poly apply_derivation(const RingSpec& spec, int i, const Poly& f);

/// Checks the support condition and the Leibniz compatibility identity on all
/// variable triples. Violations are data, not errors.
ValidationReport validate_spec(const RingSpec& spec);

bool is_central(const Poly& f);

/// f != 0 in a filtered ring: x_i*f in f*S and f*x_i in S*f for all i.
bool is_normal(const Poly& f);

/// One-sided exact division: returns q with target == f*q (cofactor_side
/// right) or target == q*f (cofactor_side left); nullopt when target is not
/// such a multiple. Requires a filtered ring.
enum class CofactorSide { left, right };
std::optional<Poly> divide_exact(const Poly& target, const Poly& f, CofactorSide side);

}  // namespace dpr

#endif
