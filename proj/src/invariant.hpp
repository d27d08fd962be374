// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_INVARIANT_HPP
#define DPR_INVARIANT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace dpr {

/// Dense univariate polynomial over a field, coefficients listed by degree.
class UniPoly {
 public:
  explicit UniPoly(const Field& f) : field_(f) {}
  UniPoly(const Field& f, std::vector<Scalar> coeffs);

  static UniPoly zero(const Field& f) { return UniPoly(f); }
  static UniPoly constant(const Field& f, const Scalar& c);
  static UniPoly monomial(const Field& f, int deg, const Scalar& c);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Scalar coeff(int k) const;
  Scalar leading_coeff() const;
  bool is_monic() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly scaled(const Scalar& s) const;
  UniPoly monic() const;
  bool operator==(const UniPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Formal derivative.
  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;

  std::string to_string(const std::string& var = "x1") const;

  /// Deterministic total order (degree, then coefficients from the top).
  static bool less(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

/// Euclidean division; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);
/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly uni_pow(const UniPoly& a, int e);

/// Conversion with the x1-axis of a ring; poly must use no other variable.
UniPoly to_unipoly(const Poly& p);
Poly from_unipoly(const UniPoly& u, const RingSpec& ring);

/// Derivation of F[x1] determined by the image of x1; scalars map to zero.
struct UniDerivation {
  UniPoly image;
  /// f'(x1) * image.
  UniPoly apply(const UniPoly& f) const;
};

/// One derivation per ring variable above the first, with image delta[i][1].
std::vector<UniDerivation> restrict_derivations(const RingSpec& spec);

/// (f) is invariant iff f divides every derivative image of f.
bool invariant_check(const UniPoly& f, const std::vector<UniDerivation>& ds);

/// Squarefree decomposition of a monic polynomial; handles positive
/// characteristic via p-th roots. Product of part^mult reconstructs f.
std::vector<std::pair<UniPoly, int>> factor_squarefree(const UniPoly& f);

/// Full irreducible factorization over a prime field (squarefree split plus
/// Berlekamp null-space splitting); multiset product equals f.
std::vector<UniPoly> factor_berlekamp(const UniPoly& f);

struct UniFactorization {
  std::vector<std::pair<UniPoly, int>> factors;  // distinct monic irreducibles
  bool complete = true;
  std::string note;
};

/// Over F_p: complete. Over Q: squarefree plus rational-root extraction;
/// a remaining nonlinear cofactor leaves the result incomplete.
UniFactorization factor_for_divisors(const UniPoly& f);

/// Monic generators of the maximal proper invariant ideals containing (f).
/// Requires f monic invariant of positive degree and a complete factorization.
std::vector<UniPoly> maximal_invariant(const UniPoly& f, const std::vector<UniDerivation>& ds);

struct InvariantFactorReport {
  UniPoly input;
  std::vector<UniPoly> sigma_m;
  std::vector<int> exponents;  // parallel to sigma_m
  bool complete = false;
  std::vector<std::string> notes;

  InvariantFactorReport() : input(Field::rationals()) {}
};

/// Factorization of f into maximal invariant ideal generators with
/// exponents, verified by exact product reconstruction.
InvariantFactorReport invariant_factorization(const UniPoly& f,
                                              const std::vector<UniDerivation>& ds);

}  // namespace dpr

#endif
