// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "invariant.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace dpr {

UniPoly::UniPoly(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const Scalar& s : c_)
    if (s.field() != field_) fail(Errc::field_mismatch, "coefficient from wrong field");
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Field& f, const Scalar& c) {
  return UniPoly(f, std::vector<Scalar>{c});
}

UniPoly UniPoly::monomial(const Field& f, int deg, const Scalar& c) {
  if (deg < 0) fail(Errc::bad_argument, "negative degree");
  std::vector<Scalar> v(deg + 1, Scalar::zero(f));
  v[deg] = c;
  return UniPoly(f, std::move(v));
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar::zero(field_);
  return c_[k];
}

Scalar UniPoly::leading_coeff() const {
  if (c_.empty()) fail(Errc::zero_argument, "leading coefficient of zero");
  return c_.back();
}

bool UniPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

UniPoly UniPoly::operator+(const UniPoly& o) const {
  if (field_ != o.field_) fail(Errc::field_mismatch, "mixed fields");
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Scalar> v = c_;
  for (Scalar& s : v) s = -s;
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (field_ != o.field_) fail(Errc::field_mismatch, "mixed fields");
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  }
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> v = c_;
  for (Scalar& x : v) x = x * s;
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) fail(Errc::zero_argument, "cannot normalize zero");
  return scaled(leading_coeff().inverse());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<Scalar> v(c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * Scalar::from_int(field_, static_cast<long>(i));
  return UniPoly(field_, std::move(v));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = c_[k];
    if (c.is_zero()) continue;
    bool neg = false;
    if (!field_.is_prime_field() && c.rational() < 0) {
      neg = true;
      c = -c;
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (k > 0) {
      mono = var;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += c.to_string() + "*" + mono;
  }
  return out;
}

bool UniPoly::less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.c_[k] != b.c_[k]) return Scalar::less(a.c_[k], b.c_[k]);
  }
  return false;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  const Field& f = a.field();
  if (f != b.field()) fail(Errc::field_mismatch, "mixed fields");
  UniPoly r = a;
  if (a.degree() < b.degree()) return {UniPoly(f), r};
  std::vector<Scalar> q(a.degree() - b.degree() + 1, Scalar::zero(f));
  Scalar inv = b.leading_coeff().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Scalar c = r.leading_coeff() * inv;
    q[shift] = c;
    r = r - (b * UniPoly::monomial(f, shift, c));
  }
  return {UniPoly(f, std::move(q)), r};
}

bool divides(const UniPoly& b, const UniPoly& a) { return divmod(a, b).second.is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

UniPoly uni_pow(const UniPoly& a, int e) {
  if (e < 0) fail(Errc::bad_argument, "negative exponent");
  UniPoly acc = UniPoly::constant(a.field(), Scalar::one(a.field()));
  for (int i = 0; i < e; ++i) acc = acc * a;
  return acc;
}

UniPoly to_unipoly(const Poly& p) {
  if (p.top_var() > 0) fail(Errc::bad_argument, "polynomial uses a variable above the first");
  const Field& f = p.ring().field();
  std::vector<Scalar> v(p.is_zero() ? 0 : p.degree() + 1, Scalar::zero(f));
  for (const auto& [m, c] : p.terms()) v[m.exp(0)] = c;
  return UniPoly(f, std::move(v));
}

Poly from_unipoly(const UniPoly& u, const RingSpec& ring) {
  Poly p(ring);
  for (int k = 0; k <= u.degree(); ++k) {
    if (u.coeffs()[k].is_zero()) continue;
    p.add_term(Monomial::var(static_cast<std::size_t>(ring.nvars()), 0, k), u.coeffs()[k]);
  }
  return p;
}

UniPoly UniDerivation::apply(const UniPoly& f) const { return f.derivative() * image; }

std::vector<UniDerivation> restrict_derivations(const RingSpec& spec) {
  std::vector<UniDerivation> out;
  for (int i = 1; i < spec.nvars(); ++i) {
    Poly d = spec.delta(i, 0);
    if (d.top_var() > 0)
      fail(Errc::invalid_spec,
           "delta[" + std::to_string(i + 1) + "][1] must be supported on the first variable");
    out.push_back(UniDerivation{to_unipoly(d)});
  }
  return out;
}

bool invariant_check(const UniPoly& f, const std::vector<UniDerivation>& ds) {
  if (f.is_zero()) fail(Errc::zero_argument, "invariance of the zero polynomial");
  for (const auto& d : ds) {
    if (!divides(f, d.apply(f))) return false;
  }
  return true;
}

namespace {

// g(x^p) -> g-hat with (g-hat)^p = f; valid over F_p where a^(1/p) = a.
UniPoly pth_root(const UniPoly& f) {
  const Field& k = f.field();
  std::uint32_t p = k.characteristic();
  std::vector<Scalar> v(f.degree() / p + 1, Scalar::zero(k));
  for (int i = 0; i <= f.degree(); ++i) {
    const Scalar& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (i % static_cast<int>(p) != 0)
      fail(Errc::internal, "polynomial is not a p-th power");
    v[i / p] = c;
  }
  return UniPoly(k, std::move(v));
}

void sqfree_rec(const UniPoly& f, int scale, std::vector<std::pair<UniPoly, int>>& out) {
  if (f.degree() < 1) return;
  const Field& k = f.field();
  UniPoly fp = f.derivative();
  if (fp.is_zero()) {
    // Entire polynomial is a p-th power.
    sqfree_rec(pth_root(f), scale * static_cast<int>(k.characteristic()), out);
    return;
  }
  UniPoly c = gcd(f, fp);
  UniPoly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    // Leftover factors whose multiplicity is divisible by the characteristic.
    sqfree_rec(pth_root(c), scale * static_cast<int>(k.characteristic()), out);
  }
}

// x^(p^i) mod f for i = 0..deg-1 gives the Frobenius matrix.
UniPoly powmod(const UniPoly& base, mpz_class e, const UniPoly& mod) {
  const Field& k = base.field();
  UniPoly acc = UniPoly::constant(k, Scalar::one(k));
  UniPoly b = divmod(base, mod).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = divmod(acc * b, mod).second;
    e >>= 1;
    if (e > 0) b = divmod(b * b, mod).second;
  }
  return acc;
}

// Berlekamp splitting of a monic squarefree polynomial over F_p.
std::vector<UniPoly> berlekamp_squarefree(const UniPoly& f) {
  const Field& k = f.field();
  const std::uint32_t p = k.characteristic();
  const int d = f.degree();
  if (d == 1) return {f};
  // Images x^(p*i) mod f of the power basis under Frobenius.
  UniPoly xp = powmod(UniPoly::monomial(k, 1, Scalar::one(k)), mpz_class(p), f);
  std::vector<UniPoly> frob;
  UniPoly cur = UniPoly::constant(k, Scalar::one(k));
  for (int i = 0; i < d; ++i) {
    frob.push_back(cur);
    cur = divmod(cur * xp, f).second;
  }
  // Kernel of (Frobenius - identity): mt[r][c] = coeff of x^r in x^(p*c) - x^c.
  Matrix mt(k, static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    std::vector<Scalar> row(d, Scalar::zero(k));
    for (int c = 0; c < d; ++c) {
      row[c] = frob[c].coeff(r);
      if (r == c) row[c] = row[c] - Scalar::one(k);
    }
    mt.add_row(std::move(row));
  }
  std::vector<std::size_t> pivots = mt.rref();
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<UniPoly> kernel;
  for (int free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(d, Scalar::zero(k));
    v[free_col] = Scalar::one(k);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -mt.row(r)[free_col];
    kernel.push_back(UniPoly(k, std::move(v)));
  }
  const std::size_t nfactors = kernel.size();
  std::vector<UniPoly> factors{f};
  if (nfactors <= 1) return factors;
  for (const UniPoly& v : kernel) {
    if (factors.size() >= nfactors) break;
    if (v.degree() < 1) continue;  // the constant kernel vector splits nothing
    std::vector<UniPoly> next;
    for (const UniPoly& u : factors) {
      UniPoly rem = u;
      std::vector<UniPoly> pieces;
      for (std::uint32_t s = 0; s < p && rem.degree() > 0; ++s) {
        UniPoly g = gcd(rem, v - UniPoly::constant(k, Scalar::from_int(k, s)));
        if (g.degree() > 0 && g.degree() < rem.degree()) {
          pieces.push_back(g);
          rem = divmod(rem, g).first;
        } else if (g.degree() == rem.degree()) {
          break;
        }
      }
      if (rem.degree() > 0) pieces.push_back(rem);
      for (UniPoly& piece : pieces) next.push_back(piece.monic());
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end(), UniPoly::less);
  return factors;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> factor_squarefree(const UniPoly& f) {
  if (!f.is_monic()) fail(Errc::not_monic, "squarefree decomposition wants a monic input");
  std::vector<std::pair<UniPoly, int>> out;
  sqfree_rec(f, 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return UniPoly::less(a.first, b.first);
  });
  return out;
}

std::vector<UniPoly> factor_berlekamp(const UniPoly& f) {
  if (!f.field().is_prime_field())
    fail(Errc::bad_argument, "Berlekamp factorization works over prime fields only");
  if (!f.is_monic()) fail(Errc::not_monic, "factorization wants a monic input");
  std::vector<UniPoly> out;
  for (const auto& [part, mult] : factor_squarefree(f)) {
    for (const UniPoly& q : berlekamp_squarefree(part)) {
      for (int i = 0; i < mult; ++i) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), UniPoly::less);
  return out;
}

namespace {

// All positive divisors of |n|, aborted when n is too large to enumerate.
bool divisors_of(const mpz_class& n_in, std::vector<mpz_class>& out) {
  mpz_class n = abs(n_in);
  if (n == 0) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 60) return false;  // desk scale only
  unsigned long v = mpz_get_ui(n.get_mpz_t());
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      out.emplace_back(v / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return true;
}

// Rational roots of a monic squarefree part over Q, with the leftover cofactor.
bool extract_rational_roots(const UniPoly& part, std::vector<UniPoly>& linears, UniPoly& cofactor) {
  const Field& Q = part.field();
  cofactor = part;
  // Root zero first.
  while (cofactor.degree() > 0 && cofactor.coeffs()[0].is_zero()) {
    linears.push_back(UniPoly::monomial(Q, 1, Scalar::one(Q)));
    std::vector<Scalar> v(cofactor.coeffs().begin() + 1, cofactor.coeffs().end());
    cofactor = UniPoly(Q, std::move(v));
  }
  if (cofactor.degree() < 1) return true;
  // Clear denominators: candidates a/b with a | constant, b | leading.
  mpz_class lcm_den = 1;
  for (const Scalar& c : cofactor.coeffs()) lcm_den = lcm(lcm_den, c.rational().get_den());
  mpz_class c0 = mpq_class(cofactor.coeffs()[0].rational() * lcm_den).get_num();
  mpz_class cl = mpq_class(cofactor.leading_coeff().rational() * lcm_den).get_num();
  std::vector<mpz_class> nums, dens;
  if (!divisors_of(c0, nums) || !divisors_of(cl, dens)) return false;
  for (const mpz_class& a : nums) {
    for (const mpz_class& b : dens) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        if (cofactor.degree() < 1) return true;
        mpq_class r(sign * a, b);
        r.canonicalize();
        Scalar root = Scalar::from_mpq(Q, r);
        while (cofactor.degree() > 0 && cofactor.eval(root).is_zero()) {
          UniPoly lin = UniPoly::monomial(Q, 1, Scalar::one(Q)) -
                        UniPoly::constant(Q, root);
          linears.push_back(lin);
          cofactor = divmod(cofactor, lin).first;
        }
      }
    }
  }
  return true;
}

}  // namespace

UniFactorization factor_for_divisors(const UniPoly& f) {
  if (!f.is_monic()) fail(Errc::not_monic, "factorization wants a monic input");
  UniFactorization out;
  if (f.field().is_prime_field()) {
    std::vector<UniPoly> irr = factor_berlekamp(f);
    for (const UniPoly& q : irr) {
      if (!out.factors.empty() && out.factors.back().first == q)
        ++out.factors.back().second;
      else
        out.factors.emplace_back(q, 1);
    }
    return out;
  }
  for (const auto& [part, mult] : factor_squarefree(f)) {
    std::vector<UniPoly> linears;
    UniPoly cofactor(f.field());
    bool enumerated = extract_rational_roots(part, linears, cofactor);
    std::sort(linears.begin(), linears.end(), UniPoly::less);
    for (const UniPoly& lin : linears) {
      if (!out.factors.empty() && out.factors.back().first == lin)
        out.factors.back().second += mult;
      else
        out.factors.emplace_back(lin, mult);
    }
    if (!enumerated) {
      out.complete = false;
      out.note = "rational root search aborted: coefficients too large to enumerate divisors";
      return out;
    }
    if (cofactor.degree() >= 2) {
      out.complete = false;
      out.note = "irrational factor of degree " + std::to_string(cofactor.degree()) +
                 " left unfactored; full factorization over Q is out of scope";
      return out;
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return UniPoly::less(a.first, b.first); });
  return out;
}

namespace {

constexpr std::size_t kMaxDistinctFactors = 12;

std::vector<UniPoly> proper_invariant_divisors(const UniPoly& f, const UniFactorization& fac,
                                               const std::vector<UniDerivation>& ds) {
  if (fac.factors.size() > kMaxDistinctFactors)
    fail(Errc::too_many_factors,
         "divisor enumeration capped at " + std::to_string(kMaxDistinctFactors) +
             " distinct irreducible factors");
  std::size_t count = 1;
  for (const auto& [q, mult] : fac.factors) {
    count *= static_cast<std::size_t>(mult) + 1;
    if (count > 1u << 20)
      fail(Errc::too_many_factors, "divisor lattice too large to enumerate");
  }
  std::vector<UniPoly> divisors;
  std::vector<int> exp(fac.factors.size(), 0);
  while (true) {
    UniPoly g = UniPoly::constant(f.field(), Scalar::one(f.field()));
    for (std::size_t t = 0; t < exp.size(); ++t) g = g * uni_pow(fac.factors[t].first, exp[t]);
    if (g.degree() >= 1 && invariant_check(g, ds)) divisors.push_back(g);
    std::size_t t = 0;
    while (t < exp.size()) {
      if (++exp[t] <= fac.factors[t].second) break;
      exp[t] = 0;
      ++t;
    }
    if (t == exp.size()) break;
  }
  std::sort(divisors.begin(), divisors.end(), UniPoly::less);
  return divisors;
}

// (g) is maximal iff no other proper invariant divisor strictly divides g.
std::vector<UniPoly> maximal_of(const std::vector<UniPoly>& divisors) {
  std::vector<UniPoly> maximal;
  for (const UniPoly& g : divisors) {
    bool is_max = true;
    for (const UniPoly& h : divisors) {
      if (h != g && divides(h, g)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(g);
  }
  return maximal;
}

}  // namespace

std::vector<UniPoly> maximal_invariant(const UniPoly& f, const std::vector<UniDerivation>& ds) {
  if (!f.is_monic() || f.degree() < 1)
    fail(Errc::not_monic, "input must be monic of positive degree");
  if (!invariant_check(f, ds))
    fail(Errc::not_invariant, "the ideal of " + f.to_string() + " is not invariant");
  UniFactorization fac = factor_for_divisors(f);
  if (!fac.complete) fail(Errc::incomplete_factorization, fac.note);
  return maximal_of(proper_invariant_divisors(f, fac, ds));
}

InvariantFactorReport invariant_factorization(const UniPoly& f,
                                              const std::vector<UniDerivation>& ds) {
  InvariantFactorReport rep;
  rep.input = f;
  if (!f.is_monic() || f.degree() < 1)
    fail(Errc::not_monic, "input must be monic of positive degree");
  if (!invariant_check(f, ds))
    fail(Errc::not_invariant, "the ideal of " + f.to_string() + " is not invariant");
  UniFactorization fac = factor_for_divisors(f);
  if (!fac.complete) {
    rep.complete = false;
    rep.notes.push_back(fac.note);
    return rep;
  }
  rep.sigma_m = maximal_of(proper_invariant_divisors(f, fac, ds));
  rep.exponents.assign(rep.sigma_m.size(), 0);
  // Peel in ascending order; maximal invariant divisors are pairwise coprime,
  // so the multiset of exponents does not depend on the peeling order.
  UniPoly g = f;
  while (g.degree() >= 1) {
    bool peeled = false;
    for (std::size_t t = 0; t < rep.sigma_m.size(); ++t) {
      if (divides(rep.sigma_m[t], g)) {
        g = divmod(g, rep.sigma_m[t]).first;
        ++rep.exponents[t];
        peeled = true;
        break;
      }
    }
    if (!peeled) {
      rep.complete = false;
      rep.notes.push_back("peeling stalled: no maximal invariant divisor divides " + g.to_string());
      return rep;
    }
  }
  UniPoly check = UniPoly::constant(f.field(), Scalar::one(f.field()));
  for (std::size_t t = 0; t < rep.sigma_m.size(); ++t)
    check = check * uni_pow(rep.sigma_m[t], rep.exponents[t]);
  if (check != f) {
    rep.complete = false;
    rep.notes.push_back("product reconstruction failed");
    return rep;
  }
  rep.complete = true;
  return rep;
}

}  // namespace dpr
