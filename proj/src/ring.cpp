// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dpr {

int Monomial::degree() const {
  int d = 0;
  for (auto e : e_) d += static_cast<int>(e);
  return d;
}

int Monomial::top_var() const {
  for (int i = static_cast<int>(e_.size()) - 1; i >= 0; --i)
    if (e_[i] != 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.nvars()) - 1; i >= 0; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
  }
  return false;
}

// ---------------------------------------------------------------------------
// RingSpec

struct RingSpec::Impl {
  Field field = Field::rationals();
  std::vector<std::string> names;
  // delta[i][j] for j < i; empty map means zero.
  std::vector<std::vector<TermMap>> delta;
  bool filtered = true;
  bool linear_leading = true;
  bool linear_homogeneous = true;
  ValidationReport validation;
};

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Scalar binom_scalar(const Field& f, unsigned long a, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), a, k);
  return Scalar::from_mpz(f, b);
}

Poly mul_impl(const RingSpec& R, const Poly& f, const Poly& g);

Poly derive_monomial(const RingSpec& R, int i, const Monomial& m) {
  const int n = R.nvars();
  Poly acc(R);
  for (int j = 0; j < i; ++j) {
    std::uint32_t e = m.exp(j);
    if (e == 0) continue;
    if (!R.has_delta(i, j)) continue;
    Poly dj = R.delta(i, j);
    Monomial prefix(static_cast<std::size_t>(n));
    for (int t = 0; t < j; ++t) prefix.exp(t) = m.exp(t);
    Monomial suffix(static_cast<std::size_t>(n));
    for (int t = j + 1; t < i; ++t) suffix.exp(t) = m.exp(t);
    Poly suffix_poly = Poly::monomial(R, suffix, Scalar::one(R.field()));
    for (std::uint32_t s = 0; s < e; ++s) {
      Monomial left = prefix;
      left.exp(j) += s;
      Monomial right(static_cast<std::size_t>(n));
      right.exp(j) = e - 1 - s;
      Poly term = mul_impl(R, Poly::monomial(R, left, Scalar::one(R.field())), dj);
      term = mul_impl(R, term, Poly::monomial(R, right, Scalar::one(R.field())));
      term = mul_impl(R, term, suffix_poly);
      acc = acc + term;
    }
  }
  return acc;
}

Poly apply_derivation_impl(const RingSpec& R, int i, const Poly& f) {
  Poly acc(R);
  for (const auto& [m, c] : f.terms()) acc = acc + derive_monomial(R, i, m).scaled(c);
  return acc;
}

// f restricted to exponent `a` of variable t, with that exponent cleared.
std::map<std::uint32_t, Poly> split_top(const RingSpec& R, const Poly& f, int t) {
  std::map<std::uint32_t, Poly> parts;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t a = m.exp(t);
    Monomial base = m;
    base.exp(t) = 0;
    auto it = parts.find(a);
    if (it == parts.end()) it = parts.emplace(a, Poly(R)).first;
    it->second.add_term(base, c);
  }
  return parts;
}

Poly shift_top(const Poly& f, int t, std::uint32_t e) {
  if (e == 0 || f.is_zero()) return f;
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial shifted = m;
    shifted.exp(t) += e;
    r.add_term(shifted, c);
  }
  return r;
}

// Product by recursion on the top variable: write both factors as polynomials
// in x_t over the subring below t and push x_t powers right with
// x_t^a * b = sum_k C(a,k) D_t^k(b) x_t^{a-k}.
Poly mul_impl(const RingSpec& R, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly::zero(R);
  int t = std::max(f.top_var(), g.top_var());
  if (t < 0) {
    Scalar c = f.terms().begin()->second * g.terms().begin()->second;
    return Poly::constant(R, c);
  }
  auto fparts = split_top(R, f, t);
  auto gparts = split_top(R, g, t);
  Poly acc(R);
  for (const auto& [a, fa] : fparts) {
    for (const auto& [b, gb] : gparts) {
      Poly cur = gb;
      for (std::uint32_t k = 0; k <= a; ++k) {
        if (cur.is_zero()) break;
        Scalar binom = binom_scalar(R.field(), a, k);
        if (!binom.is_zero()) {
          Poly part = mul_impl(R, fa, cur.scaled(binom));
          acc = acc + shift_top(part, t, a - k + b);
        }
        if (k < a) cur = apply_derivation_impl(R, t, cur);
      }
    }
  }
  return acc;
}

ValidationReport run_validation(const RingSpec& spec) {
  ValidationReport rep;
  const int n = spec.nvars();
  auto name = [&](int v) { return spec.names()[v]; };
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!spec.has_delta(i, j)) continue;
      Poly d = spec.delta(i, j);
      if (d.top_var() > j) {
        ValidationViolation v;
        v.i = i;
        v.j = j;
        v.detail = "delta[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " +
                   d.to_string() + " uses a variable above " + name(j);
        rep.violations.push_back(std::move(v));
      }
    }
  }
  // Leibniz compatibility: row i must respect the commutation relation of
  // x_{k+1} and x_{j+1} for every j < k < i.
  for (int i = 2; i < n; ++i) {
    for (int k = 1; k < i; ++k) {
      for (int j = 0; j < k; ++j) {
        Poly dkj = spec.delta(k, j);
        Poly lhs = apply_derivation_impl(spec, i, dkj);
        Poly dik = spec.delta(i, k);
        Poly dij = spec.delta(i, j);
        Poly xk = Poly::variable(spec, k);
        Poly xj = Poly::variable(spec, j);
        Poly rhs = mul_impl(spec, dik, xj) - mul_impl(spec, xj, dik) +
                   mul_impl(spec, xk, dij) - mul_impl(spec, dij, xk);
        if (lhs != rhs) {
          ValidationViolation v;
          v.i = i;
          v.k = k;
          v.j = j;
          v.detail = "row " + std::to_string(i + 1) + " is not compatible with the relation of " +
                     name(k) + " and " + name(j) + ": expected " + rhs.to_string() + ", table gives " +
                     lhs.to_string();
          rep.violations.push_back(std::move(v));
        }
      }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace

RingSpec RingSpec::create(const Field& field, std::vector<std::string> names,
                          const std::map<std::pair<int, int>, TermMap>& entries) {
  const int n = static_cast<int>(names.size());
  if (n < 1) fail(Errc::bad_argument, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& nm : names) {
    if (!valid_identifier(nm)) fail(Errc::bad_argument, "invalid variable name '" + nm + "'");
    if (!seen.insert(nm).second) fail(Errc::bad_argument, "duplicate variable name '" + nm + "'");
  }
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  impl->names = std::move(names);
  impl->delta.resize(n);
  for (int i = 0; i < n; ++i) impl->delta[i].resize(i);
  for (const auto& [ij, tm] : entries) {
    auto [i, j] = ij;
    if (j < 0 || i <= j || i >= n)
      fail(Errc::bad_argument, "derivation table index (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") out of range");
    TermMap clean;
    for (const auto& [m, c] : tm) {
      if (static_cast<int>(m.nvars()) != n)
        fail(Errc::bad_argument, "table entry monomial has wrong variable count");
      if (c.field() != field) fail(Errc::field_mismatch, "table entry scalar from wrong field");
      if (c.is_zero()) continue;
      if (m.top_var() >= i)
        fail(Errc::invalid_spec,
             "delta[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                 "] must lie in the subring below variable " + std::to_string(i + 1));
      clean.emplace(m, c);
    }
    if (!clean.empty()) impl->delta[i][j] = std::move(clean);
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      for (const auto& [m, c] : impl->delta[i][j]) {
        if (m.degree() > 1) impl->filtered = false;
        if (m.exp(j) > 1 || m.top_var() > j) impl->linear_leading = false;
        if (m.degree() != 1) impl->linear_homogeneous = false;
      }
    }
  }
  RingSpec spec;
  spec.impl_ = impl;
  impl->validation = run_validation(spec);
  return spec;
}

const Field& RingSpec::field() const { return impl_->field; }
int RingSpec::nvars() const { return static_cast<int>(impl_->names.size()); }
const std::vector<std::string>& RingSpec::names() const { return impl_->names; }

bool RingSpec::has_delta(int i, int j) const {
  if (i < 1 || i >= nvars() || j < 0 || j >= i) return false;
  return !impl_->delta[i][j].empty();
}

Poly RingSpec::delta(int i, int j) const {
  if (i < 1 || i >= nvars() || j < 0 || j >= i)
    fail(Errc::variable_out_of_range, "derivation table index out of range");
  return Poly(*this, impl_->delta[i][j]);
}

bool RingSpec::filtered() const { return impl_->filtered; }
bool RingSpec::linear_leading_shape() const { return impl_->linear_leading; }
bool RingSpec::linear_homogeneous() const { return impl_->linear_homogeneous; }

const ValidationReport& RingSpec::validation() const { return impl_->validation; }

RingSpec RingSpec::prefix(int k) const {
  if (k < 1 || k > nvars()) fail(Errc::bad_argument, "prefix size out of range");
  std::vector<std::string> names(impl_->names.begin(), impl_->names.begin() + k);
  std::map<std::pair<int, int>, TermMap> entries;
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      if (impl_->delta[i][j].empty()) continue;
      TermMap tm;
      for (const auto& [m, c] : impl_->delta[i][j]) {
        std::vector<std::uint32_t> exps(m.exps().begin(), m.exps().begin() + k);
        tm.emplace(Monomial(std::move(exps)), c);
      }
      entries[{i, j}] = std::move(tm);
    }
  }
  return create(impl_->field, std::move(names), entries);
}

bool RingSpec::same_ring(const RingSpec& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->field == o.impl_->field && impl_->names == o.impl_->names &&
         impl_->delta == o.impl_->delta;
}

int RingSpec::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (impl_->names[i] == name) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(RingSpec ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [m, c] : terms) {
    if (!c.is_zero()) terms_.emplace(m, c);
  }
}

Poly Poly::constant(const RingSpec& r, const Scalar& c) {
  Poly p(r);
  p.add_term(Monomial(static_cast<std::size_t>(r.nvars())), c);
  return p;
}

Poly Poly::variable(const RingSpec& r, int index, std::uint32_t exp) {
  if (index < 0 || index >= r.nvars())
    fail(Errc::variable_out_of_range, "variable index out of range");
  Poly p(r);
  p.add_term(Monomial::var(static_cast<std::size_t>(r.nvars()), index, exp), Scalar::one(r.field()));
  return p;
}

Poly Poly::monomial(const RingSpec& r, const Monomial& m, const Scalar& c) {
  Poly p(r);
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || top_var() < 0; }

int Poly::degree() const {
  if (terms_.empty()) return kZeroPolyDegree;
  return terms_.rbegin()->first.degree();
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp(var)));
  return d;
}

int Poly::top_var() const {
  int t = -1;
  for (const auto& [m, c] : terms_) t = std::max(t, m.top_var());
  return t;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(Errc::zero_argument, "leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& Poly::leading_coeff() const {
  if (terms_.empty()) fail(Errc::zero_argument, "leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

std::pair<Monomial, Scalar> Poly::leading_term() const {
  return {leading_monomial(), leading_coeff()};
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.field() != ring_.field()) fail(Errc::field_mismatch, "coefficient from wrong field");
  if (static_cast<int>(m.nvars()) != ring_.nvars())
    fail(Errc::bad_argument, "monomial has wrong variable count");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

namespace {
void require_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring().same_ring(b.ring()))
    fail(Errc::ring_mismatch, "operands belong to different rings");
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(*this, o);
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  require_same_ring(*this, o);
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) fail(Errc::zero_argument, "cannot normalize the zero polynomial");
  return scaled(leading_coeff().inverse());
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_.same_ring(o.ring_)) return false;
  return terms_ == o.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Scalar c = it->second;
    bool neg = false;
    if (!ring_.field().is_prime_field() && c.rational() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int v = 0; v < ring_.nvars(); ++v) {
      if (m.exp(v) == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.names()[v];
      if (m.exp(v) > 1) mono += "^" + std::to_string(m.exp(v));
    }
    if (mono.empty()) {
      out << c.to_string();
    } else if (c.is_one()) {
      out << mono;
    } else {
      out << c.to_string() << "*" << mono;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Ring operations

Poly mul(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  return mul_impl(f.ring(), f, g);
}

Poly apply_derivation(const RingSpec& spec, int i, const Poly& f) {
  if (i < 0 || i >= spec.nvars()) fail(Errc::variable_out_of_range, "derivation index out of range");
  if (!f.ring().same_ring(spec)) fail(Errc::ring_mismatch, "polynomial from a different ring");
  if (f.top_var() >= i)
    fail(Errc::variable_out_of_range,
         "polynomial is outside the domain of derivation " + std::to_string(i + 1));
  return apply_derivation_impl(spec, i, f);
}

ValidationReport validate_spec(const RingSpec& spec) { return spec.validation(); }

bool is_central(const Poly& f) {
  const RingSpec& R = f.ring();
  for (int i = 0; i < R.nvars(); ++i) {
    Poly xi = Poly::variable(R, i);
    if (mul(f, xi) != mul(xi, f)) return false;
  }
  return true;
}

std::optional<Poly> divide_exact(const Poly& target, const Poly& f, CofactorSide side) {
  const RingSpec& R = f.ring();
  if (!R.filtered())
    fail(Errc::unfiltered_ring, "one-sided division requires a filtered derivation table");
  if (f.is_zero()) fail(Errc::zero_argument, "division by the zero polynomial");
  require_same_ring(target, f);
  Poly q(R);
  Poly t = target;
  const Monomial& mf = f.leading_monomial();
  const Scalar& cf = f.leading_coeff();
  while (!t.is_zero()) {
    const Monomial& mt = t.leading_monomial();
    if (!mf.divides(mt)) return std::nullopt;
    Scalar c = t.leading_coeff() / cf;
    Monomial m = mt / mf;
    Poly cm = Poly::monomial(R, m, c);
    q.add_term(m, c);
    t = side == CofactorSide::right ? t - mul(f, cm) : t - mul(cm, f);
  }
  return q;
}

bool is_normal(const Poly& f) {
  if (f.is_zero()) fail(Errc::zero_argument, "normality of the zero polynomial");
  const RingSpec& R = f.ring();
  if (!R.filtered())
    fail(Errc::unfiltered_ring, "normality test requires a filtered derivation table");
  for (int i = 0; i < R.nvars(); ++i) {
    Poly xi = Poly::variable(R, i);
    if (!divide_exact(mul(xi, f), f, CofactorSide::right)) return false;
    if (!divide_exact(mul(f, xi), f, CofactorSide::left)) return false;
  }
  return true;
}

}  // namespace dpr
