// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "coeff.hpp"

#include <cctype>

namespace dpr {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); p prime and a != 0 mod p.
  std::int64_t t = 0, newt = 1;
  std::int64_t r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(Errc::division_by_zero, "element has no inverse modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31))
    fail(Errc::bad_argument, "prime field characteristic out of range: " + std::to_string(p));
  if (!is_prime_u32(p)) fail(Errc::bad_argument, std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

std::string Field::to_string() const {
  return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s(f);
  if (f.is_prime_field()) {
    long m = v % static_cast<long>(f.characteristic());
    if (m < 0) m += f.characteristic();
    s.r_ = static_cast<std::uint32_t>(m);
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& v) {
  Scalar s(f);
  if (f.is_prime_field()) {
    mpz_class m = v % f.characteristic();
    if (m < 0) m += f.characteristic();
    s.r_ = static_cast<std::uint32_t>(m.get_ui());
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& v) {
  if (f.is_prime_field()) {
    Scalar num = from_mpz(f, v.get_num());
    Scalar den = from_mpz(f, v.get_den());
    return num / den;
  }
  Scalar s(f);
  s.q_ = v;
  s.q_.canonicalize();
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    fail(Errc::field_mismatch,
         "scalars from different fields: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s(field_);
  if (field_.is_prime_field()) {
    std::uint64_t v = std::uint64_t(r_) + o.r_;
    s.r_ = static_cast<std::uint32_t>(v % field_.characteristic());
  } else {
    s.q_ = q_ + o.q_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s(field_);
  if (field_.is_prime_field()) {
    std::uint64_t v = std::uint64_t(r_) * o.r_;
    s.r_ = static_cast<std::uint32_t>(v % field_.characteristic());
  } else {
    s.q_ = q_ * o.q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_prime_field()) {
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "division by zero in " + field_.to_string());
  Scalar s(field_);
  if (field_.is_prime_field()) {
    s.r_ = mod_inverse(r_, field_.characteristic());
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::less(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime_field()) return a.r_ < b.r_;
  return a.q_ < b.q_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail(Errc::bad_literal, "malformed number literal: '" + text + "'");
  mpz_class num(text.substr(num_begin, i - num_begin), 10);
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    if (f.is_prime_field())
      fail(Errc::bad_literal, "fraction literal '" + text + "' not allowed over " + f.to_string());
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) fail(Errc::bad_literal, "malformed number literal: '" + text + "'");
    den = mpz_class(text.substr(den_begin, i - den_begin), 10);
    if (den == 0) fail(Errc::division_by_zero, "zero denominator in literal '" + text + "'");
  }
  if (i != text.size()) fail(Errc::bad_literal, "malformed number literal: '" + text + "'");
  if (neg) num = -num;
  if (f.is_prime_field()) return from_mpz(f, num);
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(f, q);
}

}  // namespace dpr
