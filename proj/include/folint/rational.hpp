// Copyright 2026 The folint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals on top of GMP.
 *
 * Values are always kept in lowest terms with a positive denominator, so
 * structural equality is numeric equality.
 */

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "folint/errors.hpp"

namespace folint {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading '-').
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return Rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
  }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Smallest integer not below the value.
  Integer ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  Rational pow(unsigned e) const {
    Rational r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

  std::string to_string() const { return v_.get_str(10); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  mpq_class v_{0};
};

/// Exact square root of a rational, if it has one.
inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  if (q.is_zero()) return Rational(0);
  Integer n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

inline Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer integer_lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace folint
