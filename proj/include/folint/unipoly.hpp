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
 * @file unipoly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored lowest degree first with structurally-zero
 * trailing entries trimmed. Operations that need a nonzero leading
 * coefficient invert it, so over a tower they may raise a split
 * (see algebraic.hpp).
 */

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "folint/field.hpp"

namespace folint {

template <ExactField K>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }  // NOLINT(google-explicit-constructor)
  UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const K& a) { return UniPoly(std::vector<K>{a}); }
  /// a * t^k
  static UniPoly monomial(const K& a, int k) {
    std::vector<K> c(static_cast<std::size_t>(k) + 1, K(0));
    c.back() = a;
    return UniPoly(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<K>& coeffs() const noexcept { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }
  K lc() const { return c_.empty() ? K(0) : c_.back(); }

  K operator()(const K& t) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly operator-() const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const K& s, const UniPoly& p) {
    std::vector<K> r;
    r.reserve(p.c_.size());
    for (const auto& a : p.c_) r.push_back(s * a);
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const {
    std::vector<K> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(K(static_cast<long>(i)) * c_[i]);
    return UniPoly(std::move(r));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return lc().inverse() * *this;
  }

  /// Trims trailing coefficients that decide to zero. Over a tower this is
  /// the step that raises a split when a leading coefficient is a zero divisor.
  UniPoly decided() const {
    std::vector<K> r = c_;
    while (!r.empty() && decide_zero(r.back())) r.pop_back();
    UniPoly p;
    p.c_ = std::move(r);
    return p;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (structurally_zero(c_[i])) continue;
      std::string coef = to_text(c_[i]);
      const bool negative = coef.size() > 1 && coef[0] == '-' && coef.find_first_of("+- ", 1) == std::string::npos;
      if (negative) coef = coef.substr(1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (i == 0) {
        out += coef;
      } else {
        if (coef != "1") out += (coef.find_first_of("+- ") != std::string::npos ? "(" + coef + ")" : coef) + "*";
        out += var + (i > 1 ? "^" + std::to_string(i) : "");
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && structurally_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Quotient and remainder. The divisor's leading coefficient must be a unit.
template <ExactField K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> divisor = b.decided();
  if (divisor.is_zero()) throw DivisionByZero();
  K inv = divisor.lc().inverse();
  std::vector<K> q(std::max(a.degree() - divisor.degree() + 1, 0), K(0));
  UniPoly<K> r = a;
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    int k = r.degree() - divisor.degree();
    K f = r.lc() * inv;
    q[k] = f;
    std::vector<K> rc = r.coeffs();
    for (int i = 0; i <= divisor.degree(); ++i) rc[i + k] = rc[i + k] - f * divisor.coeff(i);
    rc.pop_back();  // leading term cancels exactly
    r = UniPoly<K>(std::move(rc));
  }
  return {UniPoly<K>(std::move(q)), r};
}

/// Exact quotient; throws InvariantViolation if b does not divide a.
template <ExactField K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.decided().is_zero()) throw InvariantViolation("exact_div: nonzero remainder");
  return q;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <ExactField K>
UniPoly<K> upoly_gcd(const UniPoly<K>& p, const UniPoly<K>& q) {
  UniPoly<K> a = p.decided(), b = q.decided();
  while (!b.is_zero()) {
    UniPoly<K> r = divmod(a, b).second.decided();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s) with s*a = g mod b, g monic.
template <ExactField K>
std::pair<UniPoly<K>, UniPoly<K>> upoly_half_gcdex(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r0 = a.decided(), r1 = b.decided();
  UniPoly<K> s0 = UniPoly<K>::constant(K(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly<K> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = r.decided();
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  K inv = r0.lc().inverse();
  return {inv * r0, inv * s0};
}

/// Squarefree part p / gcd(p, p'), monic. Characteristic zero.
template <ExactField K>
UniPoly<K> upoly_squarefree(const UniPoly<K>& p) {
  UniPoly<K> d = p.decided();
  if (d.is_zero()) throw DivisionByZero();
  if (d.degree() == 0) return UniPoly<K>::constant(K(1));
  UniPoly<K> g = upoly_gcd(d, d.derivative());
  return exact_div(d, g).monic();
}

// ---------------------------------------------------------------------------
// Rational root extraction over Q, by Sturm-sequence bisection on integers.
// ---------------------------------------------------------------------------

namespace detail {

inline int sign_changes(const std::vector<UniPoly<Rational>>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline void integer_roots_in(const std::vector<UniPoly<Rational>>& sturm, const Integer& lo, const Integer& hi,
                             int count, std::vector<Integer>& out) {
  // Invariant: exactly `count` distinct real roots lie in (lo, hi].
  if (count == 0) return;
  if (hi - lo == 1) {
    if (sturm.front()(Rational(hi)).is_zero()) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  int left = sign_changes(sturm, Rational(lo)) - sign_changes(sturm, Rational(mid));
  integer_roots_in(sturm, lo, mid, left, out);
  integer_roots_in(sturm, mid, hi, count - left, out);
}

}  // namespace detail

/// Distinct rational roots of p, increasing.
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
  if (p.is_zero()) throw DivisionByZero();
  if (p.degree() < 1) return {};
  UniPoly<Rational> sf = upoly_squarefree(p);
  const int n = sf.degree();
  // Clear denominators: f has integer coefficients, leading coefficient a.
  Integer den = 1;
  for (const auto& c : sf.coeffs()) den = integer_lcm(den, c.den());
  std::vector<Integer> f;
  for (const auto& c : sf.coeffs()) f.push_back((c * Rational(den)).num());
  const Integer a = f.back();
  // Roots r of f correspond to integer roots z = a*r of the monic g(z) = a^(n-1) f(z/a).
  std::vector<Rational> g(n + 1);
  Integer apow = 1;
  for (int k = n - 1; k >= 0; --k) {
    g[k] = Rational(Integer(f[k] * apow));
    apow *= a;
  }
  g[n] = Rational(1);
  UniPoly<Rational> gp(g);
  Integer bound = 1;
  for (int k = 0; k < n; ++k) {
    Integer m = abs(g[k].num());
    if (m > bound) bound = m;
  }
  bound += 1;
  std::vector<UniPoly<Rational>> sturm{gp, gp.derivative()};
  while (sturm.back().degree() > 0) {
    auto r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }
  const Integer lo = -bound - 1, hi = bound;
  int total = detail::sign_changes(sturm, Rational(lo)) - detail::sign_changes(sturm, Rational(hi));
  std::vector<Integer> zs;
  detail::integer_roots_in(sturm, lo, hi, total, zs);
  std::vector<Rational> roots;
  for (const auto& z : zs) roots.emplace_back(z, a);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace folint
