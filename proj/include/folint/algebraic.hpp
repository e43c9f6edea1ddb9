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
 * @file algebraic.hpp
 * @brief Dynamic algebraic extensions of Q (D5-style dynamic evaluation).
 *
 * A Tower is a chain Q = K0 < K1 < ... < Kn with K_k = K_{k-1}[t_k]/(m_k),
 * every m_k monic and squarefree over K_{k-1} but not necessarily
 * irreducible, so K_n is a finite product of number fields. A Number is an
 * element of K_n in reduced form.
 *
 * Inverting a zero divisor does not fail silently: it raises
 * ZeroDivisorEncountered carrying the factor gcd(a, m_k). The caller then
 * splits the tower into the two coprime branches and reruns its
 * computation on each (split_tower / on_branches below).
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folint/field.hpp"
#include "folint/unipoly.hpp"

namespace folint {

/// Recursive dense representation. level 0 is a rational constant; level k > 0
/// is a polynomial in t_k of degree >= 1 whose coefficients have level < k.
struct Repr {
  int level = 0;
  Rational q;
  std::vector<Repr> c;

  bool is_zero() const noexcept { return level == 0 && q.is_zero(); }
  friend bool operator==(const Repr& a, const Repr& b) {
    if (a.level != b.level) return false;
    return a.level == 0 ? a.q == b.q : a.c == b.c;
  }
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower {
 public:
  struct Level {
    std::string name;
    std::vector<Repr> modulus;  // monic, coefficients of level < own level
    int degree() const { return static_cast<int>(modulus.size()) - 1; }
  };

  Tower() = default;
  explicit Tower(std::vector<Level> levels) : levels_(std::move(levels)) {}

  int depth() const noexcept { return static_cast<int>(levels_.size()); }
  /// Levels are numbered from 1.
  const Level& level(int k) const { return levels_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  /// Dimension of the tower algebra over Q.
  int dimension() const {
    int d = 1;
    for (const auto& l : levels_) d *= l.degree();
    return d;
  }

 private:
  std::vector<Level> levels_;
};

namespace detail {

inline Repr r_const(const Rational& q) { return Repr{0, q, {}}; }

inline Repr r_normalize(int level, std::vector<Repr> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) return r_const(Rational(0));
  if (c.size() == 1) return std::move(c.front());
  return Repr{level, Rational(0), std::move(c)};
}

inline Repr r_neg(const Repr& a) {
  if (a.level == 0) return r_const(-a.q);
  Repr r = a;
  for (auto& x : r.c) x = r_neg(x);
  return r;
}

inline Repr r_add(const Repr& a, const Repr& b) {
  if (a.level == 0 && b.level == 0) return r_const(a.q + b.q);
  if (a.level < b.level) return r_add(b, a);
  std::vector<Repr> c = a.c;
  if (a.level > b.level) {
    c[0] = r_add(c[0], b);
  } else {
    if (b.c.size() > c.size()) c.resize(b.c.size(), r_const(Rational(0)));
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = r_add(c[i], b.c[i]);
  }
  return r_normalize(a.level, std::move(c));
}

Repr r_mul(const Repr& a, const Repr& b, const Tower& t);

/// Reduces a polynomial in t_level (coefficients of lower level) modulo m_level.
inline Repr r_reduce_poly(int level, std::vector<Repr> c, const Tower& t) {
  const auto& m = t.level(level).modulus;
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(c.size()) - 1 >= dm && !c.empty()) {
    if (c.back().is_zero()) {
      c.pop_back();
      continue;
    }
    const int k = static_cast<int>(c.size()) - 1 - dm;
    Repr f = c.back();
    for (int i = 0; i < dm; ++i) c[i + k] = r_add(c[i + k], r_neg(r_mul(f, m[i], t)));
    c.pop_back();
  }
  return r_normalize(level, std::move(c));
}

inline Repr r_mul(const Repr& a, const Repr& b, const Tower& t) {
  if (a.level == 0 && b.level == 0) return r_const(a.q * b.q);
  if (a.is_zero() || b.is_zero()) return r_const(Rational(0));
  if (a.level < b.level) return r_mul(b, a, t);
  if (a.level > b.level) {
    std::vector<Repr> c;
    c.reserve(a.c.size());
    for (const auto& x : a.c) c.push_back(r_mul(x, b, t));
    return r_normalize(a.level, std::move(c));
  }
  std::vector<Repr> c(a.c.size() + b.c.size() - 1, r_const(Rational(0)));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = r_add(c[i + j], r_mul(a.c[i], b.c[j], t));
  return r_reduce_poly(a.level, std::move(c), t);
}

/// Re-reduces a representation under a (possibly split) tower.
inline Repr r_rebase(const Repr& a, const Tower& t) {
  if (a.level == 0) return a;
  std::vector<Repr> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.push_back(r_rebase(x, t));
  return r_reduce_poly(a.level, std::move(c), t);
}

inline std::string r_text(const Repr& a, const Tower* t) {
  if (a.level == 0) return a.q.to_string();
  const std::string var = t ? t->level(a.level).name : "t" + std::to_string(a.level);
  std::string out;
  for (int i = static_cast<int>(a.c.size()) - 1; i >= 0; --i) {
    const Repr& x = a.c[static_cast<std::size_t>(i)];
    if (x.is_zero()) continue;
    std::string coef = r_text(x, t);
    std::string mono = i == 0 ? "" : var + (i > 1 ? "^" + std::to_string(i) : "");
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (x.level == 0 && x.q.is_one()) {
      term = mono;
    } else if (x.level == 0 && x.q == Rational(-1)) {
      term = "-" + mono;
    } else {
      bool compound = x.level > 0 || coef.find_first_of("+ ") != std::string::npos;
      term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace detail

class Number;

/// Raised when an element that must be inverted is a nonzero zero divisor.
/// factor = gcd(a, m_level), monic, a proper factor of the modulus.
class ZeroDivisorEncountered : public Error {
 public:
  ZeroDivisorEncountered(TowerPtr tower, int level, std::vector<Repr> factor)
      : Error("zero divisor encountered at level " + std::to_string(level)),
        tower_(std::move(tower)),
        level_(level),
        factor_(std::move(factor)) {}

  const TowerPtr& tower() const noexcept { return tower_; }
  int level() const noexcept { return level_; }
  const std::vector<Repr>& factor() const noexcept { return factor_; }

 private:
  TowerPtr tower_;
  int level_;
  std::vector<Repr> factor_;
};

/// Element of a tower algebra. A null tower means "plain rational", which
/// mixes freely with elements of any tower.
class Number {
 public:
  Number() = default;
  Number(long v) : r_(detail::r_const(Rational(v))) {}               // NOLINT(google-explicit-constructor)
  Number(const Rational& q) : r_(detail::r_const(q)) {}              // NOLINT(google-explicit-constructor)
  Number(TowerPtr tower, Repr r) : tower_(std::move(tower)), r_(std::move(r)) {
    if (!tower_ && r_.level != 0) throw InvariantViolation("non-rational Number without a tower");
  }

  /// The generator t_level of the tower.
  static Number generator(const TowerPtr& tower, int level) {
    std::vector<Repr> c{detail::r_const(Rational(0)), detail::r_const(Rational(1))};
    if (tower->level(level).degree() == 1) {
      // t = -m_0 when the modulus is linear.
      return Number(tower, detail::r_neg(tower->level(level).modulus[0]));
    }
    return Number(tower, Repr{level, Rational(0), std::move(c)});
  }

  const TowerPtr& tower() const noexcept { return tower_; }
  const Repr& repr() const noexcept { return r_; }
  bool is_rational() const noexcept { return r_.level == 0; }
  std::optional<Rational> rational() const {
    if (r_.level == 0) return r_.q;
    return std::nullopt;
  }

  Number operator-() const { return Number(tower_, detail::r_neg(r_)); }
  friend Number operator+(const Number& a, const Number& b) {
    return Number(common(a, b), detail::r_add(a.r_, b.r_));
  }
  friend Number operator-(const Number& a, const Number& b) { return a + (-b); }
  friend Number operator*(const Number& a, const Number& b) {
    TowerPtr t = common(a, b);
    if (!t) return Number(a.r_.q * b.r_.q);
    return Number(t, detail::r_mul(a.r_, b.r_, *t));
  }
  friend bool operator==(const Number& a, const Number& b) { return a.r_ == b.r_; }

  /// Multiplicative inverse. Throws DivisionByZero for 0 and
  /// ZeroDivisorEncountered for a nonzero zero divisor.
  inline Number inverse() const;

  /// Same value placed in another tower sharing the lower levels (after a
  /// split or an extension).
  Number rebase(const TowerPtr& t) const {
    if (r_.level == 0) return Number(t, r_);
    return Number(t, detail::r_rebase(r_, *t));
  }

  std::string to_string() const { return detail::r_text(r_, tower_.get()); }

 private:
  static TowerPtr common(const Number& a, const Number& b) {
    if (!a.tower_) return b.tower_;
    if (!b.tower_ || a.tower_ == b.tower_) return a.tower_;
    throw InvariantViolation("mixing Numbers from different towers");
  }

  TowerPtr tower_;
  Repr r_;
};

inline bool structurally_zero(const Number& a) noexcept { return a.repr().is_zero(); }
/// Semantic zero test. A nonzero zero divisor raises a split.
inline bool decide_zero(const Number& a) {
  if (a.repr().is_zero()) return true;
  if (a.repr().level == 0) return false;
  (void)a.inverse();
  return false;
}
inline std::string to_text(const Number& a) { return a.to_string(); }

namespace detail {

inline UniPoly<Number> level_poly(const TowerPtr& t, const std::vector<Repr>& c) {
  std::vector<Number> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(t, x);
  return UniPoly<Number>(std::move(v));
}

inline std::vector<Repr> level_coeffs(const UniPoly<Number>& p) {
  std::vector<Repr> c;
  for (const auto& x : p.coeffs()) c.push_back(x.repr());
  return c;
}

}  // namespace detail

/// The factor raised by a zero divisor as a polynomial over its level.
inline UniPoly<Number> factor_poly(const ZeroDivisorEncountered& z) { return detail::level_poly(z.tower(), z.factor()); }

inline Number Number::inverse() const {
  if (r_.is_zero()) throw DivisionByZero();
  if (r_.level == 0) return Number(tower_, detail::r_const(r_.q.inverse()));
  const int level = r_.level;
  auto a = detail::level_poly(tower_, r_.c);
  auto m = detail::level_poly(tower_, tower_->level(level).modulus);
  auto [g, s] = upoly_half_gcdex(a, m);
  if (g.degree() > 0) throw ZeroDivisorEncountered(tower_, level, detail::level_coeffs(g));
  return Number(tower_, detail::r_reduce_poly(level, detail::level_coeffs(s), *tower_));
}

/// Multiplicative inverse under dynamic evaluation (alias kept for the
/// public surface).
inline Number dyn_invert(const Number& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// Building and splitting towers
// ---------------------------------------------------------------------------

/// Adjoins a root of `modulus` (coefficients in `base`, or rational) as a new
/// top level. The modulus is made monic and squarefree first.
inline TowerPtr extend_tower(const TowerPtr& base, const UniPoly<Number>& modulus, std::string name = {}) {
  UniPoly<Number> m = upoly_squarefree(modulus);
  if (m.degree() < 1) throw InvariantViolation("extension modulus must have positive degree");
  std::vector<Tower::Level> levels = base ? base->levels() : std::vector<Tower::Level>{};
  if (name.empty()) name = "t" + std::to_string(levels.size() + 1);
  levels.push_back(Tower::Level{std::move(name), detail::level_coeffs(m)});
  return std::make_shared<const Tower>(std::move(levels));
}

/// Splits `t` along the factorization raised by a zero divisor. Returns the
/// towers for modulus = factor and modulus = m / factor.
inline std::pair<TowerPtr, TowerPtr> split_tower(const TowerPtr& t, int level, const std::vector<Repr>& factor) {
  if (!t || level < 1 || level > t->depth()) throw InvariantViolation("split at a level the tower does not have");
  auto m = detail::level_poly(t, t->level(level).modulus);
  auto g = detail::level_poly(t, factor);
  auto h = exact_div(m, g).monic();
  auto build = [&](const UniPoly<Number>& mod) {
    std::vector<Tower::Level> levels(t->levels().begin(), t->levels().begin() + level);
    levels.back().modulus = detail::level_coeffs(mod);
    auto partial = std::make_shared<Tower>(levels);
    for (int k = level + 1; k <= t->depth(); ++k) {
      Tower::Level lv = t->level(k);
      for (auto& c : lv.modulus) c = detail::r_rebase(c, *partial);
      levels.push_back(std::move(lv));
      partial = std::make_shared<Tower>(levels);
    }
    return TowerPtr(std::move(partial));
  };
  return {build(g), build(h)};
}

inline std::pair<TowerPtr, TowerPtr> split_tower(const ZeroDivisorEncountered& z) {
  return split_tower(z.tower(), z.level(), z.factor());
}

/// Runs `f(tower)` and, whenever it raises a split that belongs to this
/// tower, reruns it on both branches. Returns one (tower, result) per leaf
/// branch, in a deterministic order (factor branch first).
template <class F>
auto on_branches(const TowerPtr& tower, F&& f) -> std::vector<std::pair<TowerPtr, decltype(f(tower))>> {
  using R = decltype(f(tower));
  std::vector<std::pair<TowerPtr, R>> out;
  std::vector<TowerPtr> pending{tower};
  while (!pending.empty()) {
    TowerPtr t = pending.front();
    pending.erase(pending.begin());
    try {
      out.emplace_back(t, f(t));
    } catch (const ZeroDivisorEncountered& z) {
      if (!t || z.level() > t->depth()) throw;
      auto [a, b] = split_tower(t, z.level(), z.factor());
      pending.insert(pending.begin(), {a, b});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal polynomial over Q
// ---------------------------------------------------------------------------

namespace detail {

inline void flatten_into(const Repr& a, const Tower& t, int offset, std::vector<Rational>& out) {
  if (a.level == 0) {
    out[static_cast<std::size_t>(offset)] += a.q;
    return;
  }
  int stride = 1;
  for (int k = 1; k < a.level; ++k) stride *= t.level(k).degree();
  for (std::size_t i = 0; i < a.c.size(); ++i) flatten_into(a.c[i], t, offset + static_cast<int>(i) * stride, out);
}

}  // namespace detail

/// Coordinates of a in the monomial Q-basis of the tower algebra.
inline std::vector<Rational> flatten(const Number& a) {
  const int dim = a.tower() ? a.tower()->dimension() : 1;
  std::vector<Rational> out(static_cast<std::size_t>(dim), Rational(0));
  if (!a.tower()) {
    out[0] = a.repr().q;
    return out;
  }
  detail::flatten_into(a.repr(), *a.tower(), 0, out);
  return out;
}

/// Monic minimal polynomial of a over Q in the tower algebra. Its roots are
/// exactly the values a takes on the components of the algebra.
inline UniPoly<Rational> minimal_polynomial(const Number& a) {
  if (auto q = a.rational()) return UniPoly<Rational>{-*q, Rational(1)};
  const std::size_t dim = flatten(a).size();
  // Rows of an echelon basis: (coordinate vector, combination of powers).
  struct Row {
    std::size_t pivot;
    std::vector<Rational> v, comb;
  };
  std::vector<Row> rows;
  Number power(1);
  for (std::size_t i = 0; i <= dim; ++i) {
    std::vector<Rational> v = flatten(power.rebase(a.tower()));
    std::vector<Rational> comb(dim + 1, Rational(0));
    comb[i] = Rational(1);
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      Rational f = v[row.pivot] / row.v[row.pivot];
      for (std::size_t k = 0; k < dim; ++k) v[k] -= f * row.v[k];
      for (std::size_t k = 0; k <= dim; ++k) comb[k] -= f * row.comb[k];
    }
    std::size_t pivot = dim;
    for (std::size_t k = 0; k < dim; ++k)
      if (!v[k].is_zero()) {
        pivot = k;
        break;
      }
    if (pivot == dim) {
      comb.resize(i + 1);
      return UniPoly<Rational>(comb).monic();
    }
    rows.push_back(Row{pivot, std::move(v), std::move(comb)});
    power = power * a;
  }
  throw InvariantViolation("minimal polynomial search exceeded the algebra dimension");
}

}  // namespace folint
