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
 * @file multipoly.hpp
 * @brief Sparse polynomials in up to four named variables.
 *
 * Terms are kept in a map ordered lexicographically, largest first, with
 * the variable list giving the priority (X0 > X1 > Y0 > Y1, x > y). That
 * order is the canonical printing order.
 */

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folint/field.hpp"
#include "folint/unipoly.hpp"

namespace folint {

inline constexpr std::size_t kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;
using VarList = std::vector<std::string>;

inline const VarList& planar_vars() {
  static const VarList v{"x", "y"};
  return v;
}
inline const VarList& hirzebruch_vars() {
  static const VarList v{"X0", "X1", "Y0", "Y1"};
  return v;
}

/// Bidegree (d1, d2) of a bihomogeneous polynomial in X0, X1, Y0, Y1.
struct Bidegree {
  int d1 = 0;
  int d2 = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

template <ExactField K>
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, K, std::greater<Exponents>>;

  MultiPoly() : vars_(planar_vars()) {}
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars) throw InvariantViolation("at most four variables are supported");
  }

  static MultiPoly constant(const VarList& vars, const K& c) {
    MultiPoly p(vars);
    p.add_term(Exponents{}, c);
    return p;
  }
  static MultiPoly variable(const VarList& vars, const std::string& name) {
    MultiPoly p(vars);
    Exponents e{};
    e[p.index_of(name)] = 1;
    p.add_term(e, K(1));
    return p;
  }
  static MultiPoly monomial(const VarList& vars, const Exponents& e, const K& c = K(1)) {
    MultiPoly p(vars);
    p.add_term(e, c);
    return p;
  }

  const VarList& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw InvariantViolation("variable " + name + " not in polynomial ring");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  /// Adds c * monomial(e), dropping the term if it cancels.
  void add_term(const Exponents& e, const K& c) {
    if (structurally_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (structurally_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  /// Leading term in the canonical (lex) order.
  std::pair<Exponents, K> leading() const {
    if (terms_.empty()) throw InvariantViolation("leading term of zero polynomial");
    return *terms_.begin();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  /// Lowest total degree of a term (the order at the origin); -1 for zero.
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = d < 0 ? total(e) : std::min(d, total(e));
    return d;
  }
  int min_degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = d < 0 ? e[i] : std::min(d, e[i]);
    return d;
  }

  MultiPoly homogeneous_part(int degree) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
      if (total(e) == degree) r.terms_.emplace(e, c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
    return r;
  }
  friend MultiPoly operator*(const K& s, const MultiPoly& p) {
    MultiPoly r(p.vars_);
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(vars_, K(1)), b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      b = b * b;
      k >>= 1u;
    }
    return r;
  }

  /// Multiplies by the monomial with exponents e.
  MultiPoly shifted(const Exponents& e) const {
    MultiPoly r(vars_);
    for (const auto& [ex, c] : terms_) r.terms_.emplace(add(ex, e), c);
    return r;
  }

  /// Divides by var_i^k; throws if some term has a smaller exponent.
  MultiPoly divided_by_var_power(std::size_t i, int k) const {
    MultiPoly r(vars_);
    for (const auto& [ex, c] : terms_) {
      if (ex[i] < k) throw InvariantViolation("divided_by_var_power: not divisible");
      Exponents e = ex;
      e[i] -= k;
      r.terms_.emplace(e, c);
    }
    return r;
  }

  /// Formal partial derivative with respect to variable i.
  MultiPoly partial(std::size_t i) const {
    MultiPoly r(vars_);
    for (const auto& [ex, c] : terms_) {
      if (ex[i] == 0) continue;
      Exponents e = ex;
      e[i] -= 1;
      r.add_term(e, K(static_cast<long>(ex[i])) * c);
    }
    return r;
  }

  /// Sets variable i to the value v (the variable stays in the ring).
  MultiPoly evaluated(std::size_t i, const K& v) const {
    MultiPoly r(vars_);
    for (const auto& [ex, c] : terms_) {
      Exponents e = ex;
      e[i] = 0;
      K f = c;
      for (int k = 0; k < ex[i]; ++k) f = f * v;
      r.add_term(e, f);
    }
    return r;
  }

  /// Substitutes var_i -> var_i + shift.
  MultiPoly translated(std::size_t i, const K& shift) const {
    if (structurally_zero(shift)) return *this;
    MultiPoly r(vars_);
    for (const auto& [ex, c] : terms_) {
      // c * v^n -> c * sum_k binom(n,k) shift^(n-k) v^k
      const int n = ex[i];
      std::vector<K> pw(static_cast<std::size_t>(n) + 1, K(1));
      for (int k = 1; k <= n; ++k) pw[k] = pw[k - 1] * shift;
      Integer binom = 1;
      for (int k = 0; k <= n; ++k) {
        Exponents e = ex;
        e[i] = k;
        r.add_term(e, K(Rational(binom)) * pw[n - k] * c);
        binom = binom * (n - k) / (k + 1);
      }
    }
    return r;
  }

  /// Applies an exponent map term by term (monomial substitutions).
  template <class F>
  MultiPoly map_exponents(F&& f) const {
    MultiPoly r(vars_);
    for (const auto& [ex, c] : terms_) r.add_term(f(ex), c);
    return r;
  }

  /// Copy with the same terms in another ring (variables renamed).
  MultiPoly with_vars(const VarList& vars) const {
    MultiPoly r(vars);
    r.terms_ = terms_;
    return r;
  }

  template <class K2, class F>
  MultiPoly<K2> map_coeffs(F&& f) const {
    MultiPoly<K2> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Drops terms whose coefficient decides to zero (may raise a split).
  MultiPoly decided() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
      if (!decide_zero(c)) r.terms_.emplace(e, c);
    return r;
  }

  /// Univariate view in variable i when every other exponent is zero.
  UniPoly<K> as_univariate(std::size_t i) const {
    std::vector<K> c(static_cast<std::size_t>(std::max(degree_in(i), 0)) + 1, K(0));
    for (const auto& [ex, v] : terms_) {
      for (std::size_t j = 0; j < nvars(); ++j)
        if (j != i && ex[j] != 0) throw InvariantViolation("as_univariate: polynomial involves other variables");
      c[static_cast<std::size_t>(ex[i])] = v;
    }
    return UniPoly<K>(std::move(c));
  }

  static int total(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }
  static Exponents add(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
    return r;
  }

 private:
  void check_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InvariantViolation("polynomials from different rings");
  }

  VarList vars_;
  TermMap terms_;
};

using QPoly = MultiPoly<Rational>;

/// Partial derivative by variable name.
template <ExactField K>
MultiPoly<K> mp_partial(const MultiPoly<K>& p, const std::string& v) {
  return p.partial(p.index_of(v));
}

/// q with v*q = p, when v divides p.
template <ExactField K>
std::optional<MultiPoly<K>> mp_var_divide(const MultiPoly<K>& p, const std::string& v) {
  const std::size_t i = p.index_of(v);
  if (!p.is_zero() && p.min_degree_in(i) < 1) return std::nullopt;
  return p.divided_by_var_power(i, 1);
}

/// Exact division in the lexicographic order; nullopt if d does not divide p.
template <ExactField K>
std::optional<MultiPoly<K>> mp_exact_divide(const MultiPoly<K>& p, const MultiPoly<K>& d) {
  if (d.is_zero()) throw DivisionByZero();
  const auto [ld, cd] = d.leading();
  const K inv = cd.inverse();
  MultiPoly<K> q(p.vars()), r = p;
  while (!r.is_zero()) {
    const auto [lr, cr] = r.leading();
    Exponents e{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      e[i] = lr[i] - ld[i];
      if (e[i] < 0) return std::nullopt;
    }
    const K f = cr * inv;
    q.add_term(e, f);
    r -= MultiPoly<K>::monomial(p.vars(), e, f) * d;
  }
  return q;
}

/// Bidegree of p in (X0, X1, Y0, Y1) for the bigrading deg Y1 = (-delta, 1);
/// nullopt if p is not bihomogeneous. The zero polynomial has no bidegree.
template <ExactField K>
std::optional<Bidegree> mp_bidegree(const MultiPoly<K>& p, int delta) {
  if (p.nvars() != 4) throw InvariantViolation("bidegree needs the ring X0, X1, Y0, Y1");
  std::optional<Bidegree> bd;
  for (const auto& [e, c] : p.terms()) {
    Bidegree b{e[0] + e[1] - delta * e[3], e[2] + e[3]};
    if (bd && !(*bd == b)) return std::nullopt;
    bd = b;
  }
  return bd;
}

/// Result of substituting rational functions with monomial denominators:
/// num / (monomial with exponents den), reduced.
template <ExactField K>
struct Fraction {
  MultiPoly<K> num;
  Exponents den{};
};

/// A binding var -> num / monomial(den) in the target ring.
template <ExactField K>
struct Binding {
  MultiPoly<K> num;
  Exponents den{};
};

/// Substitutes every variable of p by a fraction with monomial denominator
/// and returns the reduced fraction: no variable of the denominator divides
/// the numerator.
template <ExactField K>
Fraction<K> mp_subst(const MultiPoly<K>& p, const std::vector<Binding<K>>& bindings, const VarList& target) {
  if (bindings.size() != p.nvars()) throw InvariantViolation("mp_subst: one binding per variable required");
  // Each term becomes (coefficient * prod num_v^e) / prod den_v^e.
  std::vector<std::pair<MultiPoly<K>, Exponents>> parts;
  Exponents common{};
  for (const auto& [ex, c] : p.terms()) {
    MultiPoly<K> n = MultiPoly<K>::constant(target, c);
    Exponents d{};
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (ex[v] == 0) continue;
      n = n * bindings[v].num.pow(static_cast<unsigned>(ex[v]));
      for (std::size_t k = 0; k < kMaxVars; ++k) d[k] += bindings[v].den[k] * ex[v];
    }
    for (std::size_t k = 0; k < kMaxVars; ++k) common[k] = std::max(common[k], d[k]);
    parts.emplace_back(std::move(n), d);
  }
  MultiPoly<K> num(target);
  for (auto& [n, d] : parts) {
    Exponents lift{};
    for (std::size_t k = 0; k < kMaxVars; ++k) lift[k] = common[k] - d[k];
    num += n.shifted(lift);
  }
  // Cancel the monomial common to numerator and denominator.
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (common[k] == 0 || num.is_zero()) continue;
    int c = std::min(common[k], num.min_degree_in(k));
    if (c > 0) {
      num = num.divided_by_var_power(k, c);
      common[k] -= c;
    }
  }
  if (num.is_zero()) common = Exponents{};
  return {std::move(num), common};
}

}  // namespace folint
