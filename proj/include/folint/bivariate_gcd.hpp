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

// gcd in Q[x, y] by primitive polynomial remainder sequences, y main variable.

#include <utility>
#include <vector>

#include "folint/multipoly.hpp"
#include "folint/unipoly.hpp"

namespace folint {

namespace detail {

using QUni = UniPoly<Rational>;
/// Element of Q[x][y]: coefficients in y, lowest first.
using Recursive = std::vector<QUni>;

inline void trim(Recursive& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Recursive to_recursive(const QPoly& p, std::size_t xi, std::size_t yi) {
  Recursive r(static_cast<std::size_t>(std::max(p.degree_in(yi), 0)) + 1);
  std::vector<std::vector<Rational>> dense(r.size());
  for (const auto& [e, c] : p.terms()) {
    auto& row = dense[static_cast<std::size_t>(e[yi])];
    if (row.size() <= static_cast<std::size_t>(e[xi])) row.resize(static_cast<std::size_t>(e[xi]) + 1, Rational(0));
    row[static_cast<std::size_t>(e[xi])] = c;
  }
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = QUni(dense[j]);
  trim(r);
  return r;
}

inline QPoly from_recursive(const Recursive& r, const VarList& vars, std::size_t xi, std::size_t yi) {
  QPoly p(vars);
  for (std::size_t j = 0; j < r.size(); ++j)
    for (int i = 0; i <= r[j].degree(); ++i) {
      Exponents e{};
      e[xi] = i;
      e[yi] = static_cast<int>(j);
      p.add_term(e, r[j].coeff(i));
    }
  return p;
}

inline QUni content(const Recursive& p) {
  QUni g;
  for (const auto& c : p) {
    g = upoly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

inline Recursive div_content(const Recursive& p, const QUni& c) {
  Recursive r;
  for (const auto& a : p) r.push_back(exact_div(a, c));
  return r;
}

inline Recursive primitive_part(const Recursive& p) {
  if (p.empty()) return p;
  return div_content(p, content(p));
}

/// Pseudo-remainder of a by b in Q[x][y].
inline Recursive prem(Recursive a, const Recursive& b) {
  const std::size_t db = b.size() - 1;
  const QUni lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t k = a.size() - 1 - db;
    const QUni la = a.back();
    for (auto& c : a) c = lb * c;
    for (std::size_t i = 0; i <= db; ++i) a[i + k] = a[i + k] - la * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace detail

/// Scales p to integer coefficients with content 1 and a positive leading
/// coefficient in the canonical order. Zero stays zero.
inline QPoly normalize_integer_primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) den = integer_lcm(den, c.den());
  for (const auto& [e, c] : p.terms()) num = integer_gcd(num, (c * Rational(den)).num());
  Rational scale = Rational(den) / Rational(num);
  if (p.leading().second.sign() < 0) scale = -scale;
  return scale * p;
}

/// gcd of two bivariate polynomials, normalized by normalize_integer_primitive.
inline QPoly bivariate_gcd(const QPoly& p, const QPoly& q, const std::string& x = "x", const std::string& y = "y") {
  if (p.is_zero() && q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return normalize_integer_primitive(q);
  if (q.is_zero()) return normalize_integer_primitive(p);
  const std::size_t xi = p.index_of(x), yi = p.index_of(y);
  using namespace detail;
  Recursive a = to_recursive(p, xi, yi), b = to_recursive(q, xi, yi);
  QUni c = upoly_gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    Recursive r = primitive_part(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  // b is now zero (a is the gcd) or a nonzero y-free primitive, i.e. a unit.
  Recursive g = b.empty() ? a : Recursive{QUni::constant(Rational(1))};
  for (auto& coef : g) coef = c * coef;
  return normalize_integer_primitive(from_recursive(g, p.vars(), xi, yi));
}

}  // namespace folint
