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
 * @file hirzebruch.hpp
 * @brief Extension of planar 1-forms to foliations on Hirzebruch surfaces.
 *
 * The surface F_delta has homogeneous coordinates (X0, X1; Y0, Y1) with
 * deg X0 = deg X1 = (1, 0), deg Y0 = (0, 1), deg Y1 = (-delta, 1), and the
 * affine plane is the chart U00 via x = X1/X0, y = X0^delta Y1/Y0.
 *
 * A foliation is given by an affine 1-form
 *     A0 dX0 + A1 dX1 + B0 dY0 + B1 dY1
 * of bihomogeneous polynomials with bidegrees
 *     A0, A1: (d1 - delta + 1, d2 + 2),  B0: (d1 - delta + 2, d2 + 1),
 *     B1: (d1 + 2, d2 + 1),
 * annihilating both radial fields:
 *     X0 A0 + X1 A1 - delta Y1 B1 = 0,   Y0 B0 + Y1 B1 = 0.
 */

#include <string>
#include <vector>

#include "folint/bivariate_gcd.hpp"
#include "folint/formparse.hpp"
#include "folint/multipoly.hpp"

namespace folint {

struct BigradedOneForm {
  int delta = 0;
  QPoly A0{hirzebruch_vars()}, A1{hirzebruch_vars()}, B0{hirzebruch_vars()}, B1{hirzebruch_vars()};
  int d1 = 0, d2 = 0;
};

/// Affine chart U_ij = {X_i != 0, Y_j != 0}.
struct ChartId {
  int i = 0;
  int j = 0;
  std::string name() const { return "U" + std::to_string(i) + std::to_string(j); }
  static ChartId parse(const std::string& s) {
    std::string t = s;
    if (!t.empty() && (t[0] == 'U' || t[0] == 'u')) t = t.substr(1);
    if (t.size() != 2 || (t[0] != '0' && t[0] != '1') || (t[1] != '0' && t[1] != '1'))
      throw Error("chart must be one of 00, 01, 10, 11");
    return ChartId{t[0] - '0', t[1] - '0'};
  }
  friend bool operator==(const ChartId&, const ChartId&) = default;
};

struct Lemma2Report {
  bool bidegrees = false;
  bool euler = false;
  bool no_common_factor = false;
  bool all() const { return bidegrees && euler && no_common_factor; }
};

namespace detail {

inline const QPoly& hvar(int i) {
  static const std::vector<QPoly> v{QPoly::variable(hirzebruch_vars(), "X0"), QPoly::variable(hirzebruch_vars(), "X1"),
                                    QPoly::variable(hirzebruch_vars(), "Y0"), QPoly::variable(hirzebruch_vars(), "Y1")};
  return v[static_cast<std::size_t>(i)];
}

inline QPoly hmono(int x0, int x1, int y0, int y1) {
  return QPoly::monomial(hirzebruch_vars(), Exponents{x0, x1, y0, y1});
}

/// Keeps variables xi and yi as the planar (x, y) and sets the other two to 1.
inline QPoly restrict_to_plane(const QPoly& p, std::size_t xi, std::size_t yi) {
  QPoly r(planar_vars());
  for (const auto& [e, c] : p.terms()) r.add_term(Exponents{e[xi], e[yi], 0, 0}, c);
  return r;
}

inline bool divisible_by(const QPoly& p, std::size_t var) { return p.is_zero() || p.min_degree_in(var) >= 1; }

}  // namespace detail

/// The four-variable ring's bidegree check for all four components.
inline bool bidegrees_consistent(const BigradedOneForm& w) {
  const int d = w.delta;
  auto matches = [&](const QPoly& p, Bidegree expected) {
    if (p.is_zero()) return true;
    auto b = mp_bidegree(p, d);
    return b && *b == expected;
  };
  return matches(w.A0, {w.d1 - d + 1, w.d2 + 2}) && matches(w.A1, {w.d1 - d + 1, w.d2 + 2}) &&
         matches(w.B0, {w.d1 - d + 2, w.d2 + 1}) && matches(w.B1, {w.d1 + 2, w.d2 + 1});
}

/// Checks bidegrees, both Euler-type identities, and absence of a
/// nonconstant common factor of the four components.
inline Lemma2Report verify_lemma2(const BigradedOneForm& w) {
  using detail::hvar;
  Lemma2Report r;
  r.bidegrees = bidegrees_consistent(w);
  const QPoly delta = QPoly::constant(hirzebruch_vars(), Rational(w.delta));
  QPoly e1 = hvar(0) * w.A0 + hvar(1) * w.A1 - delta * hvar(3) * w.B1;
  QPoly e2 = hvar(2) * w.B0 + hvar(3) * w.B1;
  r.euler = e1.is_zero() && e2.is_zero();
  // A common factor is either a monomial in X0, Y0 (invisible on U00) or
  // restricts to a nonconstant common factor on U00.
  auto all_divisible = [&](std::size_t v) {
    return detail::divisible_by(w.A0, v) && detail::divisible_by(w.A1, v) && detail::divisible_by(w.B0, v) &&
           detail::divisible_by(w.B1, v);
  };
  bool monomial_free = !all_divisible(0) && !all_divisible(2);
  QPoly a = detail::restrict_to_plane(w.A1, 1, 3), b = detail::restrict_to_plane(w.B1, 1, 3);
  bool chart_coprime = (a.is_zero() && b.is_zero()) ? false : bivariate_gcd(a, b).is_constant();
  r.no_common_factor = monomial_free && chart_coprime;
  return r;
}

/// Extends the planar form A dx + B dy to F_delta. A and B must be coprime.
inline BigradedOneForm extend(int delta, const PlanarOneForm& w) {
  using detail::hmono;
  using detail::hvar;
  if (delta < 0) throw Error("delta must be nonnegative");
  validate_coprime(w);
  const VarList& H = hirzebruch_vars();
  // (1) x = X1/X0, y = X0^delta Y1/Y0 as reduced fractions.
  std::vector<Binding<Rational>> bind{{hvar(1), Exponents{1, 0, 0, 0}}, {hmono(delta, 0, 0, 1), Exponents{0, 0, 1, 0}}};
  Fraction<Rational> fa = mp_subst(w.A, bind, H), fb = mp_subst(w.B, bind, H);
  // Powers of X0 and Y0 dividing a numerator move to the denominator as
  // negative exponents, so the fraction is reduced as a Laurent monomial.
  auto reduce = [](Fraction<Rational>& f) {
    for (std::size_t k : {std::size_t{0}, std::size_t{2}}) {
      if (f.num.is_zero()) break;
      const int c = f.num.min_degree_in(k);
      f.num = f.num.divided_by_var_power(k, c);
      f.den[k] -= c;
    }
  };
  reduce(fa);
  reduce(fb);
  QPoly A1 = fa.num, B1 = fb.num;
  const int alpha1 = fa.den[0], alpha2 = fa.den[2], beta1 = fb.den[0], beta2 = fb.den[2];
  // (2)
  const int m1 = alpha1 - beta1 + 1 + delta;
  if (m1 > 0)
    B1 = B1.shifted({m1, 0, 0, 0});
  else
    A1 = A1.shifted({-m1, 0, 0, 0});
  // (3)
  const int m2 = alpha2 - beta2 - 1;
  if (m2 > 0)
    B1 = B1.shifted({0, 0, m2, 0});
  else
    A1 = A1.shifted({0, 0, -m2, 0});
  // (4)
  const int b = detail::divisible_by(B1, 2) ? 0 : 1;
  B1 = B1.shifted({0, 0, b, 0});
  A1 = A1.shifted({0, 0, b, 0});
  // (5)
  const QPoly delta_c = QPoly::constant(H, Rational(delta));
  const int a = detail::divisible_by(delta_c * hvar(3) * B1 - hvar(1) * A1, 0) ? 0 : 1;
  A1 = A1.shifted({a, 0, 0, 0});
  B1 = B1.shifted({a, 0, 0, 0});
  // (6)
  BigradedOneForm out;
  out.delta = delta;
  out.A1 = A1;
  out.B1 = B1;
  out.A0 = (delta_c * hvar(3) * B1 - hvar(1) * A1).divided_by_var_power(0, 1);
  out.B0 = (-(hvar(3) * B1)).divided_by_var_power(2, 1);
  if (auto bd = mp_bidegree(B1, delta); bd && !B1.is_zero()) {
    out.d1 = bd->d1 - 2;
    out.d2 = bd->d2 - 1;
  } else if (auto ad = mp_bidegree(A1, delta); ad && !A1.is_zero()) {
    out.d1 = ad->d1 + delta - 1;
    out.d2 = ad->d2 - 2;
  } else {
    throw InvariantViolation("extend: neither A1 nor B1 is bihomogeneous");
  }
  if (!verify_lemma2(out).all()) throw InvariantViolation("extend: output violates the bigraded form contract");
  return out;
}

struct ChartRestriction {
  PlanarOneForm form;
  QPoly removed_factor{planar_vars()};  // 1 when nothing was removed
};

/// Restriction of the foliation to the chart U_ij, with local coordinates
/// U00: (X1, Y1), U01: (X1, Y0), U10: (X0, Y1), U11: (X0, Y0). Any common
/// factor of the two coefficients is divided out and reported.
inline ChartRestriction chart_restrict_detailed(const BigradedOneForm& w, ChartId chart) {
  using detail::restrict_to_plane;
  PlanarOneForm f;
  if (chart.i == 0 && chart.j == 0) {
    f.A = restrict_to_plane(w.A1, 1, 3);
    f.B = restrict_to_plane(w.B1, 1, 3);
  } else if (chart.i == 0 && chart.j == 1) {
    f.A = restrict_to_plane(w.A1, 1, 2);
    f.B = restrict_to_plane(w.B0, 1, 2);
  } else if (chart.i == 1 && chart.j == 0) {
    f.A = restrict_to_plane(w.A0, 0, 3);
    f.B = restrict_to_plane(w.B1, 0, 3);
  } else {
    f.A = restrict_to_plane(w.A0, 0, 2);
    f.B = restrict_to_plane(w.B0, 0, 2);
  }
  ChartRestriction r;
  r.removed_factor = strip_common_factor(f);
  r.form = std::move(f);
  return r;
}

inline PlanarOneForm chart_restrict(const BigradedOneForm& w, ChartId chart) {
  return chart_restrict_detailed(w, chart).form;
}

/// Whether two planar forms define the same foliation up to a nonzero scalar.
inline bool proportional(const PlanarOneForm& a, const PlanarOneForm& b) {
  if ((a.A.is_zero() != b.A.is_zero()) || (a.B.is_zero() != b.B.is_zero())) return false;
  return (a.A * b.B - a.B * b.A).is_zero() && !(a.A.is_zero() && a.B.is_zero());
}

inline std::string print_canonical(const BigradedOneForm& w) {
  return "A0 = " + print_canonical(w.A0) + "\nA1 = " + print_canonical(w.A1) + "\nB0 = " + print_canonical(w.B0) +
         "\nB1 = " + print_canonical(w.B1) + "\n";
}

}  // namespace folint
