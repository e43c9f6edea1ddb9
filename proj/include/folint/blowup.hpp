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
 * @file blowup.hpp
 * @brief Local reduction of planar foliation singularities by point blowups.
 *
 * A singular point is simple when its linear part has eigenvalues whose
 * quotient is not a positive rational (or one eigenvalue vanishes and the
 * other does not). Ordinary singularities are blown up until only simple
 * or nonsingular points remain on the exceptional divisors. A blown up
 * point is terminal dicritical when x*a_m + y*b_m vanishes identically for
 * the first nonzero jet a_m dx + b_m dy.
 *
 * Points with algebraic coordinates live in towers of simple extensions
 * handled by dynamic evaluation: whenever a decision splits a tower, the
 * affected computation is repeated on each branch and each branch becomes
 * its own point class.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folint/algebraic.hpp"
#include "folint/formparse.hpp"
#include "folint/multipoly.hpp"

namespace folint {

using NPoly = MultiPoly<Number>;

/// A dx + B dy near the origin, coefficients in `tower` (null: rationals).
struct LocalForm {
  NPoly A{planar_vars()};
  NPoly B{planar_vars()};
  TowerPtr tower;

  static LocalForm from(const PlanarOneForm& w) {
    auto lift = [](const Rational& q) { return Number(q); };
    return LocalForm{w.A.map_coeffs<Number>(lift), w.B.map_coeffs<Number>(lift), nullptr};
  }

  LocalForm rebased(const TowerPtr& t) const {
    if (!t || t == tower) return LocalForm{A, B, t ? t : tower};
    auto move = [&](const Number& c) { return c.rebase(t); };
    return LocalForm{A.map_coeffs<Number>(move), B.map_coeffs<Number>(move), t};
  }

  std::string to_string() const {
    return "(" + print_canonical(A) + ") dx + (" + print_canonical(B) + ") dy";
  }
};

/// Text of the defining moduli of a tower, e.g. "t1^2 - 2"; empty for Q.
inline std::string tower_text(const TowerPtr& t) {
  if (!t) return "";
  std::string out;
  for (int k = 1; k <= t->depth(); ++k) {
    if (!out.empty()) out += "; ";
    const auto& lv = t->level(k);
    out += detail::level_poly(t, lv.modulus).to_string(lv.name);
  }
  return out;
}

/// A conjugacy class of (infinitely near) points. Coordinates refer to the
/// local chart in which the point was found; `trail` lists the blowup
/// charts (1: y = x*y', 2: x = x'*y) leading to it from the root.
struct PointClass {
  TowerPtr tower;
  Number x{0};
  Number y{0};
  std::vector<int> trail;

  std::string modulus_text() const { return tower_text(tower); }
  std::string coordinates_text() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

struct Jet {
  int m = 0;
  NPoly a{planar_vars()};
  NPoly b{planar_vars()};
};

/// Least total degree m of a nonzero homogeneous part and those parts.
inline Jet jet_multiplicity(const LocalForm& w) {
  NPoly A = w.A.decided(), B = w.B.decided();
  if (A.is_zero() && B.is_zero()) throw DegenerateField("the zero 1-form has no jet");
  int m = -1;
  for (const NPoly* p : {&A, &B})
    if (!p->is_zero()) m = m < 0 ? p->order() : std::min(m, p->order());
  return Jet{m, A.homogeneous_part(m), B.homogeneous_part(m)};
}

namespace detail {

inline const NPoly& nvar(int i) {
  static const NPoly x = NPoly::variable(planar_vars(), "x"), y = NPoly::variable(planar_vars(), "y");
  return i == 0 ? x : y;
}

inline bool jet_is_radial(const Jet& j) { return (nvar(0) * j.a + nvar(1) * j.b).decided().is_zero(); }

/// r + 1/r = c with r a positive rational.
inline bool sum_of_ratio_is_positive_rational(const Rational& c) {
  return c.sign() > 0 && rat_sqrt_exact(c * c - Rational(4)).has_value();
}

}  // namespace detail

inline bool is_terminal_dicritical(const LocalForm& w) {
  Jet j = jet_multiplicity(w);
  if (j.m < 1) throw NotSingular();
  return detail::jet_is_radial(j);
}

/// Whether the roots of l^2 - trace*l + det have a positive rational quotient.
inline bool ratio_is_positive_rational(const Rational& trace, const Rational& det) {
  if (det.is_zero()) throw ZeroDeterminant();
  return detail::sum_of_ratio_is_positive_rational(trace * trace / det - Rational(2));
}

/// Same test over a tower. l1/l2 + l2/l1 = trace^2/det - 2 is symmetric in
/// the roots, so the quotient is rational exactly when this sum is.
inline bool ratio_is_positive_rational(const Number& trace, const Number& det) {
  if (decide_zero(det)) throw ZeroDeterminant();
  const Number s = trace * trace * det.inverse() - Number(2);
  if (auto q = s.rational()) return detail::sum_of_ratio_is_positive_rational(*q);
  for (const Rational& c : rational_roots(minimal_polynomial(s)))
    if (decide_zero(s - Number(c))) return detail::sum_of_ratio_is_positive_rational(c);
  return false;
}

inline bool is_simple(const LocalForm& w) {
  Jet j = jet_multiplicity(w);
  if (j.m < 1) throw NotSingular();
  if (j.m != 1) return false;
  const Number p = j.a.coeff({1, 0, 0, 0}), q = j.a.coeff({0, 1, 0, 0});
  const Number r = j.b.coeff({1, 0, 0, 0}), s = j.b.coeff({0, 1, 0, 0});
  // Linear part of the field (B, -A): [[r, s], [-p, -q]].
  const Number trace = r - q, det = s * p - r * q;
  if (!decide_zero(det)) return !ratio_is_positive_rational(trace, det);
  return !decide_zero(trace);
}

struct BlowupCharts {
  LocalForm chart1;  // y = x*y', exceptional divisor x = 0
  LocalForm chart2;  // x = x'*y, exceptional divisor y = 0
  bool dicritical = false;
  int exponent = 0;
};

/// Strict transforms in the two standard charts of the blowup at the origin.
inline BlowupCharts blowup_charts(const LocalForm& w) {
  using detail::nvar;
  Jet j = jet_multiplicity(w);
  if (j.m < 1) throw NotSingular();
  BlowupCharts out;
  out.dicritical = detail::jet_is_radial(j);
  out.exponent = out.dicritical ? j.m + 1 : j.m;
  const int e = out.exponent;

  auto sub1 = [](const NPoly& p) { return p.map_exponents([](const Exponents& ex) { return Exponents{ex[0] + ex[1], ex[1], 0, 0}; }); };
  auto sub2 = [](const NPoly& p) { return p.map_exponents([](const Exponents& ex) { return Exponents{ex[0], ex[0] + ex[1], 0, 0}; }); };

  const NPoly A1 = sub1(w.A), B1 = sub1(w.B);
  NPoly c1a = (A1 + nvar(1) * B1).decided(), c1b = (nvar(0) * B1).decided();
  const NPoly A2 = sub2(w.A), B2 = sub2(w.B);
  NPoly c2a = (nvar(1) * A2).decided(), c2b = (nvar(0) * A2 + B2).decided();

  out.chart1 = LocalForm{c1a.divided_by_var_power(0, e), c1b.divided_by_var_power(0, e), w.tower};
  out.chart2 = LocalForm{c2a.divided_by_var_power(1, e), c2b.divided_by_var_power(1, e), w.tower};
  auto divisible = [](const NPoly& p, std::size_t v) { return p.is_zero() || p.min_degree_in(v) >= 1; };
  if ((divisible(out.chart1.A, 0) && divisible(out.chart1.B, 0)) ||
      (divisible(out.chart2.A, 1) && divisible(out.chart2.B, 1)))
    throw InvariantViolation("blowup: exceptional coordinate still divides the strict transform");
  return out;
}

enum class Axis { XZero, YZero };

/// A singular point found on a coordinate axis, with the form moved so the
/// point sits at the origin.
struct AxisPoint {
  PointClass point;
  LocalForm local;
  bool at_origin = false;
};

namespace detail {

inline UniPoly<Number> restrict_to_axis(const NPoly& p, Axis axis) {
  const std::size_t keep = axis == Axis::XZero ? 1 : 0;
  const std::size_t drop = 1 - keep;
  std::vector<Number> c(static_cast<std::size_t>(std::max(p.degree_in(keep), 0)) + 1, Number(0));
  for (const auto& [ex, v] : p.terms())
    if (ex[drop] == 0) c[static_cast<std::size_t>(ex[keep])] = v;
  return UniPoly<Number>(std::move(c));
}

/// Roots of a squarefree monic g, as (tower, root) pairs: rational roots
/// directly, the remaining factor as one new tower level.
inline std::vector<std::pair<TowerPtr, Number>> root_classes(UniPoly<Number> g, const TowerPtr& t) {
  std::vector<std::pair<TowerPtr, Number>> out;
  if (g.degree() < 1) return out;
  bool all_rational = true;
  for (const auto& c : g.coeffs()) all_rational = all_rational && c.is_rational();
  auto adjoin = [&](const UniPoly<Number>& h) {
    TowerPtr t2 = extend_tower(t, h);
    out.emplace_back(t2, Number::generator(t2, t2->depth()));
  };
  if (all_rational) {
    std::vector<Rational> qc;
    for (const auto& c : g.coeffs()) qc.push_back(*c.rational());
    UniPoly<Rational> h(qc);
    for (const Rational& r : rational_roots(h)) {
      out.emplace_back(t, Number(r));
      h = exact_div(h, UniPoly<Rational>{-r, Rational(1)});
    }
    if (h.degree() >= 1) {
      std::vector<Number> nc;
      for (const auto& c : h.coeffs()) nc.emplace_back(c);
      adjoin(UniPoly<Number>(std::move(nc)));
    }
    return out;
  }
  if (g.degree() == 1) {
    out.emplace_back(t, -g.coeff(0));
    return out;
  }
  if (decide_zero(g.coeff(0))) {
    out.emplace_back(t, Number(0));
    g = exact_div(g, UniPoly<Number>{Number(0), Number(1)});
    if (g.degree() == 1) {
      out.emplace_back(t, -g.coeff(0));
      return out;
    }
  }
  adjoin(g);
  return out;
}

}  // namespace detail

/// Common zeros of A and B on the axis x = 0 (or y = 0), one entry per
/// conjugacy class, each with the form translated to that point.
inline std::vector<AxisPoint> singular_points_on_divisor(const LocalForm& w, Axis axis) {
  const UniPoly<Number> a = detail::restrict_to_axis(w.A, axis).decided();
  const UniPoly<Number> b = detail::restrict_to_axis(w.B, axis).decided();
  if (a.is_zero() && b.is_zero())
    throw InfiniteSingularLocus(std::string("both coefficients vanish on ") + (axis == Axis::XZero ? "x = 0" : "y = 0"));
  const UniPoly<Number> g = upoly_gcd(a, b);
  if (g.degree() < 1) return {};
  const std::size_t along = axis == Axis::XZero ? 1 : 0;
  std::vector<AxisPoint> out;
  for (auto& [t, c] : detail::root_classes(upoly_squarefree(g), w.tower)) {
    LocalForm f = w.rebased(t);
    const Number cc = c.rebase(t);
    f.A = f.A.translated(along, cc);
    f.B = f.B.translated(along, cc);
    AxisPoint p;
    p.point.tower = t;
    (axis == Axis::XZero ? p.point.y : p.point.x) = cc;
    p.at_origin = structurally_zero(cc);
    p.local = std::move(f);
    out.push_back(std::move(p));
  }
  return out;
}

struct BlowupNode {
  int id = 0;      // 1-based, depth-first order
  int parent = 0;  // 0 for a root
  int depth = 0;
  PointClass point;
  int multiplicity = 0;
  bool terminal_dicritical = false;
  bool simple = false;
  bool free = false;
  bool blown_up = false;
  std::vector<int> proximate_to;
  LocalForm form;
};

/// A singular point left on the divisors that needs no further blowup.
struct ResidualPoint {
  int parent = 0;
  PointClass point;
  bool simple = true;
};

/// Nodes are the root point(s) and every blown up infinitely near point.
struct BlowupTree {
  std::vector<BlowupNode> nodes;
  std::vector<ResidualPoint> residual;
  bool truncated = false;

  bool has_terminal_dicritical() const {
    return std::any_of(nodes.begin(), nodes.end(), [](const BlowupNode& n) { return n.terminal_dicritical; });
  }
  const BlowupNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id - 1)); }
};

struct ReduceOptions {
  int max_depth = 64;
  bool stop_at_dicritical = false;
};

namespace detail {

class Reducer {
 public:
  explicit Reducer(ReduceOptions opt) : opt_(opt) {}

  BlowupTree run(const LocalForm& w, const PointClass& root) {
    visit(w, root, 0, 0, 0, 0);
    return std::move(tree_);
  }

 private:
  struct Child {
    PointClass point;
    LocalForm local;
    int div_x = 0;
    int div_y = 0;
  };
  struct Analysis {
    LocalForm form;
    int m = 0;
    bool simple = false;
    bool dicritical = false;
    std::vector<AxisPoint> chart1_points;
    std::optional<LocalForm> chart2_origin;
  };

  Analysis analyze(const LocalForm& f, bool expand) {
    Analysis a;
    a.form = f;
    Jet j = jet_multiplicity(f);
    a.m = j.m;
    if (a.m < 1) return a;
    a.dicritical = jet_is_radial(j);
    a.simple = is_simple(f);
    if (a.simple || !expand) return a;
    BlowupCharts ch = blowup_charts(f);
    a.chart1_points = singular_points_on_divisor(ch.chart1, Axis::XZero);
    Jet j2 = jet_multiplicity(ch.chart2);
    if (j2.m >= 1) a.chart2_origin = ch.chart2;
    return a;
  }

  void visit(const LocalForm& w, const PointClass& pt, int parent, int div_x, int div_y, int depth) {
    if (done_) return;
    const bool expand = depth < opt_.max_depth;
    auto branches = on_branches(w.tower, [&](const TowerPtr& t) { return analyze(w.rebased(t), expand); });
    for (auto& [t, a] : branches) {
      if (done_) return;
      PointClass p = pt;
      if (t && t != pt.tower) {
        p.x = p.x.rebase(t);
        p.y = p.y.rebase(t);
        p.tower = t;
      }
      if (parent != 0 && (a.m < 1 || a.simple)) {
        if (a.m >= 1) tree_.residual.push_back(ResidualPoint{parent, p, true});
        continue;
      }
      if (a.m < 1) throw NotSingular();
      BlowupNode n;
      n.id = static_cast<int>(tree_.nodes.size()) + 1;
      n.parent = parent;
      n.depth = depth;
      n.point = p;
      n.multiplicity = a.m;
      n.terminal_dicritical = a.dicritical;
      n.simple = a.simple;
      for (int d : {div_x, div_y})
        if (d != 0 && std::find(n.proximate_to.begin(), n.proximate_to.end(), d) == n.proximate_to.end())
          n.proximate_to.push_back(d);
      std::sort(n.proximate_to.begin(), n.proximate_to.end());
      n.free = n.proximate_to.size() == 1;
      n.blown_up = !a.simple && expand;
      n.form = a.form;
      const int id = n.id;
      tree_.nodes.push_back(std::move(n));
      if (a.dicritical && opt_.stop_at_dicritical) {
        done_ = true;
        return;
      }
      if (a.simple) continue;
      if (!expand) {
        tree_.truncated = true;
        continue;
      }
      std::vector<Child> children;
      for (auto& cp : a.chart1_points) {
        Child c;
        c.point = cp.point;
        c.point.trail = p.trail;
        c.point.trail.push_back(1);
        c.local = std::move(cp.local);
        c.div_x = id;
        c.div_y = cp.at_origin ? div_y : 0;
        children.push_back(std::move(c));
      }
      if (a.chart2_origin) {
        Child c;
        c.point.tower = a.chart2_origin->tower;
        c.point.trail = p.trail;
        c.point.trail.push_back(2);
        c.local = *a.chart2_origin;
        c.div_x = div_x;
        c.div_y = id;
        children.push_back(std::move(c));
      }
      for (auto& c : children) visit(c.local, c.point, id, c.div_x, c.div_y, depth + 1);
    }
  }

  ReduceOptions opt_;
  BlowupTree tree_;
  bool done_ = false;
};

}  // namespace detail

/// Reduction tree of the singularity at the origin of w.
inline BlowupTree reduce(const LocalForm& w, ReduceOptions opt = {}) {
  if (opt.max_depth < 0) throw Error("max_depth must be nonnegative");
  PointClass root;
  root.tower = w.tower;
  return detail::Reducer(opt).run(w, root);
}

/// Whether the point is a dicritical singularity: some infinitely near
/// point in its reduction is terminal dicritical. Nonsingular and simple
/// points are not ordinary singularities and are never dicritical.
inline bool is_dicritical(const LocalForm& w, int max_depth = 64) {
  if (jet_multiplicity(w).m < 1) return false;
  BlowupTree t = reduce(w, ReduceOptions{max_depth, true});
  if (t.has_terminal_dicritical()) return true;
  if (t.truncated) throw AnalysisUndecided("reduction depth " + std::to_string(max_depth) + " reached without a verdict", -1);
  return false;
}

/// Same, at a point (0, c) or (c, 0) given in the coordinates of w.
inline bool is_dicritical(const LocalForm& w, const PointClass& point, int max_depth = 64) {
  TowerPtr t = point.tower ? point.tower : w.tower;
  LocalForm f = w.rebased(t);
  f.A = f.A.translated(0, point.x.rebase(t)).translated(1, point.y.rebase(t));
  f.B = f.B.translated(0, point.x.rebase(t)).translated(1, point.y.rebase(t));
  return is_dicritical(f, max_depth);
}

}  // namespace folint
