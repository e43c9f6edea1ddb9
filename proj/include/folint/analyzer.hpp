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
 * @file analyzer.hpp
 * @brief Necessary conditions for algebraic integrability of planar fields.
 *
 * For a form w and each delta >= 0 the extension to F_delta is restricted
 * to the charts U10 and U11, whose lines x = 0 cover the curve X0 = 0.
 * delta1 is the least delta for which the origin of U10 is not dicritical.
 * The field is not algebraically integrable when
 *   (a) no such delta exists,
 *   (b) for some delta > delta1, delta >= 1, the origin of U11 is not
 *       dicritical, or is dicritical but not the only dicritical point on
 *       x = 0 of U11,
 *   (c) for some delta > delta1, delta >= 1, U10 has a dicritical point on
 *       x = 0.
 *
 * The Newton polytope of the generic invariant curve a*f1 + b*f2 of a
 * rational first integral f1/f2 lies in
 *   { (u, v) : u <= d_x0 + delta1 * v,  v <= d_y0 + delta1' * u },
 * delta1' being delta1 of the field with x and y swapped.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folint/blowup.hpp"
#include "folint/formparse.hpp"
#include "folint/hirzebruch.hpp"

namespace folint {

struct AnalysisBounds {
  int max_delta = 10;
  int max_depth = 64;
};

/// One singular point examined during an analysis.
struct Evidence {
  int delta = 0;
  ChartId chart;
  PointClass point;
  bool singular = false;
  bool simple = false;
  bool dicritical = false;
  int tree = -1;  // index into Verdict::trees, -1 when no reduction was run
};

struct Verdict {
  enum class Kind { NotIntegrable, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<char> rule;
  std::optional<int> witness_delta;
  std::optional<int> delta1;
  bool non_rigorous = false;  // rule (a) from a bounded sweep
  AnalysisBounds bounds;
  std::vector<Evidence> evidence;
  std::vector<BlowupTree> trees;
};

namespace detail {

inline void require_not_dx(const PlanarOneForm& w) {
  validate_coprime(w);
  if (w.B.is_zero()) throw DegenerateField("the form is proportional to dx (the field is a multiple of d/dy)");
}

/// Classifies the origin of a local form, recording the evidence.
class EvidenceLog {
 public:
  explicit EvidenceLog(Verdict* sink, int max_depth) : sink_(sink), max_depth_(max_depth) {}

  Evidence classify(const LocalForm& f, int delta, ChartId chart, PointClass point) {
    Evidence e;
    e.delta = delta;
    e.chart = chart;
    e.point = std::move(point);
    const Jet j = jet_multiplicity(f);
    e.singular = j.m >= 1;
    if (e.singular) {
      e.simple = is_simple(f);
      if (!e.simple) {
        BlowupTree t = reduce(f, ReduceOptions{max_depth_, true});
        e.dicritical = t.has_terminal_dicritical();
        const bool undecided = t.truncated && !e.dicritical;
        if (sink_) {
          e.tree = static_cast<int>(sink_->trees.size());
          sink_->trees.push_back(std::move(t));
        }
        if (undecided) {
          if (sink_) sink_->evidence.push_back(e);
          throw AnalysisUndecided("reduction at " + e.point.coordinates_text() + " in " + chart.name() + " for delta " +
                                      std::to_string(delta) + " exceeded depth " + std::to_string(max_depth_),
                                  delta);
        }
      }
    }
    if (sink_) sink_->evidence.push_back(e);
    return e;
  }

 private:
  Verdict* sink_;
  int max_depth_;
};

inline LocalForm chart_form(const PlanarOneForm& w, int delta, ChartId chart) {
  return LocalForm::from(chart_restrict(extend(delta, w), chart));
}

inline bool origin_dicritical(const PlanarOneForm& w, int delta, EvidenceLog& log) {
  PointClass origin;
  return log.classify(chart_form(w, delta, {1, 0}), delta, {1, 0}, origin).dicritical;
}

}  // namespace detail

/// All singular points on the line x = 0 of one chart, with their flags.
struct ChartCensus {
  ChartId chart;
  std::vector<Evidence> points;
  bool origin_singular = false;
  bool origin_dicritical = false;
};

namespace detail {

inline ChartCensus census_chart(const PlanarOneForm& w, int delta, ChartId chart, EvidenceLog& log) {
  ChartCensus c;
  c.chart = chart;
  const LocalForm f = chart_form(w, delta, chart);
  for (auto& p : singular_points_on_divisor(f, Axis::XZero)) {
    Evidence e = log.classify(p.local, delta, chart, p.point);
    if (p.at_origin) {
      c.origin_singular = true;
      c.origin_dicritical = e.dicritical;
    }
    c.points.push_back(std::move(e));
  }
  return c;
}

}  // namespace detail

/// Least delta <= max_delta whose U10 origin is not dicritical.
inline std::optional<int> delta1(const PlanarOneForm& w, AnalysisBounds b = {}, Verdict* log_into = nullptr) {
  detail::require_not_dx(w);
  detail::EvidenceLog log(log_into, b.max_depth);
  for (int d = 0; d <= b.max_delta; ++d)
    if (!detail::origin_dicritical(w, d, log)) return d;
  return std::nullopt;
}

/// Singular points on X0 = 0 of F_delta, as seen from U10 and U11.
inline std::pair<ChartCensus, ChartCensus> dicritical_census_x0(const PlanarOneForm& w, int delta, int max_depth = 64,
                                                                Verdict* log_into = nullptr) {
  if (delta < 0) throw Error("delta must be nonnegative");
  validate_coprime(w);
  detail::EvidenceLog log(log_into, max_depth);
  ChartCensus u10 = detail::census_chart(w, delta, {1, 0}, log);
  ChartCensus u11 = detail::census_chart(w, delta, {1, 1}, log);
  return {std::move(u10), std::move(u11)};
}

/// Applies rules (a), (b), (c). Rule (a) needs an exhaustive sweep, which a
/// bounded search cannot provide; it fires only with assume_exhaustive and
/// is then marked non-rigorous.
inline Verdict check(const PlanarOneForm& w, AnalysisBounds b = {}, bool assume_exhaustive = false) {
  detail::require_not_dx(w);
  Verdict v;
  v.bounds = b;
  v.delta1 = delta1(w, b, &v);
  if (!v.delta1) {
    if (assume_exhaustive) {
      v.kind = Verdict::Kind::NotIntegrable;
      v.rule = 'a';
      v.non_rigorous = true;
    }
    return v;
  }
  detail::EvidenceLog log(&v, b.max_depth);
  for (int d = std::max(*v.delta1 + 1, 1); d <= b.max_delta; ++d) {
    ChartCensus u11 = detail::census_chart(w, d, {1, 1}, log);
    int dicritical_on_line = 0;
    for (const auto& e : u11.points) dicritical_on_line += e.dicritical ? 1 : 0;
    const bool rule_b = !u11.origin_dicritical || dicritical_on_line > 1;
    char rule = 0;
    if (rule_b) {
      rule = 'b';
    } else {
      ChartCensus u10 = detail::census_chart(w, d, {1, 0}, log);
      for (const auto& e : u10.points)
        if (e.dicritical) rule = 'c';
    }
    if (rule) {
      if (d <= *v.delta1) throw InvariantViolation("witness delta must exceed delta1");
      v.kind = Verdict::Kind::NotIntegrable;
      v.rule = rule;
      v.witness_delta = d;
      return v;
    }
  }
  return v;
}

/// Form of the field with x and y exchanged: B(y,x) dx + A(y,x) dy.
inline PlanarOneForm swap_form(const PlanarOneForm& w) {
  auto swap = [](const QPoly& p) { return p.map_exponents([](const Exponents& e) { return Exponents{e[1], e[0], 0, 0}; }); };
  return PlanarOneForm{swap(w.B), swap(w.A)};
}

struct GenericCurve {
  std::vector<std::pair<int, int>> support;  // sorted, distinct
  int d_x0 = 0, d_y0 = 0, d_x = 0, d_y = 0;
};

/// Support and degrees of a*f1 + b*f2 for generic a, b.
inline GenericCurve generic_curve(const QPoly& f1, const QPoly& f2) {
  if (f1.is_constant() && f2.is_constant()) throw DegenerateField("a first integral must be nonconstant");
  if (!f1.is_zero() && !f2.is_zero()) {
    QPoly g = bivariate_gcd(f1, f2);
    if (!g.is_constant()) throw CoprimalityViolation(print_canonical(g));
  }
  GenericCurve c;
  for (const QPoly* p : {&f1, &f2})
    for (const auto& [e, coef] : p->terms()) c.support.emplace_back(e[0], e[1]);
  std::sort(c.support.begin(), c.support.end());
  c.support.erase(std::unique(c.support.begin(), c.support.end()), c.support.end());
  for (auto [i, j] : c.support) {
    if (j == 0) c.d_x0 = std::max(c.d_x0, i);
    if (i == 0) c.d_y0 = std::max(c.d_y0, j);
    c.d_x = std::max(c.d_x, i);
    c.d_y = std::max(c.d_y, j);
  }
  return c;
}

/// ceil(max G) with G = { (i - d_x0)/j : j > 0 } intersected with Q>=0.
inline int delta1_from_support(const GenericCurve& g) {
  if (g.d_y == 0) throw DegenerateField("the generic curve does not involve y");
  std::optional<Rational> best;
  for (auto [i, j] : g.support) {
    if (j <= 0) continue;
    Rational r(Integer(i - g.d_x0), Integer(j));
    if (r.sign() < 0) continue;
    if (!best || r > *best) best = r;
  }
  return best ? static_cast<int>(best->ceil().get_si()) : 0;
}

struct RegionSpec {
  int delta1 = 0, delta1_prime = 0, d_x0 = 0, d_y0 = 0;
};

struct RegionReport {
  bool contained = true;
  std::vector<std::pair<int, int>> violations;
};

inline RegionReport region_contains(const RegionSpec& s, const GenericCurve& g) {
  RegionReport r;
  for (auto [u, v] : g.support)
    if (u > s.d_x0 + s.delta1 * v || v > s.d_y0 + s.delta1_prime * u) r.violations.emplace_back(u, v);
  r.contained = r.violations.empty();
  return r;
}

/// Bound on the degree of a primitive rational first integral.
inline std::optional<int> degree_bound(const RegionSpec& s) {
  if (s.delta1 == 0) return (1 + s.delta1_prime) * s.d_x0 + s.d_y0;
  if (s.delta1_prime == 0) return (1 + s.delta1) * s.d_y0 + s.d_x0;
  return std::nullopt;
}

struct ConeReport {
  std::optional<int> delta1;
  std::optional<int> delta1_prime;
  /// Cone { u <= delta1*v, v <= delta1'*u } when both are known.
  std::optional<RegionSpec> cone;
  /// No primitive first integral of the form a + x*y*H(x, y).
  bool type9_excluded = false;
};

inline ConeReport cone_test(const PlanarOneForm& w, AnalysisBounds b = {}) {
  detail::require_not_dx(w);
  if (w.A.is_zero()) throw DegenerateField("the form is proportional to dy (the swapped field is a multiple of d/dy)");
  ConeReport r;
  r.delta1 = delta1(w, b);
  r.delta1_prime = delta1(swap_form(w), b);
  if (r.delta1 && r.delta1_prime) r.cone = RegionSpec{*r.delta1, *r.delta1_prime, 0, 0};
  r.type9_excluded = (r.delta1 && *r.delta1 == 0) || (r.delta1_prime && *r.delta1_prime == 0);
  return r;
}

/// Whether f1/f2 is constant along the field a d/dx + b d/dy.
inline bool verify_first_integral(const QPoly& a, const QPoly& b, const QPoly& f1, const QPoly& f2) {
  const QPoly fx = mp_partial(f1, "x") * f2 - f1 * mp_partial(f2, "x");
  const QPoly fy = mp_partial(f1, "y") * f2 - f1 * mp_partial(f2, "y");
  return (a * fx + b * fy).is_zero();
}

/// Cofactor k with X(h) = k*h, when h defines an invariant curve.
inline std::optional<QPoly> invariant_curve_check(const QPoly& a, const QPoly& b, const QPoly& h) {
  if (h.is_zero()) throw DivisionByZero();
  const QPoly xh = a * mp_partial(h, "x") + b * mp_partial(h, "y");
  return mp_exact_divide(xh, h);
}

/// Field of a form under w = b dx - a dy: (a, b) = (-B, A).
inline PlanarField field_of(const PlanarOneForm& w) { return PlanarField{-w.B, w.A}; }

/// Form of a field: a d/dx + b d/dy gives b dx - a dy.
inline PlanarOneForm form_of(const PlanarField& X) { return PlanarOneForm{X.b, -X.a}; }

}  // namespace folint
