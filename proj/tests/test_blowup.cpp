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


#include <gtest/gtest.h>

#include <chrono>
#include <iostream>
#include <map>

#include "folint/blowup.hpp"
#include "goldens.hpp"
#include "test_support.hpp"

namespace folint {
namespace {

LocalForm L(const std::string& form) { return LocalForm::from(parse_one_form(form, false)); }
NPoly N(const std::string& p) { return LocalForm::from(PlanarOneForm{parse_poly(p), QPoly(planar_vars())}).A; }

bool x_axis_invariant(const LocalForm& f) {
  // x = 0 is invariant for A dx + B dy iff B(0, y) vanishes identically.
  const NPoly b = f.B.decided();
  for (const auto& [e, c] : b.terms())
    if (e[0] == 0) return false;
  return true;
}

TEST(Jet, Examples) {
  Jet j = jet_multiplicity(L("(y) dx - (x) dy"));
  EXPECT_EQ(j.m, 1);
  EXPECT_EQ(j.a, N("y"));
  EXPECT_EQ(j.b, N("-x"));

  j = jet_multiplicity(LocalForm::from(testing::example1_omega11_1()));
  EXPECT_EQ(j.m, 4);
  EXPECT_EQ(j.a, N("-5*y^4"));
  EXPECT_TRUE(j.b.is_zero());

  j = jet_multiplicity(L("dx"));
  EXPECT_EQ(j.m, 0);
  EXPECT_EQ(j.a, N("1"));
  EXPECT_TRUE(j.b.is_zero());
}

TEST(TerminalDicritical, Examples) {
  EXPECT_TRUE(is_terminal_dicritical(L("(y) dx - (x) dy")));
  EXPECT_FALSE(is_terminal_dicritical(L("(x) dx + (y) dy")));
  EXPECT_FALSE(is_terminal_dicritical(LocalForm::from(testing::example1_omega11_1())));
  EXPECT_THROW((void)is_terminal_dicritical(L("dx")), NotSingular);
}

TEST(EigenvalueRatio, Examples) {
  EXPECT_FALSE(ratio_is_positive_rational(Rational(0), Rational(1)));
  EXPECT_TRUE(ratio_is_positive_rational(Rational(3), Rational(2)));
  EXPECT_FALSE(ratio_is_positive_rational(Rational(5), Rational(5)));
  EXPECT_TRUE(ratio_is_positive_rational(Rational(2), Rational(1)));   // double root, ratio 1
  EXPECT_FALSE(ratio_is_positive_rational(Rational(0), Rational(-1)));  // ratio -1
  EXPECT_THROW((void)ratio_is_positive_rational(Rational(1), Rational(0)), ZeroDeterminant);
}

TEST(EigenvalueRatio, AlgebraicTraceAndDeterminant) {
  TowerPtr t = extend_tower(nullptr, UniPoly<Number>{Number(-2), Number(0), Number(1)});
  const Number s = Number::generator(t, 1);
  // Roots sqrt2 and 2*sqrt2: ratio 2.
  EXPECT_TRUE(ratio_is_positive_rational(Number(3) * s, Number(4)));
  // Roots 1 and sqrt2.
  EXPECT_FALSE(ratio_is_positive_rational(Number(1) + s, s));
  // Roots sqrt2 and -sqrt2.
  EXPECT_FALSE(ratio_is_positive_rational(Number(0), Number(-2)));
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple(L("(x) dx + (y) dy")));
  EXPECT_FALSE(is_simple(L("(y) dx - (x) dy")));
  EXPECT_TRUE(is_simple(LocalForm::from(testing::example1_omega10(0))));
  EXPECT_TRUE(is_simple(L("(y) dx + (x + y^2) dy")));  // saddle-node free check: det != 0
  EXPECT_TRUE(is_simple(L("(y) dx + (y^2 - x^2) dy")));  // det = 0, trace != 0
  EXPECT_FALSE(is_simple(L("(y^2) dx + (x^2) dy")));    // m = 2
  EXPECT_THROW((void)is_simple(L("dx")), NotSingular);
}

TEST(BlowupCharts, Examples) {
  BlowupCharts c = blowup_charts(L("(y) dx - (x) dy"));
  EXPECT_TRUE(c.dicritical);
  EXPECT_EQ(c.exponent, 2);
  EXPECT_TRUE(c.chart1.A.is_zero());
  EXPECT_EQ(c.chart1.B, N("-1"));
  EXPECT_FALSE(x_axis_invariant(c.chart1));

  c = blowup_charts(L("(x) dx + (y) dy"));
  EXPECT_FALSE(c.dicritical);
  EXPECT_EQ(c.chart1.A, N("1 + y^2"));
  EXPECT_EQ(c.chart1.B, N("x*y"));
  EXPECT_TRUE(x_axis_invariant(c.chart1));
}

TEST(BlowupCharts, SecondExampleChain) {
  for (int d = 3; d <= 6; ++d) {
    LocalForm f = LocalForm::from(testing::example2_chain(d, 0));
    for (int k = 1; k <= d - 2; ++k) {
      f = blowup_charts(f).chart1;
      EXPECT_EQ(f.to_string(), LocalForm::from(testing::example2_chain(d, k)).to_string()) << d << " " << k;
    }
    EXPECT_TRUE(is_terminal_dicritical(f));
  }
}

TEST(BlowupCharts, DicriticalIffDivisorNotInvariant) {
  std::mt19937_64 rng(67);
  int dicritical = 0;
  for (int k = 0; k < 100; ++k) {
    LocalForm f = LocalForm::from(testing::random_singular_form(rng, 3, 5));
    // Mix in radial jets so both sides of the equivalence are exercised.
    if (k % 3 == 0) {
      Jet j = jet_multiplicity(f);
      NPoly h = j.a.is_zero() ? j.b : j.a;
      f.A = f.A - j.a + NPoly::variable(planar_vars(), "y") * h;
      f.B = f.B - j.b - NPoly::variable(planar_vars(), "x") * h;
    }
    if (f.A.decided().is_zero() && f.B.decided().is_zero()) continue;
    if (jet_multiplicity(f).m < 1) continue;
    const BlowupCharts c = blowup_charts(f);
    EXPECT_EQ(is_terminal_dicritical(f), !x_axis_invariant(c.chart1)) << f.to_string();
    // Chart 2: the divisor is y = 0, invariant iff A(x, 0) vanishes.
    bool y_invariant = true;
    const NPoly a2 = c.chart2.A.decided();
    for (const auto& [e, v] : a2.terms())
      if (e[1] == 0) y_invariant = false;
    EXPECT_EQ(is_terminal_dicritical(f), !y_invariant) << f.to_string();
    dicritical += c.dicritical;
  }
  EXPECT_GT(dicritical, 0);
}

TEST(SingularPoints, RationalClasses) {
  // A = y(y - 1), B = y^2 - y + x on x = 0.
  auto pts = singular_points_on_divisor(L("(y^2 - y) dx + (y^2 - y + x) dy"), Axis::XZero);
  ASSERT_EQ(pts.size(), 2u);
  std::set<std::string> ys;
  for (const auto& p : pts) {
    EXPECT_FALSE(p.point.tower);
    ys.insert(p.point.y.to_string());
    EXPECT_EQ(p.at_origin, p.point.y == Number(0));
  }
  EXPECT_EQ(ys, (std::set<std::string>{"0", "1"}));
}

TEST(SingularPoints, AlgebraicClass) {
  auto pts = singular_points_on_divisor(L("(y^2 - 2 + x) dx + (x) dy"), Axis::XZero);
  ASSERT_EQ(pts.size(), 1u);
  ASSERT_TRUE(pts[0].point.tower);
  EXPECT_EQ(pts[0].point.tower->depth(), 1);
  EXPECT_EQ(pts[0].point.modulus_text(), tower_text(pts[0].point.tower));
  const Number y = pts[0].point.y;
  EXPECT_TRUE(decide_zero(y * y - Number(2)));
  // The translated form is singular at the origin.
  EXPECT_GE(jet_multiplicity(pts[0].local).m, 1);
}

TEST(SingularPoints, NoneOnNonInvariantDivisor) {
  EXPECT_TRUE(singular_points_on_divisor(blowup_charts(L("(y) dx - (x) dy")).chart1, Axis::XZero).empty());
}

TEST(SingularPoints, CommonAxisFactorIsRejected) {
  EXPECT_THROW((void)singular_points_on_divisor(L("(x*y) dx + (x) dy"), Axis::XZero), InfiniteSingularLocus);
}

TEST(Reduce, FirstExampleChain) {
  const auto t0 = std::chrono::steady_clock::now();
  const BlowupTree t = reduce(LocalForm::from(testing::example1_omega11_1()));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(seconds, 10.0);
  ASSERT_EQ(t.nodes.size(), 17u);
  EXPECT_FALSE(t.truncated);
  EXPECT_FALSE(t.has_terminal_dicritical());
  auto prox = [&](int i, int j) {
    const auto& p = t.node(i).proximate_to;
    return std::find(p.begin(), p.end(), j) != p.end();
  };
  EXPECT_TRUE(prox(2, 1));
  for (int i : {3, 4, 5}) EXPECT_TRUE(prox(i, 2)) << i;
  for (int i = 6; i <= 17; ++i) EXPECT_TRUE(prox(i, i - 1)) << i;
  for (int i = 2; i <= 17; ++i) EXPECT_EQ(t.node(i).parent, i - 1);  // a chain
  EXPECT_FALSE(is_dicritical(LocalForm::from(testing::example1_omega11_1())));
}

TEST(Reduce, RadialSingularity) {
  const BlowupTree t = reduce(L("(y) dx - (x) dy"));
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.nodes[0].terminal_dicritical);
  EXPECT_TRUE(t.residual.empty());
  EXPECT_TRUE(is_dicritical(L("(y) dx - (x) dy")));
}

TEST(Reduce, SecondExampleHitsDicriticalAtDepthDeltaMinusTwo) {
  for (int d = 3; d <= 5; ++d) {
    const BlowupTree t = reduce(LocalForm::from(testing::example2_chain(d, 0)));
    EXPECT_FALSE(t.truncated);
    for (int k = 0; k <= d - 2; ++k) {
      const BlowupNode& n = t.node(k + 1);
      EXPECT_EQ(n.depth, k);
      EXPECT_EQ(n.form.to_string(), LocalForm::from(testing::example2_chain(d, k)).to_string());
      EXPECT_EQ(n.terminal_dicritical, k == d - 2) << "delta " << d << " n " << k;
      if (k > 0) EXPECT_EQ(n.point.trail, std::vector<int>(static_cast<std::size_t>(k), 1));
    }
  }
}

TEST(Reduce, SimpleAndNonsingularPoints) {
  const BlowupTree t = reduce(LocalForm::from(testing::example1_omega10(0)));
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.nodes[0].simple);
  EXPECT_FALSE(t.nodes[0].blown_up);
  EXPECT_FALSE(is_dicritical(LocalForm::from(testing::example1_omega10(0))));
  EXPECT_FALSE(is_dicritical(L("dx")));
}

void check_tree_invariants(const BlowupTree& t) {
  for (std::size_t k = 0; k < t.nodes.size(); ++k) {
    const BlowupNode& n = t.nodes[k];
    EXPECT_EQ(n.id, static_cast<int>(k) + 1);
    if (n.terminal_dicritical) EXPECT_GE(n.multiplicity, 1);
    if (n.simple) EXPECT_EQ(n.multiplicity, 1);
    EXPECT_EQ(n.free, n.proximate_to.size() == 1);
    if (n.parent == 0) {
      EXPECT_EQ(k, 0u);
      EXPECT_TRUE(n.proximate_to.empty());
    } else {
      EXPECT_LT(n.parent, n.id);
      EXPECT_EQ(n.depth, t.node(n.parent).depth + 1);
      // A point on the new divisor is always proximate to its parent.
      EXPECT_TRUE(std::find(n.proximate_to.begin(), n.proximate_to.end(), n.parent) != n.proximate_to.end());
      EXPECT_LE(n.proximate_to.size(), 2u);
      EXPECT_FALSE(n.simple);
    }
    if (!t.truncated) EXPECT_TRUE(n.simple || n.blown_up);
  }
  for (const auto& r : t.residual) EXPECT_TRUE(r.simple);
}

TEST(Reduce, TerminatesOnRandomForms) {
  std::mt19937_64 rng(71);
  std::size_t blown_up = 0, algebraic = 0;
  for (int k = 0; k < 100; ++k) {
    const PlanarOneForm w = testing::random_singular_form(rng, 3, 5);
    const BlowupTree t = reduce(LocalForm::from(w), ReduceOptions{64, false});
    EXPECT_FALSE(t.truncated) << print_canonical(w);
    check_tree_invariants(t);
    for (const auto& n : t.nodes) {
      blown_up += n.blown_up;
      algebraic += n.point.tower != nullptr;
    }
  }
  std::cout << "blown-up nodes " << blown_up << ", nodes over extensions " << algebraic << "\n";
  EXPECT_GT(blown_up, 20u);
}

TEST(Reduce, VisitsAlgebraicPoints) {
  // dF for F = (y^2 - 2x^2)^2 + x^5: tangent directions y = +-sqrt2 x, no dicritical point.
  const BlowupTree t = reduce(L("(-8*x*y^2 + 16*x^3 + 5*x^4) dx + (4*y^3 - 8*x^2*y) dy"));
  EXPECT_FALSE(t.truncated);
  EXPECT_FALSE(t.has_terminal_dicritical());
  check_tree_invariants(t);
  const auto it = std::find_if(t.nodes.begin(), t.nodes.end(), [](const BlowupNode& n) { return n.point.tower != nullptr; });
  ASSERT_NE(it, t.nodes.end());
  EXPECT_EQ(it->point.modulus_text(), tower_text(it->point.tower));
  EXPECT_NE(it->point.modulus_text().find("2"), std::string::npos);
}

TEST(Reduce, TruncationIsReported) {
  const BlowupTree t = reduce(LocalForm::from(testing::example1_omega11_1()), ReduceOptions{3, false});
  EXPECT_TRUE(t.truncated);
  EXPECT_THROW((void)is_dicritical(LocalForm::from(testing::example1_omega11_1()), 3), AnalysisUndecided);
}

TEST(Reduce, ConjugateFormsAgree) {
  // w(s) = (A + s*C) dx + (B + s*D) dy over Q(sqrt 2); s -> -s is a field automorphism.
  TowerPtr t = extend_tower(nullptr, UniPoly<Number>{Number(-2), Number(0), Number(1)});
  const Number g = Number::generator(t, 1);
  std::mt19937_64 rng(73);
  for (int k = 0; k < 40; ++k) {
    const PlanarOneForm base = testing::random_singular_form(rng, 3, 4), pert = testing::random_singular_form(rng, 3, 4);
    const LocalForm b = LocalForm::from(base).rebased(t), p = LocalForm::from(pert).rebased(t);
    LocalForm plus{b.A + g * p.A, b.B + g * p.B, t}, minus{b.A - g * p.A, b.B - g * p.B, t};
    if (plus.A.decided().is_zero() && plus.B.decided().is_zero()) continue;
    const BlowupTree tp = reduce(plus), tm = reduce(minus);
    EXPECT_EQ(tp.nodes.size(), tm.nodes.size());
    EXPECT_EQ(tp.has_terminal_dicritical(), tm.has_terminal_dicritical());
    EXPECT_EQ(is_dicritical(plus), is_dicritical(minus));
  }
}

TEST(Reduce, BranchesOfReducibleModulusAreIndependent) {
  // s^2 = 1: s = 1 gives the radial form, s = -1 gives d(xy).
  TowerPtr t = extend_tower(nullptr, UniPoly<Number>{Number(-1), Number(0), Number(1)});
  const Number s = Number::generator(t, 1);
  const LocalForm r = L("(y) dx + (x) dy").rebased(t);
  const LocalForm w{r.A, Number(-1) * s * r.B, t};
  auto results = on_branches(t, [&](const TowerPtr& b) {
    const LocalForm f = w.rebased(b);
    const bool unit = decide_zero(Number::generator(b, 1) - Number(1));
    return std::make_pair(unit, is_dicritical(f));
  });
  ASSERT_EQ(results.size(), 2u);
  for (const auto& [b, r] : results) EXPECT_EQ(r.first, r.second);
}

}  // namespace
}  // namespace folint
