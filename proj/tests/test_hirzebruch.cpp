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

#include "goldens.hpp"
#include "test_support.hpp"

namespace folint {
namespace {

using testing::hpoly;

void expect_quadruple(const BigradedOneForm& w, const testing::Quadruple& q) {
  EXPECT_EQ(print_canonical(w.A0), print_canonical(q.A0)) << "A0 at delta " << w.delta;
  EXPECT_EQ(print_canonical(w.A1), print_canonical(q.A1)) << "A1 at delta " << w.delta;
  EXPECT_EQ(print_canonical(w.B0), print_canonical(q.B0)) << "B0 at delta " << w.delta;
  EXPECT_EQ(print_canonical(w.B1), print_canonical(q.B1)) << "B1 at delta " << w.delta;
}

TEST(Extend, FirstExampleGoldens) {
  const PlanarOneForm w = parse_one_form(testing::kExample1);
  for (int d = 0; d <= 5; ++d) expect_quadruple(extend(d, w), testing::example1_extension(d));
}

TEST(Extend, SecondExampleGoldens) {
  const PlanarOneForm w = parse_one_form(testing::kExample2);
  for (int d = 0; d <= 5; ++d) expect_quadruple(extend(d, w), testing::example2_extension(d));
}

TEST(Extend, HandComputedConstantForm) {
  BigradedOneForm w = extend(0, parse_one_form("dx + dy"));
  EXPECT_EQ(w.A0, hpoly("-X1*Y0^2"));
  EXPECT_EQ(w.A1, hpoly("X0*Y0^2"));
  EXPECT_EQ(w.B0, hpoly("-X0^2*Y1"));
  EXPECT_EQ(w.B1, hpoly("X0^2*Y0"));
  EXPECT_EQ(print_canonical(w), "A0 = -X1*Y0^2\nA1 = X0*Y0^2\nB0 = -X0^2*Y1\nB1 = X0^2*Y0\n");
}

TEST(Extend, RejectsBadInput) {
  EXPECT_THROW((void)extend(0, parse_one_form("(x) dx + (2*x) dy", false)), CoprimalityViolation);
  EXPECT_THROW((void)extend(-1, parse_one_form("dx")), Error);
}

TEST(Lemma2, ExamplesPass) {
  for (int d = 0; d <= 3; ++d) EXPECT_TRUE(verify_lemma2(extend(d, parse_one_form(testing::kExample1))).all());
  EXPECT_TRUE(verify_lemma2(extend(1, parse_one_form(testing::kExample2))).all());
}

TEST(Lemma2, CorruptedFormFailsEuler) {
  BigradedOneForm w = extend(2, parse_one_form(testing::kExample1));
  w.A0 = Rational(2) * w.A0;
  const Lemma2Report r = verify_lemma2(w);
  EXPECT_FALSE(r.euler);
  EXPECT_TRUE(r.bidegrees);
  EXPECT_FALSE(r.all());
}

TEST(Lemma2, RandomForms) {
  std::mt19937_64 rng(59);
  for (int k = 0; k < 200; ++k) {
    const PlanarOneForm w = testing::random_coprime_form(rng, 4, 9);
    for (int d = 0; d <= 4; ++d) {
      const BigradedOneForm e = extend(d, w);
      const Lemma2Report r = verify_lemma2(e);
      ASSERT_TRUE(r.bidegrees && r.euler && r.no_common_factor) << print_canonical(w) << " delta " << d;
      // The single (d1, d2) is seen by both A1 and B1.
      if (!e.A1.is_zero()) {
        EXPECT_EQ(mp_bidegree(e.A1, d), (Bidegree{e.d1 - d + 1, e.d2 + 2}));
      }
      if (!e.B1.is_zero()) {
        EXPECT_EQ(mp_bidegree(e.B1, d), (Bidegree{e.d1 + 2, e.d2 + 1}));
      }
      EXPECT_TRUE(proportional(chart_restrict(e, ChartId{0, 0}), w)) << print_canonical(w) << " delta " << d;
    }
  }
}

TEST(Extend, Deterministic) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 20; ++k) {
    const PlanarOneForm w = testing::random_coprime_form(rng, 4, 9);
    EXPECT_EQ(print_canonical(extend(3, w)), print_canonical(extend(3, w)));
  }
}

TEST(ChartRestrict, FirstExampleForms) {
  const PlanarOneForm w = parse_one_form(testing::kExample1);
  for (int d = 0; d <= 3; ++d) {
    const PlanarOneForm f = chart_restrict(extend(d, w), ChartId{1, 0});
    const PlanarOneForm g = testing::example1_omega10(d);
    EXPECT_EQ(print_canonical(f), print_canonical(g)) << "delta " << d;
  }
  EXPECT_EQ(print_canonical(chart_restrict(extend(1, w), ChartId{1, 1})), print_canonical(testing::example1_omega11_1()));
}

TEST(ChartRestrict, SecondExampleU11) {
  const PlanarOneForm w = parse_one_form(testing::kExample2);
  for (int d = 2; d <= 5; ++d)
    EXPECT_EQ(print_canonical(chart_restrict(extend(d, w), ChartId{1, 1})), print_canonical(testing::example2_chain(d, 0)));
}

TEST(ChartRestrict, CommonFactorIsReported) {
  // dx + dy at delta 0 in U11: A0(x,1,y,1) = -y^2, B0(x,1,y,1) = -x^2; no factor.
  const ChartRestriction r = chart_restrict_detailed(extend(0, parse_one_form("dx + dy")), ChartId{1, 1});
  EXPECT_TRUE(r.removed_factor.is_constant());
  EXPECT_EQ(r.form.A, parse_poly("-y^2"));
  EXPECT_EQ(r.form.B, parse_poly("-x^2"));
}

TEST(ChartId, Parse) {
  EXPECT_EQ(ChartId::parse("10"), (ChartId{1, 0}));
  EXPECT_EQ(ChartId::parse("U11"), (ChartId{1, 1}));
  EXPECT_EQ((ChartId{0, 1}).name(), "U01");
  EXPECT_THROW((void)ChartId::parse("12"), Error);
}

}  // namespace
}  // namespace folint
