/*
   Copyright 2026 The sepcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "sepcurve/criteria.hpp"
#include "sepcurve/parse.hpp"
#include "test_support.hpp"

namespace sepcurve {
namespace {

Poly parse(const char* text) { return parse_polynomial(text); }

AnalysisInput input(const char* p, const char* q, int genus = 0) {
    return AnalysisInput::make(parse(p), parse(q), genus);
}

TEST(AnalysisInput, OrientsAndValidates) {
    auto in = input("y^2", "x^5-5*x");
    EXPECT_TRUE(in.swapped);
    EXPECT_EQ(in.n(), 5);
    EXPECT_EQ(in.m(), 2);
    EXPECT_FALSE(input("x^3", "y^3").swapped);
    EXPECT_THROW(input("x", "y^2"), InvalidArgument);
    EXPECT_THROW(input("x^2", "y^2", -1), InvalidArgument);
}

TEST(UnmatchedValueCriterion, ConstantsAtGenusZero) {
    auto out = unmatched_value_criterion(input("x^5-5*x", "y^2"));
    EXPECT_EQ(out.values.b0_sum, Rat(4));
    EXPECT_EQ(out.values.s0, make_rat(1, 2));
    EXPECT_EQ(out.verdict.kind, VerdictKind::ConstantsOnly);
}

TEST(UnmatchedValueCriterion, InconclusiveForCusp) {
    auto out = unmatched_value_criterion(input("x^3", "y^2"));
    EXPECT_EQ(out.values.s0, make_rat(-5, 2));
    EXPECT_EQ(out.values.s1, make_rat(-4, 3));
    EXPECT_EQ(out.verdict.kind, VerdictKind::Inconclusive);
    EXPECT_FALSE(out.verdict.bounds);
}

TEST(UnmatchedValueCriterion, HeightBoundsAtGenusTwo) {
    auto out = unmatched_value_criterion(input("x^5-5*x", "y^2", 2));
    EXPECT_EQ(out.values.s0, make_rat(1, 2));
    EXPECT_EQ(out.values.s1, make_rat(1, 5));
    ASSERT_EQ(out.verdict.kind, VerdictKind::HeightBounded);
    // s0 gives h(f) <= 4, h(g) <= 10; s1 gives h(g) <= 10, h(f) <= 4.
    EXPECT_EQ(out.verdict.bounds, (HeightBounds{4, 10}));
}

TEST(UnmatchedValueCriterion, SwappedInputIsEvaluatedInCanonicalOrientation) {
    auto a = unmatched_value_criterion(input("x^5-5*x", "y^2"));
    auto b = unmatched_value_criterion(input("y^2", "x^5-5*x"));
    EXPECT_EQ(a.values, b.values);
}

TEST(MatchedPairCriterion, Examples) {
    auto none = matched_pair_criterion(input("x^5", "y^5-5*y"));
    EXPECT_EQ(none.values.s2, Rat(2));
    EXPECT_EQ(none.verdict.kind, VerdictKind::ConstantsOnly);

    auto same = matched_pair_criterion(input("x^5-5*x", "y^5-5*y"));
    EXPECT_EQ(same.values.s2, Rat(-2));
    EXPECT_EQ(same.verdict.kind, VerdictKind::Inconclusive);

    auto reflect = matched_pair_criterion(input("3*x^4-4*x^3", "3*y^4+4*y^3"));
    EXPECT_EQ(reflect.values.s2, Rat(-2));
    EXPECT_EQ(reflect.verdict.kind, VerdictKind::Inconclusive);
    ASSERT_TRUE(reflect.values.match);
    EXPECT_EQ(reflect.values.match->l0, 2);
}

TEST(MatchedPairCriterion, CountsHigherMultiplicityPairs) {
    // x^3 has one double critical point with value 0, matched by y^2's simple one:
    // s2 = (2 - 3/2 * 1) - 5/2 = -2.
    auto out = matched_pair_criterion(input("x^3", "y^2"));
    EXPECT_EQ(out.values.s2, Rat(-2));
}

TEST(MatchedPairCriterion, RequiresHypothesisI) {
    try {
        matched_pair_criterion(input("x^4-2*x^2", "y^3"));
        FAIL();
    } catch (const HypothesisNotApplicable& e) {
        EXPECT_NE(std::string(e.what()).find("x^4 - 2*x^2"), std::string::npos);
    }
}

TEST(MatchedPairCriterion, HeightBoundsAtPositiveGenus) {
    auto out = matched_pair_criterion(input("x^5", "y^5-5*y", 3));
    ASSERT_EQ(out.verdict.kind, VerdictKind::HeightBounded);
    EXPECT_EQ(out.verdict.bounds, (HeightBounds{2, 2}));
    auto tight = matched_pair_criterion(input("x^5", "y^5-5*y", 2));
    EXPECT_EQ(tight.verdict.bounds, (HeightBounds{1, 1}));
}

TEST(Criteria, PositiveValueNeverInconclusiveAtAnyGenus) {
    testing::Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        auto [p, q] = testing::random_pair(rng, trial, 6);
        const auto base = unmatched_value_criterion(AnalysisInput::make(p, q, 0));
        for (int genus = 0; genus <= 4; ++genus) {
            auto out = unmatched_value_criterion(AnalysisInput::make(p, q, genus));
            EXPECT_EQ(out.values, base.values);
            const bool positive = sgn(out.values.s0) > 0 || sgn(out.values.s1) > 0;
            if (positive) {
                EXPECT_NE(out.verdict.kind, VerdictKind::Inconclusive);
            } else {
                EXPECT_EQ(out.verdict.kind, VerdictKind::Inconclusive);
            }
            if (out.verdict.kind == VerdictKind::ConstantsOnly) {
                const Rat threshold(std::max(0, 2 * genus - 2));
                EXPECT_TRUE(out.values.s0 > threshold || out.values.s1 > threshold);
            }
        }
    }
}

TEST(EqualDegree, QuadraticsAreCaseE) {
    auto v = classify_equal_degree(input("x^2", "y^2+1"));
    EXPECT_EQ(v.kind, VerdictKind::NonconstantExists);
    EXPECT_EQ(v.cases, std::set<ExceptionalCase>{ExceptionalCase::E});
    ASSERT_TRUE(v.witness);
    ASSERT_TRUE(std::holds_alternative<SolutionPair>(*v.witness));
    EXPECT_TRUE(std::get<SolutionPair>(*v.witness).satisfied());
}

TEST(EqualDegree, ReflectedQuarticIsCasesAAndC) {
    auto v = classify_equal_degree(input("3*x^4-4*x^3", "3*y^4+4*y^3"));
    EXPECT_EQ(v.kind, VerdictKind::NonconstantExists);
    EXPECT_EQ(v.cases, (std::set<ExceptionalCase>{ExceptionalCase::A, ExceptionalCase::C}));
    ASSERT_TRUE(v.witness);
    const auto& sol = std::get<SolutionPair>(*v.witness);
    EXPECT_EQ(sol.f, parse_rational_function("-t"));
    EXPECT_EQ(sol.g, parse_rational_function("t"));
}

TEST(EqualDegree, CaseB) {
    // x^3: one double critical point, value 0. y^3 - 3y + 2: simple critical
    // points 1 and -1 with values 0 and 4.
    auto v = classify_equal_degree(input("x^3", "y^3-3*y+2"));
    EXPECT_EQ(v.kind, VerdictKind::NonconstantExists);
    EXPECT_EQ(v.cases, std::set<ExceptionalCase>{ExceptionalCase::B});
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(std::holds_alternative<ExistenceOnly>(*v.witness));
    // Mirrored orientation.
    EXPECT_EQ(classify_equal_degree(input("y^3-3*y+2", "x^3")).cases, std::set<ExceptionalCase>{ExceptionalCase::B});
    // Top values not shared: no case holds.
    EXPECT_EQ(classify_equal_degree(input("x^3", "y^3-3*y+5")).kind, VerdictKind::ConstantsOnly);
}

TEST(EqualDegree, CaseD) {
    // Both critical-value sets are the roots of z^3 + 27/256.
    auto v = classify_equal_degree(input("x^4+x", "-27*y^4-9*y^2+y-1/2"));
    EXPECT_EQ(v.kind, VerdictKind::NonconstantExists);
    EXPECT_EQ(v.cases, std::set<ExceptionalCase>{ExceptionalCase::D});
    EXPECT_FALSE(detect_linear_factor(parse("x^4+x"), parse("-27*y^4-9*y^2+y-1/2")));
}

TEST(EqualDegree, CaseCWithSimplePointsIsFlagged) {
    // n = m = 3 with two simple critical points each and one shared value.
    auto v = classify_equal_degree(input("x^3-3*x", "y^3-3*y+4"));
    EXPECT_TRUE(v.cases.contains(ExceptionalCase::C));
    EXPECT_FALSE(v.notes.empty());
}

TEST(EqualDegree, NoCaseMeansConstants) {
    auto v = classify_equal_degree(input("x^5-5*x", "y^5-5*y+1"));
    EXPECT_EQ(v.kind, VerdictKind::ConstantsOnly);
    EXPECT_TRUE(v.cases.empty());
    EXPECT_FALSE(v.witness);
}

TEST(EqualDegree, GatedOnItsHypotheses) {
    try {
        classify_equal_degree(input("x^3", "y^2"));
        FAIL();
    } catch (const HypothesisNotApplicable& e) {
        EXPECT_NE(std::string(e.what()).find("requires n = m"), std::string::npos);
    }
    EXPECT_THROW(classify_equal_degree(input("x^2", "y^2+1", 1)), HypothesisNotApplicable);
    EXPECT_THROW(classify_equal_degree(input("x^4-2*x^2", "y^4")), HypothesisNotApplicable);
}

}  // namespace
}  // namespace sepcurve
