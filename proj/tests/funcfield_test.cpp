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

#include "sepcurve/funcfield.hpp"
#include "sepcurve/parse.hpp"
#include "test_support.hpp"

namespace sepcurve {
namespace {

RationalFunction fn(const char* text) { return parse_rational_function(text); }
Poly poly(const char* text) { return parse_polynomial(text); }

TEST(RationalFunction, ReducedWithMonicDenominator) {
    RationalFunction f(poly("2*t^2-2"), poly("4*t-4"));
    EXPECT_EQ(f.numerator(), poly("1/2*t+1/2"));
    EXPECT_EQ(f.denominator(), poly("1"));
    RationalFunction g(poly("t"), poly("-2*t^2"));
    EXPECT_EQ(g.numerator(), poly("-1/2"));
    EXPECT_EQ(g.denominator(), poly("t"));
    EXPECT_EQ(RationalFunction(Poly(), poly("t+1")).denominator(), poly("1"));
    EXPECT_THROW(RationalFunction(poly("t"), Poly()), InvalidArgument);
    EXPECT_THROW(fn("t") / RationalFunction(), InvalidArgument);
}

TEST(RationalFunction, ApplyMatchesRepeatedArithmetic) {
    testing::Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 0, 5)), 4, 2);
        RationalFunction f = testing::random_function(rng, 3);
        EXPECT_EQ(apply(p, f), p(f));
    }
}

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(fn("t^2"), Place::finite(poly("t"))), 2);
    EXPECT_EQ(valuation(fn("(t^2+1)/(2*t)"), Place::infinity()), -1);
    EXPECT_EQ(valuation(fn("(t^2+1)/t"), Place::finite(poly("t^2+1"))), 1);
    EXPECT_EQ(valuation(fn("1/(t-1)^3"), Place::finite(poly("t-1"))), -3);
    EXPECT_THROW(valuation(RationalFunction(), Place::infinity()), InvalidArgument);
    EXPECT_THROW(Place::finite(poly("(t-1)^2")), InvalidArgument);
}

TEST(Height, Examples) {
    EXPECT_EQ(height(fn("(t^2+1)/(2*t)")), 2);
    EXPECT_EQ(pair_height(fn("3*t^4"), fn("2*t^3")), 1);
    EXPECT_EQ(pair_height_by_places(fn("3*t^4"), fn("2*t^3")), 1);
    EXPECT_THROW(pair_height(RationalFunction(), RationalFunction()), InvalidArgument);
}

TEST(Height, PairWithOneIsHeight) {
    testing::Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        RationalFunction f = testing::random_function(rng);
        EXPECT_EQ(pair_height(f, RationalFunction(Rat(1))), height(f));
        EXPECT_EQ(height_by_places(f), height(f));
        RationalFunction g = testing::random_function(rng);
        EXPECT_EQ(pair_height_by_places(f, g), pair_height(f, g));
    }
}

TEST(DerivativeValuation, Examples) {
    EXPECT_EQ(derivative_place_valuation(fn("t"), Place::infinity()), -2);
    EXPECT_EQ(derivative_place_valuation(fn("t^2"), Place::finite(poly("t"))), 1);
    EXPECT_EQ(derivative_place_valuation(fn("t^2"), Place::infinity()), -3);
    EXPECT_THROW(derivative_place_valuation(fn("3"), Place::infinity()), InvalidArgument);
}

TEST(SumFormulas, RandomFunctions) {
    testing::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        RationalFunction f = testing::random_function(rng, 5);
        RationalFunction df = derivative(f);
        long long total = 0;
        long long total_d = 0;
        for (const auto& place : places_for({f, df})) {
            total += place.degree() * valuation(f, place);
            total_d += place.degree() * derivative_place_valuation(f, place);
        }
        EXPECT_EQ(total, 0) << format(f);
        EXPECT_EQ(total_d, -2) << format(f);
    }
}

TEST(GenerateTestSolution, Examples) {
    auto s = generate_test_solution(poly("x^2+1"), 2, 3, fn("t"));
    EXPECT_EQ(s.p, poly("x^4+1"));
    EXPECT_EQ(s.q, poly("y^6+1"));
    EXPECT_EQ(s.f, fn("t^3"));
    EXPECT_EQ(s.g, fn("t^2"));
    EXPECT_TRUE(s.distinct);
    EXPECT_TRUE(s.satisfied());

    auto shifted = generate_test_solution(poly("x^2+1"), 2, 3, fn("t+1"));
    EXPECT_EQ(shifted.f, fn("(t+1)^3"));
    EXPECT_EQ(shifted.g, fn("(t+1)^2"));

    auto same = generate_test_solution(poly("x^3-x"), 1, 1, fn("t"));
    EXPECT_EQ(same.f, same.g);
    EXPECT_FALSE(same.distinct);

    EXPECT_THROW(generate_test_solution(poly("3"), 1, 2, fn("t")), InvalidArgument);
    EXPECT_THROW(generate_test_solution(poly("x"), 1, 2, fn("5")), InvalidArgument);
}

TEST(VerifyIdentities, CuspFixture) {
    auto r = verify_solution_identities({poly("x^3"), poly("y^2"), fn("t^2"), fn("t^3"), true});
    EXPECT_TRUE(r.degree_height_identity);
    EXPECT_EQ(r.n * r.height_f, 6);
    EXPECT_EQ(r.derivative_pair_height, 1);
    EXPECT_EQ(r.ramification_surplus, 1);
    EXPECT_EQ(r.bound_lhs, Rat(2));
    EXPECT_EQ(r.bound_rhs, Rat(3));
    EXPECT_TRUE(r.derivative_bound);
    EXPECT_EQ(r.pole_order_sum, 4);
    EXPECT_EQ(r.pole_order_expected, 4);
    EXPECT_TRUE(r.pole_identity);
    ASSERT_EQ(r.local_checks.size(), 1U);
    EXPECT_EQ(r.local_checks[0].place, Place::finite(poly("t")));
    EXPECT_EQ((r.local_checks[0].p_multiplicity + 1) * r.local_checks[0].order_f, 6);
    EXPECT_EQ((r.local_checks[0].q_multiplicity + 1) * r.local_checks[0].order_g, 6);
    EXPECT_TRUE(r.all_hold());
}

TEST(VerifyIdentities, ConicFixture) {
    auto r = verify_solution_identities({poly("x^2"), poly("y^2+1"), fn("(t^2+1)/(2*t)"), fn("(t^2-1)/(2*t)"), true});
    EXPECT_EQ(r.n * r.height_f, 4);
    EXPECT_EQ(r.m * r.height_g, 4);
    EXPECT_TRUE(r.all_hold());
}

TEST(VerifyIdentities, FlagsNonDistinctPairs) {
    auto r = verify_solution_identities({poly("x^3-x"), poly("y^3-y"), fn("t"), fn("t"), false});
    EXPECT_TRUE(r.degree_height_identity);
    EXPECT_FALSE(r.distinct);
    EXPECT_NE(std::find(r.notes.begin(), r.notes.end(), "distinctness hypothesis not met"), r.notes.end());
}

TEST(VerifyIdentities, RejectsNonSolutions) {
    try {
        verify_solution_identities({poly("x^2"), poly("y^2+1"), fn("t"), fn("t"), true});
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("identity preconditions violated"), std::string::npos);
    }
    EXPECT_THROW(verify_solution_identities({poly("x^2"), poly("y^2"), fn("1"), fn("1"), true}), InvalidArgument);
}

TEST(VerifyIdentities, SwapsToLargerDegreeFirst) {
    auto r = verify_solution_identities({poly("y^2"), poly("x^3"), fn("t^3"), fn("t^2"), true});
    EXPECT_TRUE(r.swapped);
    EXPECT_EQ(r.n, 3);
    EXPECT_EQ(r.height_f, 2);
}

TEST(VerifyIdentities, GeneratedCorpus) {
    for (const auto& sol : testing::solution_corpus(99, 60)) {
        ASSERT_TRUE(sol.satisfied());
        auto r = verify_solution_identities(sol);
        EXPECT_TRUE(r.degree_height_identity);
        EXPECT_TRUE(r.derivative_bound) << r.bound_lhs << " > " << r.bound_rhs;
        EXPECT_TRUE(r.pole_identity);
        EXPECT_TRUE(r.local_multiplicities);
        EXPECT_TRUE(r.scaling_invariance);
    }
}

TEST(PairHeight, ScalingInvariance) {
    testing::Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        RationalFunction f = testing::random_function(rng);
        RationalFunction g = testing::random_function(rng);
        RationalFunction eta = testing::random_function(rng);
        EXPECT_EQ(pair_height(eta * f, eta * g), pair_height(f, g));
    }
}

}  // namespace
}  // namespace sepcurve
