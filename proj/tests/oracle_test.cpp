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

#include "sepcurve/oracle.hpp"
#include "sepcurve/parse.hpp"
#include "test_support.hpp"

namespace sepcurve {
namespace {

Poly parse(const char* text) { return parse_polynomial(text); }

bool near(const BigFloat& a, double b, double tol) { return std::abs(a.to_double() - b) < tol; }

bool has_root(const std::vector<ApproxRoot>& roots, double re, double im, double tol = 1e-12) {
    for (const auto& r : roots)
        if (near(r.re, re, tol) && near(r.im, im, tol)) return true;
    return false;
}

TEST(NumericRoots, FourthRootsOf256) {
    auto roots = numeric_roots(parse("z^4-256"));
    ASSERT_EQ(roots.size(), 4U);
    EXPECT_TRUE(has_root(roots, 4, 0));
    EXPECT_TRUE(has_root(roots, -4, 0));
    EXPECT_TRUE(has_root(roots, 0, 4));
    EXPECT_TRUE(has_root(roots, 0, -4));
}

TEST(NumericRoots, ImaginaryUnit) {
    auto roots = numeric_roots(parse("x^2+1"));
    ASSERT_EQ(roots.size(), 2U);
    EXPECT_TRUE(has_root(roots, 0, 1));
    EXPECT_TRUE(has_root(roots, 0, -1));
}

TEST(NumericRoots, SquareRootOfTwoToHighPrecision) {
    auto roots = numeric_roots(parse("x^2-2"), 256);
    ASSERT_EQ(roots.size(), 2U);
    EXPECT_TRUE(has_root(roots, 1.4142135623730951, 0));
    // Compare against the MPFR square root well beyond double precision.
    BigFloat reference = sqrt(BigFloat(2L, 256));
    bool found = false;
    for (const auto& r : roots)
        if (abs(r.re - reference) < BigFloat::pow2(-200, 256)) found = true;
    EXPECT_TRUE(found);
}

TEST(NumericRoots, ResidualAndRadiusContract) {
    testing::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = squarefree_part(testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 1, 9)), 9, 3));
        if (a.degree() < 1) continue;
        auto roots = numeric_roots(a, 192);
        ASSERT_EQ(static_cast<int>(roots.size()), a.degree());
        for (const auto& r : roots) {
            EXPECT_TRUE(r.residual < BigFloat::pow2(-96, 192));
            EXPECT_TRUE(r.radius > BigFloat(0L, 192));
        }
    }
}

TEST(NumericRoots, RejectsBadInput) {
    EXPECT_THROW(numeric_roots(parse("(x-1)^2")), InvalidArgument);
    EXPECT_THROW(numeric_roots(parse("3")), InvalidArgument);
    EXPECT_THROW(numeric_roots(parse("x^2+1"), 8), InvalidArgument);
}

TEST(CrossCheck, ReflectedQuartic) {
    auto result = numeric_cross_check(parse("3*x^4-4*x^3"), parse("3*y^4+4*y^3"));
    ASSERT_TRUE(std::holds_alternative<NumericMatch>(result));
    const auto& m = std::get<NumericMatch>(result);
    EXPECT_EQ(m.matrix.counts, (std::map<std::pair<int, int>, int>{{{2, 2}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(m.matrix.l0, 2);
    EXPECT_EQ(m.b0_sum, Rat(0));
    EXPECT_EQ(m.b1_sum, Rat(0));
}

TEST(CrossCheck, UnmatchedWeight) {
    auto result = numeric_cross_check(parse("x^5-5*x"), parse("y^2"));
    ASSERT_TRUE(std::holds_alternative<NumericMatch>(result));
    EXPECT_EQ(std::get<NumericMatch>(result).b0_sum, Rat(4));
    EXPECT_EQ(std::get<NumericMatch>(result).b1_sum, Rat(1));
}

TEST(CrossCheck, NearCollisionIsAmbiguous) {
    Poly q = parse("y^2") + Poly{pow(Rat(1, 10), 30)};
    auto flagged = numeric_cross_check(parse("x^2"), q);
    // 1e-30 is below the 1e-20 tolerance: reported as a (wrong) match, which the
    // exact module refutes. Moving the gap into the band gives Ambiguous.
    ASSERT_TRUE(std::holds_alternative<NumericMatch>(flagged));
    EXPECT_EQ(std::get<NumericMatch>(flagged).matrix.l0, 1);
    EXPECT_EQ(match_matrix(critical_profile(parse("x^2")), critical_profile(q)).l0, 0);

    Poly banded = parse("y^2") + Poly{make_rat(5, 1) * pow(Rat(1, 10), 20)};
    EXPECT_TRUE(std::holds_alternative<Ambiguous>(numeric_cross_check(parse("x^2"), banded)));
}

TEST(CrossCheck, RejectsNonpositiveTolerance) {
    EXPECT_THROW(numeric_cross_check(parse("x^2"), parse("y^2"), Rat(0)), InvalidArgument);
}

TEST(CrossCheck, AgreesWithExactModuleOnSeparatedPairs) {
    testing::Rng rng(17);
    int checked = 0;
    for (int trial = 0; checked < 20 && trial < 200; ++trial) {
        auto [p, q] = testing::random_pair(rng, trial, 5);
        auto pp = critical_profile(p);
        auto qp = critical_profile(q);
        if (!pp.injective_on_critical_points || !qp.injective_on_critical_points) continue;
        if (!testing::certified_separation(pp.all_values() * qp.all_values())) continue;
        ++checked;
        auto result = numeric_cross_check(p, q);
        ASSERT_TRUE(std::holds_alternative<NumericMatch>(result));
        const auto& m = std::get<NumericMatch>(result);
        EXPECT_EQ(m.matrix, match_matrix(pp, qp));
        EXPECT_EQ(m.b0_sum, unmatched_weight(pp, qp));
        EXPECT_EQ(m.b1_sum, unmatched_weight(qp, pp));
    }
    EXPECT_EQ(checked, 20);
}

TEST(SeparationCertificate, InterpolatedDifferencePolynomialMatchesResultant) {
    testing::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Poly u = squarefree_part(testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 2, 5)), 4, 2));
        if (u.degree() < 2) continue;
        const Poly e = testing::root_difference_polynomial(u);
        Poly expanded = compose(e, Poly::monomial(Rat(1), 2)) * Poly::monomial(Rat(1), static_cast<std::size_t>(u.degree()));
        EXPECT_EQ(expanded, testing::difference_resultant(u)) << format(u, "z");
    }
}

TEST(SeparationCertificate, Examples) {
    EXPECT_TRUE(testing::certified_separation(parse("x^2-1")));
    EXPECT_TRUE(testing::certified_separation(parse("(x-1)^3*(x+2)")));
    EXPECT_FALSE(testing::certified_separation(parse("x^2-1/100000000000000000000")));
    EXPECT_FALSE(testing::certified_separation(parse("(x-1)*(x-1-1/10000000)*(x+3)")));
}

TEST(BigFloat, Basics) {
    BigFloat a(make_rat(1, 3), 128);
    BigFloat b = a * BigFloat(3L, 128);
    EXPECT_TRUE(abs(b - BigFloat(1L, 128)) < BigFloat::pow2(-120, 128));
    BigFloat c = a;
    EXPECT_EQ(c.precision(), 128);
    BigFloat d = std::move(c);
    EXPECT_TRUE(near(d, 1.0 / 3.0, 1e-15));
    EXPECT_EQ(BigFloat(5L, 64).to_string(5), "5");
}

}  // namespace
}  // namespace sepcurve
