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

#include "sepcurve/parse.hpp"
#include "sepcurve/polynomial.hpp"
#include "test_support.hpp"

namespace sepcurve {
namespace {

Poly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

TEST(Polynomial, TrimsTrailingZerosAndZeroHasSentinelDegree) {
    EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(P({1, 2, 0, 0}).size(), 2U);
    EXPECT_TRUE(P({0, 0}).is_zero());
    EXPECT_EQ(Poly().degree(), kDegreeOfZero);
    EXPECT_EQ((P({1, 1}) - P({1, 1})).degree(), kDegreeOfZero);
    EXPECT_THROW(Poly().leading(), InvalidArgument);
}

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ(P({-1, 1}) * P({1, 1}), P({-1, 0, 1}));
    EXPECT_EQ(P({1, 2, 3}) + P({0, 0, -3}), P({1, 2}));
    EXPECT_EQ(P({1, 2}) * Rat(0), Poly());
    EXPECT_EQ(-P({1, -2}), P({-1, 2}));
    EXPECT_EQ(derivative(P({0, 0, 0, -4, 3})), P({0, 0, -12, 12}));
    EXPECT_EQ(derivative(P({7})), Poly());
}

TEST(Polynomial, Evaluation) {
    const Poly p = P({0, 0, 0, -4, 3});
    EXPECT_EQ(p(Rat(1)), Rat(-1));
    EXPECT_EQ(p(Rat(0)), Rat(0));
    EXPECT_EQ(p(make_rat(1, 2)), make_rat(3, 16) - make_rat(1, 2));
}

TEST(Polynomial, DivisionWithRemainder) {
    const Poly a = P({-1, 0, 0, 1});
    const Poly b = P({-1, 1});
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, P({1, 1, 1}));
    EXPECT_TRUE(r.is_zero());
    auto [q2, r2] = divmod(P({1, 0, 1}), P({0, 2}));
    EXPECT_EQ(q2, Poly{make_rat(1, 2)} * Poly::variable());
    EXPECT_EQ(r2, P({1}));
    EXPECT_THROW(divmod(a, Poly()), InvalidArgument);
    EXPECT_THROW(exact_quotient(P({1, 0, 1}), P({0, 1})), InvariantViolation);
}

TEST(Polynomial, ComposeExamples) {
    EXPECT_EQ(compose(P({0, 0, 1}), P({1, 1})), P({1, 2, 1}));
    EXPECT_EQ(compose(P({0, 0, 0, 1}), P({0, 2})), P({0, 0, 0, 8}));
    EXPECT_EQ(compose(P({0, 0, 0, -4, 3}), P({0, -1})), P({0, 0, 0, 4, 3}));
}

TEST(Polynomial, ComposeAgreesWithPointEvaluation) {
    testing::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 0, 6)), 5, 3);
        Poly inner = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 0, 3)), 5, 3);
        Poly composed = compose(p, inner);
        for (long x = -3; x <= 3; ++x) EXPECT_EQ(composed(Rat(x)), p(inner(Rat(x))));
    }
}

TEST(Polynomial, MonicAndPrimitive) {
    EXPECT_EQ(monic(P({2, 4})), Poly({make_rat(1, 2), Rat(1)}));
    EXPECT_EQ(primitive_part(Poly({make_rat(1, 2), make_rat(-3, 4)})), P({-2, 3}));
    EXPECT_EQ(primitive_part(P({-6, -9})), P({2, 3}));
}

TEST(Polynomial, FormatIsReadableAndParsesBack) {
    EXPECT_EQ(format(P({0, 0, 0, -4, 3})), "3*x^4 - 4*x^3");
    EXPECT_EQ(format(Poly({make_rat(1, 2), Rat(0), Rat(1)})), "x^2 + 1/2");
    EXPECT_EQ(format(P({1, -5, 0, 0, 0, 1}), "y"), "y^5 - 5*y + 1");
    EXPECT_EQ(format(Poly()), "0");
    EXPECT_EQ(format(P({0, -1})), "-x");
    testing::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 0, 9)), 20, 7);
        EXPECT_EQ(parse_polynomial(format(p)), p) << format(p);
    }
}

}  // namespace
}  // namespace sepcurve
