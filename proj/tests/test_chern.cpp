// Copyright 2026 The chiy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include <chiy/chern.hpp>

#include "support.hpp"

using namespace chiy;

TEST(Newton, RoundTrip)
{
    std::mt19937_64 rng(23);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const ChernVector<Rational> c(test::random_integers(rng, n, -40, 40));
            const auto p = chern_to_power_sums(c);
            const auto e = power_sums_to_elementary(std::span<const Rational>(p), n);
            EXPECT_EQ(e, std::vector<Rational>(c.entries().begin(), c.entries().end()));
        }
    }
}

TEST(Newton, ProjectiveSpacePowerSums)
{
    // T P^n + O = O(1)^{n+1}: every power sum equals n+1.
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto &p : chern_to_power_sums(projective_space_chern(n))) {
            EXPECT_EQ(p, Rational(static_cast<long>(n + 1)));
        }
    }
}

TEST(Newton, SmallCasesByHand)
{
    VariableNames vars;
    const auto c = test::symbolic_chern(3, vars);
    const auto p = chern_to_power_sums(c);
    const auto c1 = c.c(1), c2 = c.c(2), c3 = c.c(3);
    EXPECT_EQ(p[0], c1);
    EXPECT_EQ(p[1], c1 * c1 - c2 * 2);
    EXPECT_EQ(p[2], c1 * c1 * c1 - c1 * c2 * 3 + c3 * 3);
}

TEST(ExpAlphabet, ProjectiveLineAtMinusOne)
{
    // Rank-one alphabet {e^{-x}} on P^1: 1 + (-1)(2x) = 1 - 2x.
    const auto P = exp_alphabet_power_sums(projective_space_chern(1), Rational(-1), 1);
    ASSERT_EQ(P.size(), 1u);
    EXPECT_EQ(P[0], GradedClass<Rational>(1, {Rational(1), Rational(-2)}));
}

TEST(ExpAlphabet, ChernCharacterOfProjectiveSpace)
{
    // ch(T P^n) = (n+1) e^x - 1.
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto ch = exp_alphabet_power_sums(projective_space_chern(n), Rational(1), n)[0];
        EXPECT_EQ(ch[0], Rational(static_cast<long>(n)));
        for (std::size_t m = 1; m <= n; ++m) {
            EXPECT_EQ(ch[m], Rational(static_cast<long>(n + 1)) / Rational(factorial(m)));
        }
    }
}

TEST(Todd, LogCoefficients)
{
    // log(x/(1-e^{-x})) = x/2 - x^2/24 + x^4/2880 - ...
    const auto t = todd_log_coefficients(6);
    EXPECT_EQ(t[0], Rational(1, 2));
    EXPECT_EQ(t[1], Rational(-1, 24));
    EXPECT_EQ(t[2], Rational(0));
    EXPECT_EQ(t[3], Rational(1, 2880));
    EXPECT_EQ(t[4], Rational(0));
}

TEST(Todd, LowDegreePolynomials)
{
    VariableNames vars;
    const auto c = test::symbolic_chern(4, vars);
    const auto td = todd_class(c);
    const auto c1 = c.c(1), c2 = c.c(2), c3 = c.c(3), c4 = c.c(4);
    EXPECT_EQ(td[0], Polynomial(1));
    EXPECT_EQ(td[1], c1.scaled(Rational(1, 2)));
    EXPECT_EQ(td[2], (c1 * c1 + c2).scaled(Rational(1, 12)));
    EXPECT_EQ(td[3], (c1 * c2).scaled(Rational(1, 24)));
    EXPECT_EQ(td[4], (-(c1 * c1 * c1 * c1) + c1 * c1 * c2 * 4 + c2 * c2 * 3 + c1 * c3 - c4).scaled(Rational(1, 720)));
}

TEST(Todd, ProjectiveSpaceNormalization)
{
    for (std::size_t n = 1; n <= 10; ++n) {
        const ManifoldModel<Rational> pn{projective_space_chern(n)};
        EXPECT_EQ(integrate(pn, todd_class(pn.chern())), Rational(1)) << "n = " << n;
    }
}

TEST(Todd, DegreeLocality)
{
    // The degree-k part depends only on c_1..c_k and not on the ambient dimension.
    VariableNames big_vars;
    const auto td_big = todd_class(test::symbolic_chern(7, big_vars));
    for (std::size_t n = 1; n < 7; ++n) {
        VariableNames vars;
        const auto td = todd_class(test::symbolic_chern(n, vars));
        for (std::size_t k = 0; k <= n; ++k) {
            for (auto v : td_big[k].used_variables()) {
                EXPECT_LT(v, k) << "degree " << k;
            }
            EXPECT_EQ(td[k].rebind(big_vars), td_big[k]);
        }
    }
}

TEST(Todd, SpecializationCommutes)
{
    std::mt19937_64 rng(29);
    VariableNames vars;
    const std::size_t n = 6;
    const auto td_sym = todd_class(test::symbolic_chern(n, vars));
    for (int trial = 0; trial < 20; ++trial) {
        const auto vals = test::random_integers(rng, n, -20, 20);
        const auto td_num = todd_class(ChernVector<Rational>(vals));
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(td_sym[k].evaluate(vals), td_num[k]);
        }
    }
}

TEST(Chern, VectorAccessors)
{
    const ChernVector<Rational> c({Rational(3), Rational(3)});
    EXPECT_EQ(c.c(0), Rational(1));
    EXPECT_EQ(c.c(2), Rational(3));
    EXPECT_EQ(c.c(5), Rational(0));
    EXPECT_THROW(ChernVector<Rational>({}), std::invalid_argument);
    const ManifoldModel<Rational> m{c};
    EXPECT_EQ(m.total_chern_class(), GradedClass<Rational>(2, {Rational(1), Rational(3), Rational(3)}));
    EXPECT_THROW(m.integrate(GradedClass<Rational>(3)), std::invalid_argument);
}

TEST(Chern, LiftToPolynomials)
{
    const auto lifted = lift_chern<Polynomial>(projective_space_chern(3));
    EXPECT_EQ(lifted.c(2), Polynomial(6));
}
