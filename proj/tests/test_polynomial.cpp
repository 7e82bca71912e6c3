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

#include <chiy/polynomial.hpp>

#include "support.hpp"

using namespace chiy;

namespace
{

struct XYZ {
    VariableNames vars = make_variables({"x", "y", "z"});
    Polynomial x = Polynomial::variable(vars, 0);
    Polynomial y = Polynomial::variable(vars, 1);
    Polynomial z = Polynomial::variable(vars, 2);
};

Polynomial random_poly(std::mt19937_64 &rng, const XYZ &v)
{
    std::uniform_int_distribution<int> e(0, 3);
    Polynomial p;
    for (int t = 0; t < 5; ++t) {
        Polynomial m(test::random_rational(rng));
        for (int i = 0; i < e(rng); ++i) {
            m *= v.x;
        }
        for (int i = 0; i < e(rng); ++i) {
            m *= v.y;
        }
        for (int i = 0; i < e(rng); ++i) {
            m *= v.z;
        }
        p += m;
    }
    return p;
}

} // namespace

TEST(Polynomial, CanonicalFormMakesEqualityStructural)
{
    XYZ v;
    EXPECT_EQ((v.x + v.y) * (v.x - v.y), v.x * v.x - v.y * v.y);
    EXPECT_EQ(v.x - v.x, Polynomial());
    EXPECT_TRUE((v.x - v.x).is_zero());
    EXPECT_EQ((v.x * 2 - v.x - v.x).term_count(), 0u);
}

TEST(Polynomial, RingAxioms)
{
    XYZ v;
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        const auto a = random_poly(rng, v);
        const auto b = random_poly(rng, v);
        const auto c = random_poly(rng, v);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        Polynomial acc = a;
        acc.add_product(b, c);
        EXPECT_EQ(acc, a + b * c);
    }
}

TEST(Polynomial, EvaluationIsAHomomorphism)
{
    XYZ v;
    std::mt19937_64 rng(19);
    for (int i = 0; i < 25; ++i) {
        const auto a = random_poly(rng, v);
        const auto b = random_poly(rng, v);
        const std::vector<Rational> pt{test::random_rational(rng), test::random_rational(rng),
                                       test::random_rational(rng)};
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
        EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
    }
}

TEST(Polynomial, Substitution)
{
    XYZ v;
    const auto p = v.x * v.x * v.y + v.z;
    EXPECT_EQ(p.substitute(0, v.y + 1), (v.y + 1) * (v.y + 1) * v.y + v.z);
    EXPECT_EQ(p.substitute_values({{0, Rational(2)}, {2, Rational(-1)}}), v.y * 4 - 1);
}

TEST(Polynomial, DegreesAndStructure)
{
    XYZ v;
    const auto p = v.x * v.x * v.y + v.z * 3 + 5;
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(p.degree_in(0), 2u);
    EXPECT_EQ(p.degree_in(1), 1u);
    EXPECT_EQ(p.constant_term(), Rational(5));
    EXPECT_FALSE(p.is_affine());
    EXPECT_TRUE((v.z * 3 + 5).is_affine());
    EXPECT_EQ((v.z * 3 + 5).linear_coefficient(2), Rational(3));
    EXPECT_EQ(p.used_variables(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(Polynomial().total_degree(), -1);
    const auto coeffs = p.coefficients_in(0);
    ASSERT_EQ(coeffs.size(), 3u);
    EXPECT_EQ(coeffs[0], v.z * 3 + 5);
    EXPECT_EQ(coeffs[2], v.y);
}

TEST(Polynomial, PrintsReadably)
{
    const auto vars = make_variables({"c2", "c3", "c4"});
    const auto c4 = Polynomial::variable(vars, 2);
    EXPECT_EQ((c4.scaled(Rational(1, 4)) - Rational(15, 2)).to_string(), "1/4*c4 - 15/2");
    EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(Polynomial, RebindByName)
{
    const auto ab = make_variables({"a", "b"});
    const auto ba = make_variables({"b", "a"});
    const auto p = Polynomial::variable(ab, 0) * 2 + Polynomial::variable(ab, 1);
    const auto q = p.rebind(ba);
    EXPECT_EQ(q, Polynomial::variable(ba, 1) * 2 + Polynomial::variable(ba, 0));
    EXPECT_THROW(p.rebind(make_variables({"a"})), std::invalid_argument);
}

TEST(Polynomial, ConstantsMixWithAnyVariableList)
{
    XYZ v;
    EXPECT_EQ(Polynomial(3) + v.x - 3, v.x);
    EXPECT_EQ(unit_inverse(Polynomial(Rational(2, 3))), Polynomial(Rational(3, 2)));
    EXPECT_FALSE(unit_inverse(v.x).has_value());
}

TEST(Polynomial, RejectsIncompatibleVariableLists)
{
    const auto p = Polynomial::variable(make_variables({"a"}), 0);
    const auto q = Polynomial::variable(make_variables({"b"}), 0);
    EXPECT_THROW(p + q, std::invalid_argument);
}

TEST(Polynomial, FromTermsValidatesShape)
{
    const auto vars = make_variables({"a", "b"});
    const auto p = Polynomial::from_terms(vars, {{{1, 0}, Rational(2)}, {{1, 0}, Rational(-2)}, {{0, 2}, Rational(1)}});
    EXPECT_EQ(p, Polynomial::variable(vars, 1) * Polynomial::variable(vars, 1));
    EXPECT_THROW(Polynomial::from_terms(vars, {{{1}, Rational(1)}}), std::invalid_argument);
}
