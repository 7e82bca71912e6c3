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

#include <chiy/enumerate.hpp>
#include <chiy/fujita.hpp>

#include "support.hpp"

using namespace chiy;

namespace
{

// Exhaustive scan without any of the solver's shortcuts.
std::vector<std::vector<Integer>> brute_force(const std::vector<Polynomial> &eqs, const std::vector<IntegerInterval> &box)
{
    std::vector<std::vector<Integer>> out;
    std::vector<std::int64_t> x;
    for (const auto &r : box) {
        x.push_back(r.lo);
    }
    while (true) {
        std::vector<Rational> pt(x.begin(), x.end());
        if (std::all_of(eqs.begin(), eqs.end(), [&](const Polynomial &e) { return e.evaluate(pt).is_zero(); })) {
            out.emplace_back(x.begin(), x.end());
        }
        std::size_t i = x.size();
        while (i-- > 0) {
            if (++x[i] <= box[i].hi) {
                break;
            }
            x[i] = box[i].lo;
        }
        if (i == static_cast<std::size_t>(-1)) {
            return out;
        }
    }
}

Polynomial random_poly(std::mt19937_64 &rng, const VariableNames &vars, const std::vector<Rational> &root)
{
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> exps(0, 2);
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
        Polynomial m(coeff(rng));
        for (std::size_t v = 0; v < vars->size(); ++v) {
            for (int e = exps(rng); e > 0; --e) {
                m *= Polynomial::variable(vars, v);
            }
        }
        p += m;
    }
    return p - p.evaluate(root); // vanishes at the planted point
}

} // namespace

TEST(Enumerate, SquareEqualsFour)
{
    const auto vars = make_variables({"x"});
    const auto x = Polynomial::variable(vars, 0);
    EnumerationOptions opt;
    opt.moduli = {3};
    const auto r = bounded_enumerate({x * x - 4}, {{0, {-10, 10}}}, opt);
    EXPECT_EQ(r.solutions, (std::vector<std::vector<Integer>>{{-2}, {2}}));
}

TEST(Enumerate, MatchesBruteForceOnRandomSystems)
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 2 + trial % 2;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) {
            names.push_back("v" + std::to_string(i));
        }
        const auto vars = make_variables(names);
        const auto root = test::random_integers(rng, k, -6, 6);
        std::vector<Polynomial> eqs{random_poly(rng, vars, root), random_poly(rng, vars, root)};
        std::vector<IntegerInterval> box(k, IntegerInterval{-9, 9});
        BoxBounds bounds;
        for (std::size_t i = 0; i < k; ++i) {
            bounds[i] = box[i];
        }
        const auto expected = brute_force(eqs, box);
        for (const auto &moduli : {std::vector<std::uint32_t>{}, std::vector<std::uint32_t>{2, 3, 5, 7, 11}}) {
            for (unsigned workers : {1u, 3u}) {
                EnumerationOptions opt;
                opt.moduli = moduli;
                opt.workers = workers;
                EXPECT_EQ(bounded_enumerate(eqs, bounds, opt).solutions, expected) << "trial " << trial;
            }
        }
    }
}

TEST(Enumerate, SievingOnlyChangesCounters)
{
    const auto sys = generate_system(5, Branch::standard);
    const std::map<std::string, IntegerInterval> box{{"c2", {0, 40}}, {"c3", {0, 40}}, {"c4", {0, 40}}};
    EnumerationOptions plain;
    plain.moduli = {};
    const auto a = bounded_enumerate(sys, box, plain);
    const auto b = bounded_enumerate(sys, box, {});
    EXPECT_EQ(a.solutions, b.solutions);
    EXPECT_EQ(a.sieved, 0u);
    // the sieve moves outer points from "visited" to "sieved"
    EXPECT_EQ(a.visited, b.visited + b.sieved);
    EXPECT_GT(b.sieved, 0u);
}

TEST(Enumerate, FiveFoldStandardContainsBinomials)
{
    const auto sys = generate_system(5, Branch::standard);
    const auto r = bounded_enumerate(sys, {{"c2", {0, 30}}, {"c3", {0, 40}}, {"c4", {0, 30}}});
    const std::vector<Integer> p5{15, 20, 15};
    EXPECT_NE(std::find(r.solutions.begin(), r.solutions.end(), p5), r.solutions.end());
    for (const auto &s : r.solutions) {
        EXPECT_TRUE(sys.satisfied_by(std::vector<Rational>(s.begin(), s.end())));
    }
}

TEST(Enumerate, FiveFoldHalfIsEmptyInBox)
{
    const auto sys = generate_system(5, Branch::half);
    const auto r = bounded_enumerate(sys, {{"c2", {-500, 500}}, {"c3", {-520, 520}}, {"c4", {-40, 40}}});
    EXPECT_TRUE(r.solutions.empty());
    EXPECT_FALSE(r.budget_exhausted);
}

TEST(Enumerate, WorkersAreDeterministic)
{
    const auto sys = generate_system(5, Branch::standard);
    const std::map<std::string, IntegerInterval> box{{"c2", {-30, 30}}, {"c3", {-30, 30}}, {"c4", {-30, 30}}};
    const auto one = bounded_enumerate(sys, box, {});
    for (unsigned w : {2u, 4u, 7u}) {
        EnumerationOptions opt;
        opt.workers = w;
        const auto many = bounded_enumerate(sys, box, opt);
        EXPECT_EQ(many.solutions, one.solutions);
        EXPECT_EQ(many.visited, one.visited);
        EXPECT_EQ(many.sieved, one.sieved);
    }
}

TEST(Enumerate, BudgetIsReported)
{
    const auto vars = make_variables({"x", "y", "z"});
    const auto x = Polynomial::variable(vars, 0), y = Polynomial::variable(vars, 1), z = Polynomial::variable(vars, 2);
    EnumerationOptions opt;
    opt.budget = 100;
    const auto r = bounded_enumerate({x * y * z - 1}, {{0, {-50, 50}}, {1, {-50, 50}}, {2, {-50, 50}}}, opt);
    EXPECT_TRUE(r.budget_exhausted);
    EXPECT_EQ(r.visited, 0u);
}

TEST(Enumerate, Errors)
{
    const auto vars = make_variables({"x", "y"});
    const auto x = Polynomial::variable(vars, 0), y = Polynomial::variable(vars, 1);
    EXPECT_THROW(bounded_enumerate({x - 1}, {}), std::invalid_argument);
    EXPECT_THROW(bounded_enumerate({x - 1}, {{0, {5, 4}}}), std::invalid_argument);
    EXPECT_THROW(bounded_enumerate({x - y}, {{0, {0, 4}}}), std::invalid_argument);
    EnumerationOptions opt;
    opt.moduli = {4};
    EXPECT_THROW(bounded_enumerate({x - 1}, {{0, {0, 4}}}, opt), std::invalid_argument);
    // a nonzero constant equation has no solutions
    EXPECT_TRUE(bounded_enumerate({Polynomial(3)}, {{0, {0, 4}}}).solutions.empty());
}

TEST(CommonZeroMod, AgreesWithBruteForce)
{
    const auto vars = make_variables({"x", "y"});
    const auto x = Polynomial::variable(vars, 0), y = Polynomial::variable(vars, 1);
    // x^2 + y^2 = 3 has no solution mod 4 but that is not prime; mod 3 only (0, 0) fails
    const std::vector<Polynomial> eqs{x * x + y * y - 3};
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        bool found = false;
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
                found = found || (a * a + b * b + 3 * p - 3) % p == 0;
            }
        }
        EXPECT_EQ(has_common_zero_mod(eqs, p), std::optional<bool>(found)) << "p = " << p;
    }
    // 2x = 1 has no zero mod 2 after clearing nothing; x/2 - 1/2 = 0 is x = 1
    EXPECT_EQ(has_common_zero_mod({x * 2 - 1}, 2), std::optional<bool>(false));
    EXPECT_EQ(has_common_zero_mod({x.scaled(Rational(1, 2)) - Rational(1, 2)}, 2), std::optional<bool>(true));
    EXPECT_FALSE(has_common_zero_mod({x * y - 1}, 97, 100).has_value());
    EXPECT_THROW(has_common_zero_mod(eqs, 9), std::invalid_argument);
}
