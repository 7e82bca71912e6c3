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

// Polynomial systems with a known integer solution set, built so that the
// expected set follows from the construction rather than from a solver.

#ifndef CHIY_TESTS_PLANTED_HPP
#define CHIY_TESTS_PLANTED_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <chiy/classify.hpp>

#include "support.hpp"

namespace chiy::test
{

using Point = std::vector<Integer>;

struct Planted {
    EquationSystem sys;
    std::set<Point> expected;
    std::map<std::string, IntegerInterval> bounds;
};

inline EquationSystem make_system(const VariableNames &vars, const std::vector<Polynomial> &eqs)
{
    EquationSystem sys;
    sys.variables = vars;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        sys.equations.push_back({eqs[i].rebind(vars), "eq" + std::to_string(i)});
    }
    return sys;
}

inline VariableNames names(std::size_t k)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < k; ++i) {
        v.push_back("x" + std::to_string(i));
    }
    return make_variables(v);
}

inline Polynomial affine(std::mt19937_64 &rng, const VariableNames &vars, long spread)
{
    std::uniform_int_distribution<long> d(-spread, spread);
    Polynomial p(d(rng));
    for (std::size_t v = 0; v < vars->size(); ++v) {
        p += Polynomial::variable(vars, v) * d(rng);
    }
    return p;
}

inline Rational dot_linear(const Polynomial &p, const std::vector<Rational> &d)
{
    Rational acc(0);
    for (std::size_t v = 0; v < d.size(); ++v) {
        acc += p.linear_coefficient(v) * d[v];
    }
    return acc;
}

// k - 1 independent linear equations cut out the integer line s + t d (d
// primitive, last entry 1); lambda * mu vanishes at t = 0 and at
// t = -mu(s) / mu'(d). Random multiples of the linear rows hide the product.
inline Planted line_system(std::mt19937_64 &rng, std::size_t k, bool plant_second)
{
    Planted out;
    const auto vars = names(k);
    std::uniform_int_distribution<long> small(-4, 4);
    const auto s = random_integers(rng, k, -20, 20);
    std::vector<Rational> d = random_integers(rng, k, -3, 3);
    d[k - 1] = Rational(1);
    std::vector<Polynomial> x;
    for (std::size_t v = 0; v < k; ++v) {
        x.push_back(Polynomial::variable(vars, v));
    }
    std::vector<Polynomial> lin;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        // x_j - s_j - d_j (x_{k-1} - s_{k-1})
        lin.push_back(x[j] - s[j] - (x[k - 1] - s[k - 1]).scaled(d[j]));
    }
    for (std::size_t j = 1; j < lin.size(); ++j) {
        lin[j] += lin[j - 1] * small(rng); // triangular mixing keeps the rank
    }
    Polynomial lambda;
    do {
        lambda = affine(rng, vars, 5);
        lambda -= lambda.evaluate(s);
    } while (dot_linear(lambda, d).is_zero());
    Polynomial mu;
    if (plant_second) {
        const long r = small(rng) == 0 ? 3 : small(rng) * 2 + 1;
        std::vector<Rational> q;
        for (std::size_t v = 0; v < k; ++v) {
            q.push_back(s[v] + d[v] * Rational(r));
        }
        do {
            mu = affine(rng, vars, 5);
        } while (dot_linear(mu, d).is_zero());
        mu -= mu.evaluate(q);
    } else {
        mu = affine(rng, vars, 30);
    }
    Polynomial quad = lambda * mu;
    for (const auto &l : lin) {
        quad += l * affine(rng, vars, 3);
    }
    std::vector<Polynomial> eqs = lin;
    eqs.push_back(quad);
    std::shuffle(eqs.begin(), eqs.end(), rng);
    out.sys = make_system(vars, eqs);

    // Expected set from the construction.
    std::vector<Rational> ts{Rational(0)};
    const Rational mu_d = dot_linear(mu, d);
    if (!mu_d.is_zero()) {
        ts.push_back(-mu.evaluate(s) / mu_d);
    }
    for (const auto &t : ts) {
        if (!t.is_integer()) {
            continue;
        }
        Point p;
        for (std::size_t v = 0; v < k; ++v) {
            p.push_back((s[v] + d[v] * t).numerator());
        }
        out.expected.insert(p);
    }
    return out;
}

// x^2 + y^2 = R together with lambda * mu = 0, solved by a plain scan of the disc.
inline Planted circle_system(std::mt19937_64 &rng)
{
    Planted out;
    const auto vars = names(2);
    const auto s = random_integers(rng, 2, -15, 15);
    const auto x = Polynomial::variable(vars, 0), y = Polynomial::variable(vars, 1);
    const Rational R = s[0] * s[0] + s[1] * s[1];
    Polynomial lambda = affine(rng, vars, 4);
    lambda -= lambda.evaluate(s);
    const Polynomial mu = affine(rng, vars, 4);
    const std::vector<Polynomial> eqs{x * x + y * y - R, lambda * mu};
    out.sys = make_system(vars, eqs);
    const long rad = static_cast<long>(std::sqrt(R.numerator().get_d())) + 1;
    for (long a = -rad; a <= rad; ++a) {
        for (long b = -rad; b <= rad; ++b) {
            const std::vector<Rational> pt{Rational(a), Rational(b)};
            if (eqs[0].evaluate(pt).is_zero() && eqs[1].evaluate(pt).is_zero()) {
                out.expected.insert({Integer(a), Integer(b)});
            }
        }
    }
    out.bounds = {{"x0", {-rad - 3, rad + 3}}, {"x1", {-rad - 3, rad + 3}}};
    return out;
}

} // namespace chiy::test

#endif
