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

// Shared helpers for the test binaries.

#ifndef CHIY_TESTS_SUPPORT_HPP
#define CHIY_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <chiy/chern.hpp>
#include <chiy/polynomial.hpp>
#include <chiy/rational.hpp>
#include <chiy/series.hpp>

namespace chiy::test
{

inline std::vector<Rational> random_integers(std::mt19937_64 &rng, std::size_t count, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(d(rng));
    }
    return out;
}

inline Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

/// c_1..c_n as free variables named c1..cn.
inline ChernVector<Polynomial> symbolic_chern(std::size_t n, VariableNames &vars)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("c" + std::to_string(i));
    }
    vars = make_variables(names);
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(Polynomial::variable(vars, i));
    }
    return ChernVector<Polynomial>(std::move(c));
}

/// chi_y evaluated at a number y0 != -1 through the characteristic series
/// x (1 + y e^{-x}) / (1 - e^{-x}), without going through ch(Omega^p).
inline Rational chi_y_at(const ChernVector<Rational> &c, const Rational &y0)
{
    using S = TruncatedSeries<Rational>;
    const std::size_t n = c.dimension();
    std::vector<Rational> one_minus_exp_over_x, e_minus;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational inv_fact = Rational(1) / Rational(factorial(k));
        e_minus.push_back(k % 2 == 0 ? inv_fact : -inv_fact);
        const Rational next = Rational(1) / Rational(factorial(k + 1));
        one_minus_exp_over_x.push_back(k % 2 == 0 ? next : -next);
    }
    const S todd_series = inverse(S(n, one_minus_exp_over_x));
    const S q = todd_series * (S::constant(n, Rational(1)) + S(n, e_minus) * y0) * (Rational(1) / (Rational(1) + y0));
    const S l = log(q);
    const auto p = chern_to_power_sums(c);
    std::vector<Rational> arg{Rational(0)};
    for (std::size_t m = 1; m <= n; ++m) {
        arg.push_back(l[m] * p[m - 1]);
    }
    return exp(S(n, arg))[n] * pow(Rational(1) + y0, static_cast<unsigned>(n));
}

/// Coefficients of (y+1)^j, recovered by interpolating chi_y_at at
/// u = y + 1 = 1..n+1 (Newton divided differences, then expanded).
inline std::vector<Rational> expansion_by_interpolation(const ChernVector<Rational> &c)
{
    const std::size_t n = c.dimension();
    std::vector<Rational> u, d;
    for (std::size_t i = 0; i <= n; ++i) {
        u.emplace_back(static_cast<long>(i + 1));
        d.push_back(chi_y_at(c, u.back() - Rational(1)));
    }
    for (std::size_t level = 1; level <= n; ++level) {
        for (std::size_t i = n; i >= level; --i) {
            d[i] = (d[i] - d[i - 1]) / (u[i] - u[i - level]);
        }
    }
    std::vector<Rational> poly{d[n]};
    for (std::size_t i = n; i-- > 0;) {
        // poly = poly * (u - u_i) + d_i
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * u[i];
        }
        next[0] += d[i];
        poly = std::move(next);
    }
    poly.resize(n + 1, Rational(0));
    return poly;
}

} // namespace chiy::test

#endif
