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

#ifndef CHIY_CHERN_HPP
#define CHIY_CHERN_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <chiy/rational.hpp>
#include <chiy/series.hpp>

// Characteristic classes in the rank-one ring Z[x]/(x^{n+1}). Every class is a
// list of scalars, one per degree; Chern roots never appear, only their power
// sums and elementary symmetric functions.

namespace chiy
{

/// Class in Z[x]/(x^{n+1}) (tensored with the coefficient ring): the degree-k
/// component is the coefficient of x^k.
template <CoefficientRing R>
using GradedClass = TruncatedSeries<R>;

/// Chern data c_1..c_n, where c_i(M) = c_i * x^i. c_0 = 1 is implicit.
template <CoefficientRing R>
class ChernVector
{
public:
    explicit ChernVector(std::vector<R> entries) : m_entries(std::move(entries))
    {
        if (m_entries.empty()) {
            throw std::invalid_argument("ChernVector: dimension must be at least 1");
        }
    }

    std::size_t dimension() const { return m_entries.size(); }

    /// c_i with c_0 = 1 and c_i = 0 above the dimension.
    R c(std::size_t i) const
    {
        if (i == 0) {
            return ring_one<R>();
        }
        if (i > m_entries.size()) {
            return ring_zero<R>();
        }
        return m_entries[i - 1];
    }

    std::span<const R> entries() const { return m_entries; }

    friend bool operator==(const ChernVector &, const ChernVector &) = default;

private:
    std::vector<R> m_entries;
};

/// Manifold whose even cohomology is generated by x with x^n[M] = 1.
template <CoefficientRing R>
class ManifoldModel
{
public:
    explicit ManifoldModel(ChernVector<R> chern) : m_chern(std::move(chern)) {}

    std::size_t dimension() const { return m_chern.dimension(); }
    const ChernVector<R> &chern() const { return m_chern; }

    /// Pairing with the fundamental class: the x^n coefficient.
    R integrate(const GradedClass<R> &g) const
    {
        if (g.order() != dimension()) {
            throw std::invalid_argument("integrate: class of ambient dimension " + std::to_string(g.order())
                                        + " on a manifold of dimension " + std::to_string(dimension()));
        }
        return g[dimension()];
    }

    /// Total Chern class 1 + c_1 x + ... + c_n x^n.
    GradedClass<R> total_chern_class() const
    {
        std::vector<R> comps;
        for (std::size_t i = 0; i <= dimension(); ++i) {
            comps.push_back(m_chern.c(i));
        }
        return GradedClass<R>(dimension(), std::move(comps));
    }

private:
    ChernVector<R> m_chern;
};

template <CoefficientRing R>
R integrate(const ManifoldModel<R> &m, const GradedClass<R> &g)
{
    return m.integrate(g);
}

/// Newton: p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
/// Returns p_1..p_n, where p_k multiplies x^k.
template <CoefficientRing R>
std::vector<R> chern_to_power_sums(const ChernVector<R> &c)
{
    const std::size_t n = c.dimension();
    std::vector<R> p(n + 1, ring_zero<R>());
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = ring_zero<R>();
        for (std::size_t i = 1; i < k; ++i) {
            const R term = c.c(i) * p[k - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        const R last = R(Rational(static_cast<long>(k))) * c.c(k);
        acc = (k % 2 == 1) ? acc + last : acc - last;
        p[k] = acc;
    }
    p.erase(p.begin());
    return p;
}

/// Inverse Newton: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i, with e_0 = one.
/// T is any ring in which rational scalars act (scalars or graded classes).
template <typename T>
std::vector<T> power_sums_to_elementary(std::span<const T> p, std::size_t rank, const T &one)
{
    if (p.size() < rank) {
        throw std::invalid_argument("power_sums_to_elementary: need p_1..p_rank");
    }
    std::vector<T> e;
    e.reserve(rank + 1);
    e.push_back(one);
    for (std::size_t k = 1; k <= rank; ++k) {
        T acc = e[k - 1] * p[0];
        for (std::size_t i = 2; i <= k; ++i) {
            if (i % 2 == 1) {
                acc += e[k - i] * p[i - 1];
            } else {
                acc -= e[k - i] * p[i - 1];
            }
        }
        e.push_back(acc * typename T::coefficient_type(Rational(1, static_cast<long>(k))));
    }
    e.erase(e.begin());
    return e;
}

template <CoefficientRing R>
std::vector<R> power_sums_to_elementary(std::span<const R> p, std::size_t rank)
{
    if (p.size() < rank) {
        throw std::invalid_argument("power_sums_to_elementary: need p_1..p_rank");
    }
    std::vector<R> e{ring_one<R>()};
    for (std::size_t k = 1; k <= rank; ++k) {
        R acc = ring_zero<R>();
        for (std::size_t i = 1; i <= k; ++i) {
            const R term = e[k - i] * p[i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(acc * R(Rational(1, static_cast<long>(k))));
    }
    e.erase(e.begin());
    return e;
}

/// Power sums P_1..P_rank of the alphabet {e^{t x_i}}:
/// P_k = sum_m (t k)^m p_m / m!, with p_0 = rank.
template <CoefficientRing R>
std::vector<GradedClass<R>> exp_alphabet_power_sums(const ChernVector<R> &c, const Rational &t, std::size_t rank)
{
    const std::size_t n = c.dimension();
    const std::vector<R> p = chern_to_power_sums(c);
    std::vector<GradedClass<R>> out;
    out.reserve(rank);
    for (std::size_t k = 1; k <= rank; ++k) {
        const Rational tk = t * Rational(static_cast<long>(k));
        std::vector<R> comps;
        comps.reserve(n + 1);
        comps.push_back(R(Rational(static_cast<long>(rank))));
        for (std::size_t m = 1; m <= n; ++m) {
            comps.push_back(p[m - 1] * R(pow(tk, static_cast<unsigned>(m)) / Rational(factorial(m))));
        }
        out.emplace_back(n, std::move(comps));
    }
    return out;
}

/// Coefficients t_1..t_order of log(x / (1 - e^{-x})).
inline std::vector<Rational> todd_log_coefficients(std::size_t order)
{
    const std::vector<Rational> b = bernoulli_numbers(order);
    // x/(1 - e^{-x}) = sum B_m (-x)^m / m!
    std::vector<Rational> q;
    for (std::size_t m = 0; m <= order; ++m) {
        Rational v = b[m] / Rational(factorial(m));
        q.push_back(m % 2 == 1 ? -v : v);
    }
    const TruncatedSeries<Rational> l = log(TruncatedSeries<Rational>(order, std::move(q)));
    return {l.coefficients().begin() + 1, l.coefficients().end()};
}

/// Td = exp(sum_{m>=1} t_m p_m x^m), truncated at degree n.
template <CoefficientRing R>
GradedClass<R> todd_class(const ChernVector<R> &c)
{
    const std::size_t n = c.dimension();
    const std::vector<Rational> t = todd_log_coefficients(n);
    const std::vector<R> p = chern_to_power_sums(c);
    std::vector<R> arg{ring_zero<R>()};
    for (std::size_t m = 1; m <= n; ++m) {
        arg.push_back(p[m - 1] * R(t[m - 1]));
    }
    return exp(GradedClass<R>(n, std::move(arg)));
}

/// c_i(P^n) = binom(n+1, i).
inline ChernVector<Rational> projective_space_chern(std::size_t n)
{
    if (n < 1) {
        throw std::invalid_argument("projective_space_chern: n must be at least 1");
    }
    std::vector<Rational> c;
    for (std::size_t i = 1; i <= n; ++i) {
        c.emplace_back(binomial(n + 1, i));
    }
    return ChernVector<Rational>(std::move(c));
}

template <CoefficientRing R>
ChernVector<R> lift_chern(const ChernVector<Rational> &c)
{
    std::vector<R> out;
    for (const auto &v : c.entries()) {
        out.push_back(R(v));
    }
    return ChernVector<R>(std::move(out));
}

} // namespace chiy

#endif
