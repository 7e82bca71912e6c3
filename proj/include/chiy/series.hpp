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

#ifndef CHIY_SERIES_HPP
#define CHIY_SERIES_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <chiy/rational.hpp>

namespace chiy
{

inline std::optional<Rational> unit_inverse(const Rational &a)
{
    if (a.is_zero()) {
        return std::nullopt;
    }
    return Rational(1) / a;
}

/// Exact commutative ring usable as series coefficients. Rational scalars
/// embed into the ring; division is only ever by nonzero rationals, expressed
/// as multiplication by the embedded inverse. unit_inverse() is found by ADL.
template <typename R>
concept CoefficientRing = std::regular<R> && std::constructible_from<R, Rational>
                          && requires(const R &a, const R &b) {
                                 { a + b } -> std::convertible_to<R>;
                                 { a - b } -> std::convertible_to<R>;
                                 { a * b } -> std::convertible_to<R>;
                                 { -a } -> std::convertible_to<R>;
                                 { unit_inverse(a) } -> std::same_as<std::optional<R>>;
                             };

/// acc += a * b. Rings may overload this to skip the temporary product.
template <typename R>
void multiply_add(R &acc, const R &a, const R &b)
{
    if constexpr (requires { acc += a * b; }) {
        acc += a * b;
    } else {
        acc = acc + a * b;
    }
}

template <typename R>
void add_to(R &acc, const R &v)
{
    if constexpr (requires { acc += v; }) {
        acc += v;
    } else {
        acc = acc + v;
    }
}

template <CoefficientRing R>
R ring_zero()
{
    return R(Rational(0));
}

template <CoefficientRing R>
R ring_one()
{
    return R(Rational(1));
}

/// Power series in one variable truncated at a fixed order N: terms of degree
/// above N are dropped after every operation. The order is part of the value;
/// binary operations between different orders are rejected.
template <CoefficientRing R>
class TruncatedSeries
{
public:
    using coefficient_type = R;

    explicit TruncatedSeries(std::size_t order) : m_coeffs(order + 1, ring_zero<R>()) {}

    /// Missing coefficients are zero; coefficients beyond the order are dropped.
    TruncatedSeries(std::size_t order, std::vector<R> coeffs) : m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(order + 1, ring_zero<R>());
    }

    static TruncatedSeries constant(std::size_t order, R value)
    {
        return TruncatedSeries(order, std::vector<R>{std::move(value)});
    }

    static TruncatedSeries variable(std::size_t order)
    {
        return TruncatedSeries(order, std::vector<R>{ring_zero<R>(), ring_one<R>()});
    }

    std::size_t order() const { return m_coeffs.size() - 1; }
    const R &operator[](std::size_t k) const { return m_coeffs.at(k); }
    std::span<const R> coefficients() const { return m_coeffs; }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r(*this);
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            add_to(m_coeffs[k], o.m_coeffs[k]);
        }
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if constexpr (requires { m_coeffs[k] -= o.m_coeffs[k]; }) {
                m_coeffs[k] -= o.m_coeffs[k];
            } else {
                m_coeffs[k] = m_coeffs[k] - o.m_coeffs[k];
            }
        }
        return *this;
    }

    TruncatedSeries &operator*=(const R &scalar)
    {
        for (auto &c : m_coeffs) {
            c = c * scalar;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const R &s) { return a *= s; }
    friend TruncatedSeries operator*(const R &s, TruncatedSeries a) { return a *= s; }

    // Cauchy product truncated at the shared order.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.check_order(b);
        const std::size_t n = a.order();
        std::vector<R> out(n + 1, ring_zero<R>());
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.m_coeffs[i] == ring_zero<R>()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                multiply_add(out[i + j], a.m_coeffs[i], b.m_coeffs[j]);
            }
        }
        return TruncatedSeries(n, std::move(out));
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    friend std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
    {
        bool first = true;
        for (std::size_t k = 0; k <= s.order(); ++k) {
            if (s.m_coeffs[k] == ring_zero<R>()) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            os << '(' << s.m_coeffs[k] << ')';
            if (k > 0) {
                os << "*x^" << k;
            }
        }
        if (first) {
            os << '0';
        }
        return os << " + O(x^" << s.order() + 1 << ')';
    }

private:
    void check_order(const TruncatedSeries &o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("TruncatedSeries: order mismatch (" + std::to_string(order())
                                        + " vs " + std::to_string(o.order()) + ")");
        }
    }

    std::vector<R> m_coeffs;
};

template <CoefficientRing R>
TruncatedSeries<R> exp(const TruncatedSeries<R> &a)
{
    if (a[0] != ring_zero<R>()) {
        throw std::domain_error("exp: series must have zero constant term");
    }
    // b' = a' b  =>  k b_k = sum_{j=1..k} j a_j b_{k-j}
    const std::size_t n = a.order();
    std::vector<R> b(n + 1, ring_zero<R>());
    b[0] = ring_one<R>();
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = ring_zero<R>();
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] == ring_zero<R>()) {
                continue;
            }
            multiply_add(acc, a[j], b[k - j] * R(Rational(static_cast<long>(j))));
        }
        b[k] = acc * R(Rational(1, static_cast<long>(k)));
    }
    return TruncatedSeries<R>(n, std::move(b));
}

template <CoefficientRing R>
TruncatedSeries<R> log(const TruncatedSeries<R> &a)
{
    if (a[0] != ring_one<R>()) {
        throw std::domain_error("log: series must have constant term one");
    }
    // b' = a'/a  =>  k b_k = k a_k - sum_{j=1..k-1} j b_j a_{k-j}
    const std::size_t n = a.order();
    std::vector<R> b(n + 1, ring_zero<R>());
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = R(Rational(static_cast<long>(k))) * a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc = acc - R(Rational(static_cast<long>(j))) * b[j] * a[k - j];
        }
        b[k] = acc * R(Rational(1, static_cast<long>(k)));
    }
    return TruncatedSeries<R>(n, std::move(b));
}

template <CoefficientRing R>
TruncatedSeries<R> inverse(const TruncatedSeries<R> &a)
{
    const std::optional<R> u = unit_inverse(a[0]);
    if (!u) {
        throw std::domain_error("inverse: constant term is not a unit");
    }
    const std::size_t n = a.order();
    std::vector<R> b(n + 1, ring_zero<R>());
    b[0] = *u;
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = ring_zero<R>();
        for (std::size_t j = 1; j <= k; ++j) {
            multiply_add(acc, a[j], b[k - j]);
        }
        b[k] = -(*u * acc);
    }
    return TruncatedSeries<R>(n, std::move(b));
}

/// B_0..B_m with B_1 = -1/2, i.e. x/(e^x - 1) = sum B_m x^m / m!.
inline std::vector<Rational> bernoulli_numbers(std::size_t m)
{
    std::vector<Rational> b;
    b.reserve(m + 1);
    b.emplace_back(1);
    for (std::size_t k = 1; k <= m; ++k) {
        // sum_{j=0}^{k} binom(k+1, j) B_j = 0
        Rational acc(0);
        for (std::size_t j = 0; j < k; ++j) {
            acc += Rational(binomial(k + 1, j)) * b[j];
        }
        b.push_back(-acc / Rational(static_cast<long>(k + 1)));
    }
    return b;
}

inline Rational bernoulli(std::size_t m)
{
    return bernoulli_numbers(m).back();
}

} // namespace chiy

#endif
