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

#ifndef CHIY_GENUS_HPP
#define CHIY_GENUS_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <chiy/chern.hpp>
#include <chiy/rational.hpp>
#include <chiy/series.hpp>

namespace chiy
{

/// chi_y = sum_p chi_p y^p.
template <CoefficientRing R>
struct ChiYPolynomial {
    std::size_t n = 0;
    std::vector<R> chi; // chi_0..chi_n

    friend bool operator==(const ChiYPolynomial &, const ChiYPolynomial &) = default;
};

/// chi_y = sum_j a_j (y+1)^j. A_k is a_{2k}.
template <CoefficientRing R>
struct MinusOneExpansion {
    std::vector<R> coefficients; // a_0..a_n

    std::size_t n() const { return coefficients.size() - 1; }

    /// Coefficient of (y+1)^{2k}; identically zero once 2k exceeds the degree.
    R A(std::size_t k) const { return 2 * k < coefficients.size() ? coefficients[2 * k] : ring_zero<R>(); }

    ChiYPolynomial<R> reconstruct() const
    {
        // (y+1)^j = sum_p binom(j,p) y^p
        const std::size_t n = coefficients.size() - 1;
        std::vector<R> chi(n + 1, ring_zero<R>());
        for (std::size_t j = 0; j <= n; ++j) {
            for (std::size_t p = 0; p <= j; ++p) {
                chi[p] = chi[p] + coefficients[j] * R(Rational(binomial(j, p)));
            }
        }
        return {n, std::move(chi)};
    }

    friend bool operator==(const MinusOneExpansion &, const MinusOneExpansion &) = default;
};

/// (n+1)x(n+1) table h^{p,q}; Hodge symmetry and Serre duality are enforced.
class HodgeDiamond
{
public:
    explicit HodgeDiamond(std::vector<std::vector<Integer>> h) : m_h(std::move(h))
    {
        if (m_h.empty()) {
            throw std::invalid_argument("HodgeDiamond: empty table");
        }
        const std::size_t size = m_h.size();
        for (const auto &row : m_h) {
            if (row.size() != size) {
                throw std::invalid_argument("HodgeDiamond: table must be square");
            }
        }
        const std::size_t n = size - 1;
        for (std::size_t p = 0; p <= n; ++p) {
            for (std::size_t q = 0; q <= n; ++q) {
                if (sgn(m_h[p][q]) < 0) {
                    throw std::invalid_argument("HodgeDiamond: negative entry");
                }
                if (m_h[p][q] != m_h[q][p]) {
                    throw std::invalid_argument("HodgeDiamond: Hodge symmetry violated at h^{" + std::to_string(p)
                                                + "," + std::to_string(q) + "}");
                }
                if (m_h[p][q] != m_h[n - p][n - q]) {
                    throw std::invalid_argument("HodgeDiamond: Serre duality violated at h^{" + std::to_string(p)
                                                + "," + std::to_string(q) + "}");
                }
            }
        }
    }

    /// Whitespace-separated integer matrix, row p, column q.
    static HodgeDiamond parse(std::istream &in)
    {
        std::vector<Integer> flat;
        std::string tok;
        while (in >> tok) {
            try {
                flat.emplace_back(tok);
            } catch (const std::invalid_argument &) {
                throw std::invalid_argument("HodgeDiamond: malformed entry '" + tok + "'");
            }
        }
        std::size_t size = 0;
        while (size * size < flat.size()) {
            ++size;
        }
        if (flat.empty() || size * size != flat.size()) {
            throw std::invalid_argument("HodgeDiamond: expected a square matrix, got " + std::to_string(flat.size())
                                        + " entries");
        }
        std::vector<std::vector<Integer>> h(size);
        for (std::size_t p = 0; p < size; ++p) {
            h[p].assign(flat.begin() + static_cast<std::ptrdiff_t>(p * size),
                        flat.begin() + static_cast<std::ptrdiff_t>((p + 1) * size));
        }
        return HodgeDiamond(std::move(h));
    }

    static HodgeDiamond projective_space(std::size_t n)
    {
        std::vector<std::vector<Integer>> h(n + 1, std::vector<Integer>(n + 1, 0));
        for (std::size_t p = 0; p <= n; ++p) {
            h[p][p] = 1;
        }
        return HodgeDiamond(std::move(h));
    }

    std::size_t dimension() const { return m_h.size() - 1; }
    const Integer &h(std::size_t p, std::size_t q) const { return m_h.at(p).at(q); }

private:
    std::vector<std::vector<Integer>> m_h;
};

namespace detail
{

// Elementary symmetric functions E_0..E_n of the alphabet {e^{-x_i}}, i.e.
// ch(Omega^p) for p = 0..n.
template <CoefficientRing R>
std::vector<GradedClass<R>> cotangent_exterior_characters(const ChernVector<R> &c, std::size_t max_p)
{
    const std::size_t n = c.dimension();
    const auto P = exp_alphabet_power_sums(c, Rational(-1), n);
    const auto one = GradedClass<R>::constant(n, ring_one<R>());
    auto E = power_sums_to_elementary<GradedClass<R>>(std::span<const GradedClass<R>>(P).first(max_p), max_p, one);
    E.insert(E.begin(), one);
    return E;
}

template <CoefficientRing R>
R top_product(const GradedClass<R> &a, const GradedClass<R> &b)
{
    const std::size_t n = a.order();
    R acc = ring_zero<R>();
    for (std::size_t i = 0; i <= n; ++i) {
        multiply_add(acc, a[i], b[n - i]);
    }
    return acc;
}

} // namespace detail

/// chi_p = integral of ch(Omega^p) Td.
template <CoefficientRing R>
R chi_p_from_chern(const ManifoldModel<R> &m, std::size_t p)
{
    if (p > m.dimension()) {
        throw std::out_of_range("chi_p_from_chern: p = " + std::to_string(p) + " exceeds dimension "
                                + std::to_string(m.dimension()));
    }
    const auto E = detail::cotangent_exterior_characters(m.chern(), p);
    return detail::top_product(E[p], todd_class(m.chern()));
}

template <CoefficientRing R>
ChiYPolynomial<R> chi_y_from_chern(const ManifoldModel<R> &m)
{
    const std::size_t n = m.dimension();
    const auto E = detail::cotangent_exterior_characters(m.chern(), n);
    const auto td = todd_class(m.chern());
    ChiYPolynomial<R> out{n, {}};
    for (std::size_t p = 0; p <= n; ++p) {
        out.chi.push_back(detail::top_product(E[p], td));
    }
    return out;
}

inline ChiYPolynomial<Rational> chi_y_from_hodge(const HodgeDiamond &h)
{
    const std::size_t n = h.dimension();
    ChiYPolynomial<Rational> out{n, {}};
    for (std::size_t p = 0; p <= n; ++p) {
        Integer acc = 0;
        for (std::size_t q = 0; q <= n; ++q) {
            if (q % 2 == 0) {
                acc += h.h(p, q);
            } else {
                acc -= h.h(p, q);
            }
        }
        out.chi.emplace_back(acc);
    }
    return out;
}

/// Taylor re-expansion about y = -1: a_j = sum_{p>=j} chi_p binom(p,j) (-1)^{p-j}.
template <CoefficientRing R>
MinusOneExpansion<R> expand_at_minus_one(const ChiYPolynomial<R> &chi)
{
    const std::size_t n = chi.chi.size() - 1;
    std::vector<R> a(n + 1, ring_zero<R>());
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t p = j; p <= n; ++p) {
            const R term = chi.chi[p] * R(Rational(binomial(p, j)));
            a[j] = ((p - j) % 2 == 0) ? a[j] + term : a[j] - term;
        }
    }
    return {std::move(a)};
}

/// n(3n-5)/24 c_n + 1/12 c_1 c_{n-1}: the (y+1)^2 coefficient.
template <CoefficientRing R>
R a1_closed_form(const ManifoldModel<R> &m)
{
    const std::size_t n = m.dimension();
    if (n < 2) {
        throw std::invalid_argument("a1_closed_form: requires n >= 2");
    }
    const long nl = static_cast<long>(n);
    const auto &c = m.chern();
    return c.c(n) * R(Rational(nl * (3 * nl - 5), 24)) + c.c(1) * c.c(n - 1) * R(Rational(1, 12));
}

/// Values forced by A_0 and A_1 for M ~ P^n and D ~ P^{n-1}.
struct PinnedProducts {
    Rational euler_M;  // c_n(M)
    Rational euler_D;  // c_{n-1}(D)
    Rational c1cnm1_M; // c_1 c_{n-1}[M]
    Rational c1cnm2_D; // c_1 c_{n-2}[D]

    friend bool operator==(const PinnedProducts &, const PinnedProducts &) = default;
};

inline PinnedProducts pinned_products(std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("pinned_products: requires n >= 2");
    }
    const long nl = static_cast<long>(n);
    return {Rational(nl + 1), Rational(nl), Rational(nl * (nl + 1) * (nl + 1), 2),
            Rational((nl - 1) * nl * nl, 2)};
}

/// True when every chi_p is an integer. Reported, never enforced.
inline bool chi_y_is_integral(const ChiYPolynomial<Rational> &chi)
{
    for (const auto &v : chi.chi) {
        if (!v.is_integer()) {
            return false;
        }
    }
    return true;
}

template <CoefficientRing R>
std::string chi_y_to_string(const ChiYPolynomial<R> &chi, const std::string &var = "y")
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t p = 0; p < chi.chi.size(); ++p) {
        if (chi.chi[p] == ring_zero<R>()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << chi.chi[p] << ')';
        if (p > 0) {
            os << '*' << var;
            if (p > 1) {
                os << '^' << p;
            }
        }
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

} // namespace chiy

#endif
