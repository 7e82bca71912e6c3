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

#ifndef CHIY_ROOTS_HPP
#define CHIY_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <chiy/polynomial.hpp>
#include <chiy/rational.hpp>

namespace chiy
{

enum class RootEvidence {
    nonzero_constant, // no variable left: c = 0 with c != 0
    linear,           // a1 x + a0: root iff a1 | a0
    discriminant,     // quadratic: integer root needs a square discriminant
    divisors,         // every integer root divides the trailing coefficient
};

inline std::string to_string(RootEvidence e)
{
    switch (e) {
    case RootEvidence::nonzero_constant:
        return "nonzero_constant";
    case RootEvidence::linear:
        return "linear";
    case RootEvidence::discriminant:
        return "discriminant";
    case RootEvidence::divisors:
        break;
    }
    return "divisors";
}

inline RootEvidence parse_root_evidence(const std::string &s)
{
    for (auto e : {RootEvidence::nonzero_constant, RootEvidence::linear, RootEvidence::discriminant,
                   RootEvidence::divisors}) {
        if (to_string(e) == s) {
            return e;
        }
    }
    throw std::invalid_argument("unknown root evidence '" + s + "'");
}

/// Integer roots of a univariate polynomial together with the evidence that
/// the list is complete.
struct UnivariateRoots {
    std::optional<std::size_t> variable;
    std::vector<Integer> primitive; // a_0..a_d, content 1, a_d > 0
    std::vector<Integer> roots;     // ascending
    RootEvidence evidence = RootEvidence::nonzero_constant;
    std::optional<Integer> discriminant;
    bool discriminant_square = false;
    std::size_t candidates_tested = 0;

    friend bool operator==(const UnivariateRoots &, const UnivariateRoots &) = default;
};

/// Primitive integer coefficients (constant term first) of a polynomial in
/// at most one variable; the leading coefficient is made positive.
inline std::vector<Integer> primitive_integer_coefficients(const Polynomial &p, std::optional<std::size_t> var)
{
    const std::size_t d = var ? p.degree_in(*var) : 0;
    std::vector<Rational> q(d + 1, Rational(0));
    for (const auto &[mono, c] : p.terms()) {
        q[var ? mono[*var] : 0] += c;
    }
    Integer l = 1;
    for (const auto &c : q) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto &c : q) {
        out.push_back(c.numerator() * (l / c.denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g == 0) {
        throw std::invalid_argument("univariate_integer_roots: zero polynomial");
    }
    if (sgn(out.back()) < 0) {
        g = -g;
    }
    for (auto &c : out) {
        c /= g;
    }
    return out;
}

inline Integer evaluate_integer(const std::vector<Integer> &a, const Integer &x)
{
    Integer acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// Positive divisors of m != 0, ascending. Throws when m has a composite
/// cofactor beyond trial-division reach, since the divisor set would then be
/// unverifiable.
inline std::vector<Integer> positive_divisors(Integer m)
{
    m = abs(m);
    if (m == 0) {
        throw std::invalid_argument("positive_divisors: zero");
    }
    std::vector<std::pair<Integer, unsigned>> factors;
    constexpr unsigned long trial_limit = 1'000'000;
    for (unsigned long p = 2; p <= trial_limit && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            m /= p;
            ++e;
        }
        if (e > 0) {
            factors.emplace_back(Integer(p), e);
        }
    }
    if (m > 1) {
        if (Integer(trial_limit) * trial_limit < m && mpz_probab_prime_p(m.get_mpz_t(), 50) == 0) {
            throw std::runtime_error("positive_divisors: cannot factor " + m.get_str());
        }
        factors.emplace_back(m, 1);
    }
    std::vector<Integer> divs{1};
    for (const auto &[p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// All integer roots of p, which must be nonzero and use at most one variable.
inline UnivariateRoots univariate_integer_roots(const Polynomial &p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("univariate_integer_roots: zero polynomial");
    }
    const auto used = p.used_variables();
    if (used.size() > 1) {
        throw std::invalid_argument("univariate_integer_roots: polynomial is not univariate: " + p.to_string());
    }
    UnivariateRoots out;
    if (!used.empty()) {
        out.variable = used.front();
    }
    out.primitive = primitive_integer_coefficients(p, out.variable);
    const auto &a = out.primitive;
    const std::size_t d = a.size() - 1;
    if (d == 0) {
        out.evidence = RootEvidence::nonzero_constant;
        return out;
    }
    if (d == 1) {
        out.evidence = RootEvidence::linear;
        out.candidates_tested = 1;
        if (mpz_divisible_p(a[0].get_mpz_t(), a[1].get_mpz_t()) != 0) {
            out.roots.push_back(-a[0] / a[1]);
        }
        return out;
    }
    if (d == 2) {
        out.evidence = RootEvidence::discriminant;
        const Integer disc = a[1] * a[1] - 4 * a[2] * a[0];
        out.discriminant = disc;
        out.discriminant_square = sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t()) != 0;
        if (out.discriminant_square) {
            Integer s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            for (const Integer &num : {Integer(-a[1] - s), Integer(-a[1] + s)}) {
                const Integer den = 2 * a[2];
                ++out.candidates_tested;
                if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0) {
                    out.roots.push_back(num / den);
                }
            }
            std::sort(out.roots.begin(), out.roots.end());
            out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
        }
        return out;
    }
    out.evidence = RootEvidence::divisors;
    std::size_t low = 0;
    while (a[low] == 0) {
        ++low;
    }
    if (low > 0) {
        out.roots.push_back(0);
    }
    for (const auto &q : positive_divisors(a[low])) {
        for (const Integer &x : {Integer(-q), q}) {
            ++out.candidates_tested;
            if (evaluate_integer(a, x) == 0) {
                out.roots.push_back(x);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace chiy

#endif
