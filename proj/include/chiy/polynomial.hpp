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

#ifndef CHIY_POLYNOMIAL_HPP
#define CHIY_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <chiy/rational.hpp>

namespace chiy
{

using Exponents = std::vector<std::uint32_t>;
using VariableNames = std::shared_ptr<const std::vector<std::string>>;

inline VariableNames make_variables(std::vector<std::string> names)
{
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Exponent tuple stored inline (no allocation per term), with its total
/// degree cached. Ordered graded-lexicographically.
class Monomial
{
public:
    static constexpr std::size_t max_variables = 32;
    static constexpr std::uint32_t max_exponent = 255;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : m_size(checked_size(nvars)) {}
    explicit Monomial(const Exponents &e) : m_size(checked_size(e.size()))
    {
        for (std::size_t i = 0; i < e.size(); ++i) {
            set(i, e[i]);
        }
    }

    std::size_t size() const { return m_size; }
    std::uint32_t degree() const { return m_degree; }
    std::uint32_t operator[](std::size_t i) const { return i < m_size ? m_exp[i] : 0; }

    void set(std::size_t i, std::uint32_t value)
    {
        if (value > max_exponent) {
            throw std::overflow_error("Monomial: exponent exceeds " + std::to_string(max_exponent));
        }
        m_degree = m_degree - m_exp[i] + value;
        m_exp[i] = static_cast<std::uint8_t>(value);
    }

    bool is_one() const { return m_degree == 0; }

    Exponents exponents() const { return Exponents(m_exp.begin(), m_exp.begin() + m_size); }

    static Monomial product(const Monomial &a, const Monomial &b, std::size_t nvars)
    {
        Monomial r(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            const std::uint32_t v = std::uint32_t{a[i]} + b[i];
            if (v > max_exponent) {
                throw std::overflow_error("Monomial: exponent exceeds " + std::to_string(max_exponent));
            }
            r.m_exp[i] = static_cast<std::uint8_t>(v);
        }
        r.m_degree = a.m_degree + b.m_degree;
        return r;
    }

    /// Same tuple padded (or trimmed of zero entries) to nvars.
    Monomial resized(std::size_t nvars) const
    {
        Monomial r(nvars);
        for (std::size_t i = 0; i < std::min<std::size_t>(nvars, m_size); ++i) {
            r.m_exp[i] = m_exp[i];
        }
        r.m_degree = m_degree;
        return r;
    }

    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.m_degree == b.m_degree && a.m_exp == b.m_exp;
    }

    friend bool operator<(const Monomial &a, const Monomial &b)
    {
        if (a.m_degree != b.m_degree) {
            return a.m_degree < b.m_degree;
        }
        return a.m_exp < b.m_exp;
    }

private:
    static std::uint8_t checked_size(std::size_t n)
    {
        if (n > max_variables) {
            throw std::invalid_argument("Polynomial: at most " + std::to_string(max_variables) + " variables");
        }
        return static_cast<std::uint8_t>(n);
    }

    std::array<std::uint8_t, max_variables> m_exp{};
    std::uint32_t m_degree = 0;
    std::uint8_t m_size = 0;
};

/// Sparse multivariate polynomial over the rationals. The variable list is
/// shared between all polynomials of one system; a polynomial without a
/// variable list is a constant and mixes with any other polynomial.
/// Zero coefficients are never stored; terms are kept in graded-lex order.
class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational &c)
    {
        if (!c.is_zero()) {
            m_terms.emplace(Monomial(), c);
        }
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable(const VariableNames &vars, std::size_t index)
    {
        if (!vars || index >= vars->size()) {
            throw std::out_of_range("Polynomial::variable: index out of range");
        }
        Polynomial p;
        p.m_vars = vars;
        Monomial e(vars->size());
        e.set(index, 1);
        p.m_terms.emplace(e, Rational(1));
        return p;
    }

    static Polynomial from_terms(const VariableNames &vars, const std::vector<std::pair<Exponents, Rational>> &terms)
    {
        Polynomial p;
        p.m_vars = vars;
        const std::size_t nv = vars ? vars->size() : 0;
        for (const auto &[e, c] : terms) {
            if (e.size() != nv) {
                throw std::invalid_argument("Polynomial: exponent tuple length does not match variable count");
            }
            p.accumulate(Monomial(e), c);
        }
        return p;
    }

    const VariableNames &variables() const { return m_vars; }
    std::size_t variable_count() const { return m_vars ? m_vars->size() : 0; }
    const TermMap &terms() const { return m_terms; }
    std::size_t term_count() const { return m_terms.size(); }

    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const { return total_degree() <= 0; }

    Rational constant_term() const
    {
        if (!m_terms.empty() && m_terms.begin()->first.is_one()) {
            return m_terms.begin()->second;
        }
        return Rational(0);
    }

    /// Coefficient of the highest term in graded-lex order.
    Rational leading_coefficient() const { return m_terms.empty() ? Rational(0) : m_terms.rbegin()->second; }

    /// -1 for the zero polynomial.
    int total_degree() const
    {
        return m_terms.empty() ? -1 : static_cast<int>(m_terms.rbegin()->first.degree());
    }

    unsigned degree_in(std::size_t var) const
    {
        unsigned d = 0;
        for (const auto &[e, c] : m_terms) {
            d = std::max(d, e[var]);
        }
        return d;
    }

    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    std::vector<std::size_t> used_variables() const
    {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < variable_count(); ++v) {
            if (depends_on(v)) {
                out.push_back(v);
            }
        }
        return out;
    }

    bool is_affine() const { return total_degree() <= 1; }

    /// Coefficient of the degree-one monomial in var.
    Rational linear_coefficient(std::size_t var) const
    {
        if (var >= variable_count()) {
            return Rational(0);
        }
        Monomial e(variable_count());
        e.set(var, 1);
        const auto it = m_terms.find(e);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    /// Coefficients of var^0..var^d as polynomials in the other variables.
    std::vector<Polynomial> coefficients_in(std::size_t var) const
    {
        std::vector<Polynomial> out(degree_in(var) + 1);
        for (auto &q : out) {
            q.m_vars = m_vars;
        }
        for (const auto &[e, c] : m_terms) {
            Monomial rest = e;
            const unsigned k = e[var];
            if (k > 0) {
                rest.set(var, 0);
            }
            out[k].accumulate(rest, c);
        }
        return out;
    }

    Polynomial operator-() const
    {
        Polynomial r(*this);
        for (auto &[e, c] : r.m_terms) {
            c = -c;
        }
        return r;
    }

    Polynomial &operator+=(const Polynomial &o) { return add_scaled(o, Rational(1)); }
    Polynomial &operator-=(const Polynomial &o) { return add_scaled(o, Rational(-1)); }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        Polynomial r;
        r.m_vars = unify(a, b);
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        const std::size_t nv = r.variable_count();
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                r.accumulate(Monomial::product(ea, eb, nv), ca * cb);
            }
        }
        return r;
    }

    Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

    /// this += a * b without materializing the product.
    Polynomial &add_product(const Polynomial &a, const Polynomial &b)
    {
        VariableNames vars = unify(a, b);
        if (!vars || (m_vars && vars != m_vars && *vars == *m_vars)) {
            vars = m_vars;
        } else if (m_vars && vars != m_vars) {
            throw std::invalid_argument("Polynomial: incompatible variable lists");
        }
        if (vars != m_vars) {
            m_vars = vars;
            widen();
        }
        const std::size_t nv = variable_count();
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                accumulate(Monomial::product(ea, eb, nv), ca * cb);
            }
        }
        return *this;
    }

    Polynomial scaled(const Rational &s) const
    {
        if (s.is_zero()) {
            Polynomial z;
            z.m_vars = m_vars;
            return z;
        }
        Polynomial r(*this);
        for (auto &[e, c] : r.m_terms) {
            c *= s;
        }
        return r;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        if (a.m_terms.size() != b.m_terms.size()) {
            return false;
        }
        if (a.m_vars && b.m_vars && a.m_vars != b.m_vars && *a.m_vars != *b.m_vars) {
            return false;
        }
        auto ia = a.m_terms.begin();
        auto ib = b.m_terms.begin();
        for (; ia != a.m_terms.end(); ++ia, ++ib) {
            if (ia->second != ib->second || !same_exponents(ia->first, ib->first)) {
                return false;
            }
        }
        return true;
    }

    /// Replaces variable `var` by `value` (any polynomial over the same variables).
    Polynomial substitute(std::size_t var, const Polynomial &value) const
    {
        if (!depends_on(var)) {
            return *this;
        }
        const auto parts = coefficients_in(var);
        // Horner in value
        Polynomial r = parts.back();
        for (std::size_t k = parts.size() - 1; k-- > 0;) {
            r = r * value + parts[k];
        }
        if (!r.m_vars) {
            r.m_vars = unify(*this, value);
            r.widen();
        }
        return r;
    }

    /// Substitutes rational values for a subset of variables.
    Polynomial substitute_values(const std::map<std::size_t, Rational> &values) const
    {
        Polynomial r;
        r.m_vars = m_vars;
        for (const auto &[e, c] : m_terms) {
            Monomial rest = e;
            Rational coeff = c;
            for (const auto &[v, x] : values) {
                if (rest[v] > 0) {
                    coeff *= pow(x, rest[v]);
                    rest.set(v, 0);
                }
            }
            r.accumulate(rest, coeff);
        }
        return r;
    }

    /// Full evaluation; values.size() must equal the variable count.
    Rational evaluate(std::span<const Rational> values) const
    {
        if (values.size() < variable_count() && !is_constant()) {
            throw std::invalid_argument("Polynomial::evaluate: wrong number of values");
        }
        Rational sum(0);
        for (const auto &[e, c] : m_terms) {
            Rational t = c;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] > 0) {
                    t *= pow(values[v], e[v]);
                }
            }
            sum += t;
        }
        return sum;
    }

    /// Rebinds to a (possibly different) variable list. Every used variable of
    /// this polynomial must exist by name in `vars`.
    Polynomial rebind(const VariableNames &vars) const
    {
        Polynomial r;
        r.m_vars = vars;
        const std::size_t nv = vars ? vars->size() : 0;
        std::vector<std::size_t> map(variable_count(), nv);
        for (std::size_t v = 0; v < variable_count(); ++v) {
            const auto &name = (*m_vars)[v];
            for (std::size_t w = 0; w < nv; ++w) {
                if ((*vars)[w] == name) {
                    map[v] = w;
                }
            }
            if (map[v] == nv && depends_on(v)) {
                throw std::invalid_argument("Polynomial::rebind: variable '" + name + "' not in target list");
            }
        }
        for (const auto &[e, c] : m_terms) {
            Monomial out(nv);
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] > 0) {
                    out.set(map[v], e[v]);
                }
            }
            r.accumulate(out, c);
        }
        return r;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const Polynomial &p)
    {
        if (p.m_terms.empty()) {
            return os << '0';
        }
        bool first = true;
        for (auto it = p.m_terms.rbegin(); it != p.m_terms.rend(); ++it) {
            const auto &[e, c] = *it;
            Rational coeff = c;
            if (first) {
                if (coeff.sign() < 0) {
                    os << '-';
                    coeff = -coeff;
                }
            } else {
                os << (coeff.sign() < 0 ? " - " : " + ");
                if (coeff.sign() < 0) {
                    coeff = -coeff;
                }
            }
            first = false;
            bool need_star = false;
            if (e.is_one() || coeff != Rational(1)) {
                os << coeff;
                need_star = true;
            }
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) {
                    continue;
                }
                if (need_star) {
                    os << '*';
                }
                os << (*p.m_vars)[v];
                if (e[v] > 1) {
                    os << '^' << e[v];
                }
                need_star = true;
            }
        }
        return os;
    }

private:
    static bool same_exponents(const Monomial &a, const Monomial &b)
    {
        if (a.degree() != b.degree()) {
            return false;
        }
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) {
                return false;
            }
        }
        return true;
    }

    static VariableNames unify(const Polynomial &a, const Polynomial &b)
    {
        if (!a.m_vars) {
            return b.m_vars;
        }
        if (!b.m_vars || a.m_vars == b.m_vars) {
            return a.m_vars;
        }
        if (*a.m_vars != *b.m_vars) {
            throw std::invalid_argument("Polynomial: incompatible variable lists");
        }
        return a.m_vars;
    }

    void accumulate(const Monomial &e, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        const Monomial key = e.size() == variable_count() ? e : e.resized(variable_count());
        auto [it, inserted] = m_terms.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    Polynomial &add_scaled(const Polynomial &o, const Rational &s)
    {
        const VariableNames vars = unify(*this, o);
        if (vars != m_vars) {
            m_vars = vars;
            widen();
        }
        for (const auto &[e, c] : o.m_terms) {
            accumulate(e, c * s);
        }
        return *this;
    }

    // Constants created without a variable list carry zero-length monomials;
    // re-key them once a variable list is attached.
    void widen()
    {
        if (!m_terms.empty() && m_terms.begin()->first.size() != variable_count()) {
            TermMap old;
            old.swap(m_terms);
            for (const auto &[e, c] : old) {
                accumulate(e, c);
            }
        }
    }

    VariableNames m_vars;
    TermMap m_terms;
};

inline std::optional<Polynomial> unit_inverse(const Polynomial &p)
{
    if (p.is_zero() || !p.is_constant()) {
        return std::nullopt;
    }
    return Polynomial(Rational(1) / p.constant_term());
}

inline Polynomial operator*(const Polynomial &p, const Rational &s) { return p.scaled(s); }
inline Polynomial operator*(const Polynomial &p, long s) { return p.scaled(Rational(s)); }
inline Polynomial operator*(const Polynomial &p, int s) { return p.scaled(Rational(s)); }

inline void multiply_add(Polynomial &acc, const Polynomial &a, const Polynomial &b) { acc.add_product(a, b); }

} // namespace chiy

#endif
