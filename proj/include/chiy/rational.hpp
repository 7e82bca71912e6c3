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

#ifndef CHIY_RATIONAL_HPP
#define CHIY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chiy
{

static_assert(sizeof(long) == sizeof(long long), "LP64 data model expected");

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class so that generic code
/// never sees GMP expression templates.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : m_value(v) {}
    Rational(long v) : m_value(v) {}
    Rational(long long v) : m_value(static_cast<long>(v)) {}
    Rational(unsigned v) : m_value(v) {}
    Rational(unsigned long v) : m_value(v) {}
    Rational(const Integer &v) : m_value(v) {}
    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a" or "a/b" (decimal, optional sign).
    static Rational parse(std::string_view text)
    {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(Integer(std::string(text)));
            }
            return Rational(Integer(std::string(text.substr(0, slash))),
                            Integer(std::string(text.substr(slash + 1))));
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    Integer numerator() const { return m_value.get_num(); }
    Integer denominator() const { return m_value.get_den(); }
    bool is_integer() const { return m_value.get_den() == 1; }
    bool is_zero() const { return sgn(m_value) == 0; }
    int sign() const { return sgn(m_value); }

    const mpq_class &gmp() const { return m_value; }

    std::string to_string() const { return m_value.get_str(); }

    Rational operator-() const
    {
        Rational r;
        r.m_value = -m_value;
        return r;
    }

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class m_value;
};

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational pow(const Rational &base, unsigned e)
{
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

/// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational &q)
{
    if (q.sign() < 0) {
        return std::nullopt;
    }
    const Integer num = q.numerator();
    const Integer den = q.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

inline bool is_perfect_square(const Integer &v)
{
    return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

/// Floor modulus for small moduli; result in [0, m).
inline std::uint32_t mod_small(const Integer &v, std::uint32_t m)
{
    return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

} // namespace chiy

#endif
