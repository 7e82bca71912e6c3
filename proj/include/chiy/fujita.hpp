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

#ifndef CHIY_FUJITA_HPP
#define CHIY_FUJITA_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <chiy/chern.hpp>
#include <chiy/genus.hpp>
#include <chiy/polynomial.hpp>
#include <chiy/rational.hpp>

// The pair (M, D): M an n-fold with the cohomology ring of P^n and D a smooth
// divisor in |O_M(1)| whose complement is a homology cell. Chern data of D is
// eliminated through adjunction, and the chi_y constraints on M and D become
// a polynomial system in c_2(M)..c_{n-1}(M).

namespace chiy
{

enum class Branch { standard, half };
enum class SystemMode { ak, full };

inline std::string to_string(Branch b) { return b == Branch::standard ? "standard" : "half"; }
inline std::string to_string(SystemMode m) { return m == SystemMode::ak ? "ak" : "full"; }

inline Branch parse_branch(const std::string &s)
{
    if (s == "standard") {
        return Branch::standard;
    }
    if (s == "half") {
        return Branch::half;
    }
    throw std::invalid_argument("unknown branch '" + s + "' (expected standard or half)");
}

inline SystemMode parse_mode(const std::string &s)
{
    if (s == "ak") {
        return SystemMode::ak;
    }
    if (s == "full") {
        return SystemMode::full;
    }
    throw std::invalid_argument("unknown mode '" + s + "' (expected ak or full)");
}

/// c_1(M) on the given branch: n+1, or (n+1)/2 which needs n odd.
inline Rational branch_c1(std::size_t n, Branch b)
{
    if (b == Branch::standard) {
        return Rational(static_cast<long>(n + 1));
    }
    if (n % 2 == 0) {
        throw std::invalid_argument("half branch requires odd n: c_1 = (n+1)/2 = " + std::to_string(n + 1)
                                    + "/2 is not an integer");
    }
    return Rational(static_cast<long>((n + 1) / 2));
}

struct Equation {
    Polynomial poly; // poly = 0
    std::string provenance;
};

struct EquationSystem {
    std::size_t n = 0;              // 0 for hand-built systems
    std::optional<Branch> branch;   // empty for hand-built systems
    SystemMode mode = SystemMode::ak;
    VariableNames variables;
    std::vector<Equation> equations;
    std::vector<std::string> notes;

    std::size_t variable_count() const { return variables ? variables->size() : 0; }

    std::size_t variable_index(const std::string &name) const
    {
        for (std::size_t i = 0; i < variable_count(); ++i) {
            if ((*variables)[i] == name) {
                return i;
            }
        }
        throw std::invalid_argument("unknown variable '" + name + "'");
    }

    /// Every polynomial uses only declared variables.
    bool well_formed() const
    {
        for (const auto &eq : equations) {
            if (eq.poly.variables() && eq.poly.variables() != variables
                && (!variables || *eq.poly.variables() != *variables)) {
                return false;
            }
        }
        return true;
    }

    bool satisfied_by(std::span<const Rational> values) const
    {
        return std::all_of(equations.begin(), equations.end(),
                           [&](const Equation &eq) { return eq.poly.evaluate(values).is_zero(); });
    }
};

/// c_i(D) = c_i(M) - c_{i-1}(D) with c_0(D) = 1, for i = 1..n-1.
template <CoefficientRing R>
ChernVector<R> adjunction_chern(const ChernVector<R> &cM)
{
    const std::size_t n = cM.dimension();
    if (n < 2) {
        throw std::invalid_argument("adjunction_chern: M must have dimension at least 2");
    }
    std::vector<R> cD;
    R prev = ring_one<R>();
    for (std::size_t i = 1; i < n; ++i) {
        prev = cM.c(i) - prev;
        cD.push_back(prev);
    }
    return ChernVector<R>(std::move(cD));
}

template <CoefficientRing R>
R alternating_sum_residual(const ChernVector<R> &c)
{
    const std::size_t n = c.dimension();
    R acc = ring_zero<R>();
    for (std::size_t k = 0; k <= n; ++k) {
        acc = (k % 2 == 0) ? acc + c.c(k) : acc - c.c(k);
    }
    return acc - R(Rational(n % 2 == 0 ? 1 : -1));
}

/// sum_{k=0}^{n} (-1)^k c_k == (-1)^n.
template <CoefficientRing R>
bool alternating_sum_check(const ChernVector<R> &c)
{
    return alternating_sum_residual(c) == ring_zero<R>();
}

struct DichotomyRoot {
    Rational value;
    bool integral = false;

    friend bool operator==(const DichotomyRoot &, const DichotomyRoot &) = default;
};

/// LHS - RHS of  n(n+1)^2 / (2c) = n + (n-1)n^2 / (2(c-1)).
inline Rational dichotomy_residual(std::size_t n, const Rational &c1)
{
    if (c1 == Rational(0) || c1 == Rational(1)) {
        throw std::domain_error("dichotomy_residual: c_1 must differ from 0 and 1");
    }
    const Rational nr(static_cast<long>(n));
    return nr * (nr + 1) * (nr + 1) / (Rational(2) * c1) - nr - (nr - 1) * nr * nr / (Rational(2) * (c1 - 1));
}

/// Exact solutions of the c_1 equation above, ascending.
inline std::vector<DichotomyRoot> dichotomy_roots(std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("dichotomy_roots: requires n >= 2");
    }
    // Clear denominators with 2c(c-1):  n(n+1)^2 (c-1) - 2n c(c-1) - (n-1)n^2 c = 0
    const auto vars = make_variables({"c1"});
    const Polynomial c = Polynomial::variable(vars, 0);
    const Rational nr(static_cast<long>(n));
    const Polynomial q = c.scaled(nr * (nr + 1) * (nr + 1)) - Polynomial(nr * (nr + 1) * (nr + 1))
                         - (c * c - c).scaled(Rational(2) * nr) - c.scaled((nr - 1) * nr * nr);
    const Rational a = q.leading_coefficient();
    const Rational b = q.linear_coefficient(0);
    const Rational k = q.constant_term();
    if (q.total_degree() != 2) {
        throw std::logic_error("dichotomy_roots: cleared equation is not quadratic");
    }
    const auto root = exact_sqrt(b * b - Rational(4) * a * k);
    if (!root) {
        return {};
    }
    std::vector<DichotomyRoot> out;
    for (const Rational &r : {(-b - *root) / (Rational(2) * a), (-b + *root) / (Rational(2) * a)}) {
        if (r == Rational(0) || r == Rational(1)) {
            continue;
        }
        if (std::none_of(out.begin(), out.end(), [&](const DichotomyRoot &d) { return d.value == r; })) {
            out.push_back({r, r.is_integer()});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.value < y.value; });
    return out;
}

/// The half branch survives integrality and the mod-2 congruence
/// (n+1)/2 = n+1 (mod 2) between c_1 and w_2; equivalently n = 3 (mod 4).
inline bool parity_admissible(std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("parity_admissible: requires n >= 2");
    }
    if ((n + 1) % 2 != 0) {
        return false;
    }
    const std::size_t half = (n + 1) / 2;
    return (half % 2) == ((n + 1) % 2);
}

struct ForcedValues {
    Rational cM_nm1; // c_{n-1}(M)
    Rational cD_nm2; // c_{n-2}(D)
};

struct ForcedInconsistency {
    std::string entry;
    Rational first;
    Rational second;
    std::string message;
};

/// Half-branch values forced by the pinned Chern numbers, or the collision
/// that rules the branch out.
inline std::variant<ForcedValues, ForcedInconsistency> forced_values(std::size_t n)
{
    if (n < 3 || n % 4 != 3) {
        throw std::invalid_argument("forced_values: requires n = 3 (mod 4), got " + std::to_string(n));
    }
    const PinnedProducts pin = pinned_products(n);
    const Rational c1M = branch_c1(n, Branch::half);
    const Rational c1D = c1M - 1;
    ForcedValues fv{pin.c1cnm1_M / c1M, pin.c1cnm2_D / c1D};
    if (n - 2 == 1 && fv.cD_nm2 != c1D) {
        return ForcedInconsistency{"c_1(D)", c1D, fv.cD_nm2,
                                   "c_1(D) is forced to " + c1D.to_string() + " by the branch and to "
                                       + fv.cD_nm2.to_string() + " by c_1 c_{n-2}[D]"};
    }
    // adjunction in top degree: c_{n-1}(M) = c_{n-1}(D) + c_{n-2}(D)
    if (fv.cM_nm1 != pin.euler_D + fv.cD_nm2) {
        return ForcedInconsistency{"c_{n-1}(M)", fv.cM_nm1, pin.euler_D + fv.cD_nm2,
                                   "adjunction contradicts the forced value of c_{n-1}(M)"};
    }
    return fv;
}

/// Chern vector of M on a branch with unknowns c_2..c_{n-1} and c_n = n+1.
inline ChernVector<Polynomial> symbolic_chern_M(std::size_t n, Branch branch, const VariableNames &vars)
{
    std::vector<Polynomial> c;
    c.emplace_back(branch_c1(n, branch));
    for (std::size_t i = 2; i < n; ++i) {
        c.push_back(Polynomial::variable(vars, i - 2));
    }
    c.emplace_back(Rational(static_cast<long>(n + 1)));
    return ChernVector<Polynomial>(std::move(c));
}

inline VariableNames chern_unknowns(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 2; i < n; ++i) {
        names.push_back("c" + std::to_string(i));
    }
    return make_variables(std::move(names));
}

/// Builds the system A_k(M) = A_k(P^n), A_k(D) = A_k(P^{n-1}) with D eliminated
/// through adjunction, plus the alternating Chern sum. Full mode adds the odd
/// (y+1)-coefficients as well.
inline EquationSystem generate_system(std::size_t n, Branch branch, SystemMode mode = SystemMode::ak)
{
    if (n < 3) {
        throw std::invalid_argument("generate_system: requires n >= 3");
    }
    EquationSystem sys;
    sys.n = n;
    sys.branch = branch;
    sys.mode = mode;
    sys.variables = chern_unknowns(n);

    const ChernVector<Polynomial> cM = symbolic_chern_M(n, branch, sys.variables);
    const ChernVector<Polynomial> cD = adjunction_chern(cM);

    const auto expM = expand_at_minus_one(chi_y_from_chern(ManifoldModel<Polynomial>(cM)));
    const auto expD = expand_at_minus_one(chi_y_from_chern(ManifoldModel<Polynomial>(cD)));
    const auto refM = expand_at_minus_one(chi_y_from_chern(ManifoldModel<Rational>(projective_space_chern(n))));
    const auto refD = expand_at_minus_one(chi_y_from_chern(ManifoldModel<Rational>(projective_space_chern(n - 1))));

    auto emit = [&](Polynomial p, std::string provenance) {
        if (p.is_zero()) {
            sys.notes.push_back("dropped " + provenance + ": reduces to 0 = 0");
            return;
        }
        sys.equations.push_back({p.rebind(sys.variables), std::move(provenance)});
    };

    for (std::size_t k = 0; 2 * k <= n; ++k) {
        emit(expM.A(k) - Polynomial(refM.A(k)), "A_" + std::to_string(k) + "(M)");
    }
    for (std::size_t k = 0; 2 * k <= n - 1; ++k) {
        emit(expD.A(k) - Polynomial(refD.A(k)), "A_" + std::to_string(k) + "(D)");
    }
    if (mode == SystemMode::full) {
        for (std::size_t j = 1; j <= n; j += 2) {
            emit(expM.coefficients[j] - Polynomial(refM.coefficients[j]), "a_" + std::to_string(j) + "(M)");
        }
        for (std::size_t j = 1; j <= n - 1; j += 2) {
            emit(expD.coefficients[j] - Polynomial(refD.coefficients[j]), "a_" + std::to_string(j) + "(D)");
        }
    }
    emit(alternating_sum_residual(cM), "alternating_sum(M)");
    return sys;
}

/// c_i = binom(n+1, i) for the unknowns c_2..c_{n-1}.
inline std::vector<Rational> binomial_assignment(std::size_t n)
{
    std::vector<Rational> v;
    for (std::size_t i = 2; i < n; ++i) {
        v.emplace_back(binomial(n + 1, i));
    }
    return v;
}

} // namespace chiy

#endif
