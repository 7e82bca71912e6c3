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

#ifndef CHIY_LINEAR_HPP
#define CHIY_LINEAR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <chiy/fujita.hpp>
#include <chiy/polynomial.hpp>
#include <chiy/rational.hpp>

namespace chiy
{

/// Sparse linear combination of equations: index -> multiplier.
using Combination = std::vector<std::pair<std::size_t, Rational>>;

/// variable := value, justified by  sum(multiplier * equation) == variable - value,
/// where the equations are taken as they stand just before this substitution
/// is applied.
struct Substitution {
    std::size_t variable = 0;
    Polynomial value;
    Combination witness;
};

/// sum(multiplier * equation) is the nonzero constant `constant`.
struct LinearInconsistency {
    Combination witness;
    Rational constant;
};

struct LinearReduction {
    std::vector<Polynomial> equations; // same indexing as the input; solved rows become zero
    std::vector<Substitution> substitutions;
    std::optional<LinearInconsistency> inconsistency;
};

inline Polynomial combine(std::span<const Polynomial> eqs, const Combination &c)
{
    Polynomial acc;
    for (const auto &[i, m] : c) {
        acc += eqs[i].scaled(m);
    }
    return acc;
}

namespace detail
{

struct LinearRow {
    std::vector<Rational> coeffs; // one per variable
    Rational constant;
    std::map<std::size_t, Rational> combination;

    bool has_variables() const
    {
        for (const auto &c : coeffs) {
            if (!c.is_zero()) {
                return true;
            }
        }
        return false;
    }
};

inline void row_axpy(LinearRow &dst, const LinearRow &src, const Rational &f)
{
    for (std::size_t v = 0; v < dst.coeffs.size(); ++v) {
        if (!src.coeffs[v].is_zero()) {
            dst.coeffs[v] -= f * src.coeffs[v];
        }
    }
    dst.constant -= f * src.constant;
    for (const auto &[i, m] : src.combination) {
        auto &slot = dst.combination[i];
        slot -= f * m;
        if (slot.is_zero()) {
            dst.combination.erase(i);
        }
    }
}

inline Combination to_combination(const std::map<std::size_t, Rational> &m)
{
    return {m.begin(), m.end()};
}

} // namespace detail

/// Gaussian elimination over Q on the affine equations, repeated until no
/// affine equation is left (substituting can linearize further equations).
/// Pivots go to the highest-index variable first, so low-index unknowns stay
/// free.
inline LinearReduction linear_reduce(std::vector<Polynomial> eqs, const VariableNames &vars)
{
    const std::size_t nv = vars ? vars->size() : 0;
    LinearReduction out;
    for (auto &e : eqs) {
        e = e.rebind(vars);
    }
    while (true) {
        std::vector<detail::LinearRow> rows;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (eqs[i].is_zero() || !eqs[i].is_affine()) {
                continue;
            }
            detail::LinearRow r;
            for (std::size_t v = 0; v < nv; ++v) {
                r.coeffs.push_back(eqs[i].linear_coefficient(v));
            }
            r.constant = eqs[i].constant_term();
            r.combination[i] = Rational(1);
            rows.push_back(std::move(r));
        }
        if (rows.empty()) {
            break;
        }
        std::size_t rank = 0;
        std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, variable)
        for (std::size_t col = nv; col-- > 0;) {
            std::size_t pick = rows.size();
            for (std::size_t r = rank; r < rows.size(); ++r) {
                if (!rows[r].coeffs[col].is_zero()) {
                    pick = r;
                    break;
                }
            }
            if (pick == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[pick]);
            const Rational inv = Rational(1) / rows[rank].coeffs[col];
            for (auto &c : rows[rank].coeffs) {
                c *= inv;
            }
            rows[rank].constant *= inv;
            for (auto &[i, m] : rows[rank].combination) {
                m *= inv;
            }
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && !rows[r].coeffs[col].is_zero()) {
                    const Rational f = rows[r].coeffs[col];
                    detail::row_axpy(rows[r], rows[rank], f);
                }
            }
            pivots.emplace_back(rank, col);
            ++rank;
        }
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r].constant.is_zero()) {
                out.inconsistency = LinearInconsistency{detail::to_combination(rows[r].combination), rows[r].constant};
                out.equations = std::move(eqs);
                return out;
            }
        }
        if (pivots.empty()) {
            break;
        }
        std::vector<Substitution> round;
        for (const auto &[r, var] : pivots) {
            // var + sum a_j x_j + k = 0
            Polynomial value(-rows[r].constant);
            for (std::size_t v = 0; v < nv; ++v) {
                if (v != var && !rows[r].coeffs[v].is_zero()) {
                    value -= Polynomial::variable(vars, v).scaled(rows[r].coeffs[v]);
                }
            }
            round.push_back({var, value.rebind(vars), detail::to_combination(rows[r].combination)});
        }
        for (const auto &s : round) {
            for (auto &e : eqs) {
                e = e.substitute(s.variable, s.value);
            }
            out.substitutions.push_back(s);
        }
    }
    out.equations = std::move(eqs);
    return out;
}

inline LinearReduction linear_reduce(const EquationSystem &sys)
{
    std::vector<Polynomial> eqs;
    for (const auto &e : sys.equations) {
        eqs.push_back(e.poly);
    }
    return linear_reduce(std::move(eqs), sys.variables);
}

/// The reduced system: surviving nonzero equations with their provenance.
inline EquationSystem reduced_system(const EquationSystem &sys, const LinearReduction &lr)
{
    EquationSystem out = sys;
    out.equations.clear();
    for (std::size_t i = 0; i < lr.equations.size(); ++i) {
        if (!lr.equations[i].is_zero()) {
            out.equations.push_back({lr.equations[i], sys.equations[i].provenance});
        }
    }
    for (const auto &s : lr.substitutions) {
        out.notes.push_back("substituted " + (*sys.variables)[s.variable] + " = " + s.value.to_string());
    }
    return out;
}

/// Values of substituted variables after back-substituting later
/// substitutions into earlier ones; still polynomials in the free variables.
inline std::map<std::size_t, Polynomial> resolve_substitutions(const std::vector<Substitution> &subs)
{
    std::map<std::size_t, Polynomial> resolved;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Polynomial v = it->value;
        for (const auto &[var, val] : resolved) {
            v = v.substitute(var, val);
        }
        resolved.emplace(it->variable, std::move(v));
    }
    return resolved;
}

} // namespace chiy

#endif
