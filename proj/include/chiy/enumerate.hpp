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

#ifndef CHIY_ENUMERATE_HPP
#define CHIY_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <chiy/fujita.hpp>
#include <chiy/polynomial.hpp>
#include <chiy/rational.hpp>
#include <chiy/roots.hpp>

namespace chiy
{

struct IntegerInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::uint64_t size() const { return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
    bool contains(const Integer &v) const { return v >= lo && v <= hi; }

    friend bool operator==(const IntegerInterval &, const IntegerInterval &) = default;
};

/// Box bounds keyed by variable index.
using BoxBounds = std::map<std::size_t, IntegerInterval>;

struct EnumerationOptions {
    std::vector<std::uint32_t> moduli{2, 3, 5, 7, 11};
    unsigned workers = 1;
    /// Upper limit on outer box points; larger boxes are reported as exhausted
    /// without being scanned.
    std::uint64_t budget = std::uint64_t{1} << 34;
};

struct EnumerationResult {
    std::vector<std::size_t> variables;          // box variables, ascending
    std::vector<std::vector<Integer>> solutions; // lexicographic, one entry per box variable
    std::uint64_t visited = 0;                   // outer points processed
    std::uint64_t sieved = 0;                    // outer points rejected by a modular image
    bool budget_exhausted = false;
    std::optional<std::size_t> solved_variable; // variable solved for instead of scanned
};

inline bool is_small_prime(std::uint32_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

namespace detail
{

struct IntTerm {
    Integer coeff;
    std::vector<std::uint32_t> exps; // over box-local variables
};

struct IntEquation {
    std::vector<IntTerm> terms;

    unsigned degree_in(std::size_t v) const
    {
        unsigned d = 0;
        for (const auto &t : terms) {
            d = std::max(d, t.exps[v]);
        }
        return d;
    }

    Integer evaluate(const std::vector<Integer> &x) const
    {
        Integer acc = 0;
        Integer pw;
        for (const auto &t : terms) {
            Integer m = t.coeff;
            for (std::size_t v = 0; v < x.size(); ++v) {
                if (t.exps[v] != 0) {
                    mpz_pow_ui(pw.get_mpz_t(), x[v].get_mpz_t(), t.exps[v]);
                    m *= pw;
                }
            }
            acc += m;
        }
        return acc;
    }
};

inline IntEquation to_int_equation(const Polynomial &p, const std::vector<std::size_t> &local)
{
    Integer l = 1;
    for (const auto &[mono, c] : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    IntEquation eq;
    for (const auto &[mono, c] : p.terms()) {
        IntTerm t{c.numerator() * (l / c.denominator()), std::vector<std::uint32_t>(local.size(), 0)};
        for (std::size_t v = 0; v < local.size(); ++v) {
            t.exps[v] = mono[local[v]];
        }
        eq.terms.push_back(std::move(t));
    }
    return eq;
}

inline std::uint64_t residue(std::int64_t v, std::uint32_t p)
{
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

// Residue tables for one prime: `full` over all box variables, `outer` over all
// but the solved variable (true when some residue of it satisfies every equation).
struct ModularTable {
    std::uint32_t p = 0;
    std::vector<bool> full;
    std::vector<bool> outer;
};

inline std::optional<ModularTable> build_table(const std::vector<IntEquation> &eqs, std::size_t k,
                                               std::optional<std::size_t> solved, std::uint32_t p)
{
    constexpr std::uint64_t limit = std::uint64_t{1} << 22;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        size *= p;
        if (size > limit) {
            return std::nullopt;
        }
    }
    ModularTable t;
    t.p = p;
    t.full.assign(size, true);
    std::vector<std::vector<std::uint64_t>> coeffs;
    for (const auto &eq : eqs) {
        std::vector<std::uint64_t> c;
        for (const auto &term : eq.terms) {
            c.push_back(mpz_fdiv_ui(term.coeff.get_mpz_t(), p));
        }
        coeffs.push_back(std::move(c));
    }
    std::vector<std::uint64_t> r(k, 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t v = k; v-- > 0;) {
            r[v] = rest % p;
            rest /= p;
        }
        for (std::size_t e = 0; e < eqs.size() && t.full[idx]; ++e) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < eqs[e].terms.size(); ++j) {
                std::uint64_t m = coeffs[e][j];
                for (std::size_t v = 0; v < k && m != 0; ++v) {
                    for (std::uint32_t x = 0; x < eqs[e].terms[j].exps[v]; ++x) {
                        m = m * r[v] % p;
                    }
                }
                acc = (acc + m) % p;
            }
            if (acc != 0) {
                t.full[idx] = false;
            }
        }
    }
    if (solved) {
        std::uint64_t outer_size = size / p;
        t.outer.assign(outer_size, false);
        for (std::uint64_t idx = 0; idx < size; ++idx) {
            if (!t.full[idx]) {
                continue;
            }
            std::uint64_t rest = idx;
            std::uint64_t o = 0;
            std::uint64_t scale = 1;
            for (std::size_t v = k; v-- > 0;) {
                const std::uint64_t digit = rest % p;
                rest /= p;
                if (v == *solved) {
                    continue;
                }
                o += digit * scale;
                scale *= p;
            }
            t.outer[o] = true;
        }
    }
    return t;
}

struct EnumerationPlan {
    std::vector<std::size_t> local;       // global variable indices
    std::vector<IntegerInterval> ranges;  // per local variable
    std::vector<IntEquation> eqs;
    std::optional<std::size_t> solved;    // local index
    std::vector<std::size_t> pivots;      // equations of minimal degree in `solved`
    std::vector<std::size_t> outer;       // local indices, scanned by odometer
    std::vector<ModularTable> tables;
};

inline std::uint64_t table_index(const ModularTable &t, const std::vector<std::int64_t> &x,
                                 std::optional<std::size_t> skip)
{
    std::uint64_t idx = 0;
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (skip && v == *skip) {
            continue;
        }
        idx = idx * t.p + residue(x[v], t.p);
    }
    return idx;
}

inline void scan_partition(const EnumerationPlan &plan, std::int64_t first_lo, std::int64_t first_hi,
                           EnumerationResult &out)
{
    const std::size_t k = plan.local.size();
    std::vector<std::int64_t> x(k, 0);
    for (std::size_t i = 0; i < plan.outer.size(); ++i) {
        x[plan.outer[i]] = plan.ranges[plan.outer[i]].lo;
    }
    if (!plan.outer.empty()) {
        x[plan.outer[0]] = first_lo;
    }
    std::vector<Integer> xi(k);
    auto accept_full = [&](const std::vector<std::int64_t> &pt) {
        for (const auto &t : plan.tables) {
            if (!t.full[table_index(t, pt, std::nullopt)]) {
                return false;
            }
        }
        for (std::size_t v = 0; v < k; ++v) {
            xi[v] = Integer(static_cast<long>(pt[v]));
        }
        for (const auto &eq : plan.eqs) {
            if (eq.evaluate(xi) != 0) {
                return false;
            }
        }
        return true;
    };
    auto record = [&](const std::vector<std::int64_t> &pt) {
        std::vector<Integer> s;
        for (auto v : pt) {
            s.emplace_back(static_cast<long>(v));
        }
        out.solutions.push_back(std::move(s));
    };
    while (true) {
        bool pass = true;
        for (const auto &t : plan.tables) {
            if (plan.solved ? !t.outer[table_index(t, x, plan.solved)] : !t.full[table_index(t, x, std::nullopt)]) {
                pass = false;
                break;
            }
        }
        if (!pass) {
            ++out.sieved;
        } else {
            ++out.visited;
            if (!plan.solved) {
                if (accept_full(x)) {
                    record(x);
                }
            } else {
                const std::size_t L = *plan.solved;
                const auto &range = plan.ranges[L];
                for (std::size_t v = 0; v < k; ++v) {
                    xi[v] = Integer(static_cast<long>(x[v]));
                }
                // Specialize a pivot equation to a univariate polynomial in L.
                std::optional<std::vector<Integer>> uni;
                for (std::size_t pi : plan.pivots) {
                    const auto &eq = plan.eqs[pi];
                    std::vector<Integer> c(eq.degree_in(L) + 1, 0);
                    Integer pw;
                    for (const auto &t : eq.terms) {
                        Integer m = t.coeff;
                        for (std::size_t v = 0; v < k; ++v) {
                            if (v != L && t.exps[v] != 0) {
                                mpz_pow_ui(pw.get_mpz_t(), xi[v].get_mpz_t(), t.exps[v]);
                                m *= pw;
                            }
                        }
                        c[t.exps[L]] += m;
                    }
                    while (c.size() > 1 && c.back() == 0) {
                        c.pop_back();
                    }
                    if (c.size() > 1 || c[0] != 0) {
                        uni = std::move(c);
                        break;
                    }
                }
                std::vector<Integer> candidates;
                if (!uni) {
                    for (std::int64_t v = range.lo; v <= range.hi; ++v) {
                        candidates.emplace_back(static_cast<long>(v));
                    }
                } else if (uni->size() == 2) {
                    const auto &c = *uni;
                    if (mpz_divisible_p(c[0].get_mpz_t(), c[1].get_mpz_t()) != 0) {
                        candidates.push_back(-c[0] / c[1]);
                    }
                } else if (uni->size() == 3) {
                    const auto &c = *uni;
                    const Integer disc = c[1] * c[1] - 4 * c[2] * c[0];
                    if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
                        Integer s;
                        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
                        const Integer den = 2 * c[2];
                        for (const Integer &num : {Integer(-c[1] - s), Integer(-c[1] + s)}) {
                            if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0) {
                                candidates.push_back(num / den);
                            }
                        }
                    }
                } else if (uni->size() > 3) {
                    for (std::int64_t v = range.lo; v <= range.hi; ++v) {
                        if (evaluate_integer(*uni, Integer(static_cast<long>(v))) == 0) {
                            candidates.emplace_back(static_cast<long>(v));
                        }
                    }
                }
                std::sort(candidates.begin(), candidates.end());
                candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
                for (const auto &cand : candidates) {
                    if (!range.contains(cand)) {
                        continue;
                    }
                    x[L] = cand.get_si();
                    if (accept_full(x)) {
                        record(x);
                    }
                }
                x[L] = 0;
            }
        }
        // Advance the odometer; the first outer variable is the slowest.
        std::size_t i = plan.outer.size();
        while (i-- > 0) {
            const std::size_t v = plan.outer[i];
            const std::int64_t hi = i == 0 ? first_hi : plan.ranges[v].hi;
            if (x[v] < hi) {
                ++x[v];
                break;
            }
            x[v] = plan.ranges[v].lo;
        }
        if (i == static_cast<std::size_t>(-1)) {
            return;
        }
    }
}

} // namespace detail

/// Whether the equations have a common zero modulo p. Denominators are
/// cleared first, so "no" proves there is no integer solution at all. Returns
/// nullopt when the residue space exceeds `limit` points.
inline std::optional<bool> has_common_zero_mod(const std::vector<Polynomial> &eqs, std::uint32_t p,
                                               std::uint64_t limit = std::uint64_t{1} << 22)
{
    if (!is_small_prime(p)) {
        throw std::invalid_argument("has_common_zero_mod: " + std::to_string(p) + " is not prime");
    }
    std::vector<std::size_t> local;
    for (const auto &e : eqs) {
        for (auto v : e.used_variables()) {
            local.push_back(v);
        }
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    std::vector<detail::IntEquation> ie;
    for (const auto &e : eqs) {
        if (!e.is_zero()) {
            ie.push_back(detail::to_int_equation(e, local));
        }
    }
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < local.size(); ++i) {
        size *= p;
        if (size > limit) {
            return std::nullopt;
        }
    }
    std::vector<std::vector<std::uint64_t>> coeffs;
    for (const auto &eq : ie) {
        std::vector<std::uint64_t> c;
        for (const auto &term : eq.terms) {
            c.push_back(mpz_fdiv_ui(term.coeff.get_mpz_t(), p));
        }
        coeffs.push_back(std::move(c));
    }
    const std::size_t k = local.size();
    std::vector<std::uint64_t> r(k, 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t v = k; v-- > 0;) {
            r[v] = rest % p;
            rest /= p;
        }
        bool all_zero = true;
        for (std::size_t e = 0; e < ie.size() && all_zero; ++e) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < ie[e].terms.size(); ++j) {
                std::uint64_t m = coeffs[e][j];
                for (std::size_t v = 0; v < k && m != 0; ++v) {
                    for (std::uint32_t x = 0; x < ie[e].terms[j].exps[v]; ++x) {
                        m = m * r[v] % p;
                    }
                }
                acc = (acc + m) % p;
            }
            all_zero = acc == 0;
        }
        if (all_zero) {
            return true;
        }
    }
    return false;
}

/// Every integer point of the box satisfying all equations. Each equation may
/// only use box variables. One variable of minimal degree is solved for at
/// every outer point rather than scanned; the outer points are pre-filtered by
/// the modular images of the system.
inline EnumerationResult bounded_enumerate(const std::vector<Polynomial> &eqs, const BoxBounds &bounds,
                                           const EnumerationOptions &options = {})
{
    EnumerationResult out;
    detail::EnumerationPlan plan;
    for (const auto &[v, r] : bounds) {
        if (r.size() == 0) {
            throw std::invalid_argument("bounded_enumerate: empty bounds for variable " + std::to_string(v));
        }
        plan.local.push_back(v);
        plan.ranges.push_back(r);
    }
    if (plan.local.empty()) {
        throw std::invalid_argument("bounded_enumerate: empty bounds");
    }
    out.variables = plan.local;
    for (auto p : options.moduli) {
        if (!is_small_prime(p)) {
            throw std::invalid_argument("bounded_enumerate: modulus " + std::to_string(p) + " is not prime");
        }
    }
    for (const auto &e : eqs) {
        for (auto v : e.used_variables()) {
            if (!bounds.contains(v)) {
                throw std::invalid_argument("bounded_enumerate: no bounds for variable "
                                            + (e.variables() ? (*e.variables())[v] : std::to_string(v)));
            }
        }
        if (e.is_zero()) {
            continue;
        }
        if (e.is_constant()) {
            return out; // a nonzero constant equation has no solutions anywhere
        }
        plan.eqs.push_back(detail::to_int_equation(e, plan.local));
    }
    const std::size_t k = plan.local.size();

    // Solve for the variable of least positive degree; ties go to the widest range.
    unsigned best_deg = std::numeric_limits<unsigned>::max();
    for (std::size_t v = 0; v < k; ++v) {
        unsigned dmin = std::numeric_limits<unsigned>::max();
        for (const auto &eq : plan.eqs) {
            const unsigned d = eq.degree_in(v);
            if (d > 0) {
                dmin = std::min(dmin, d);
            }
        }
        if (dmin == std::numeric_limits<unsigned>::max()) {
            continue;
        }
        if (dmin < best_deg || (dmin == best_deg && plan.ranges[v].size() > plan.ranges[*plan.solved].size())) {
            best_deg = dmin;
            plan.solved = v;
        }
    }
    if (plan.solved) {
        out.solved_variable = plan.local[*plan.solved];
        for (std::size_t e = 0; e < plan.eqs.size(); ++e) {
            if (plan.eqs[e].degree_in(*plan.solved) == best_deg) {
                plan.pivots.push_back(e);
            }
        }
    }
    for (std::size_t v = 0; v < k; ++v) {
        if (!plan.solved || v != *plan.solved) {
            plan.outer.push_back(v);
        }
    }
    std::uint64_t outer_points = 1;
    for (auto v : plan.outer) {
        const auto s = plan.ranges[v].size();
        if (outer_points > options.budget / s) {
            out.budget_exhausted = true;
            return out;
        }
        outer_points *= s;
    }
    if (outer_points > options.budget) {
        out.budget_exhausted = true;
        return out;
    }
    for (auto p : options.moduli) {
        if (auto t = detail::build_table(plan.eqs, k, plan.solved, p)) {
            plan.tables.push_back(std::move(*t));
        }
    }

    // Partition the slowest outer variable into contiguous slices, one per worker.
    std::vector<std::pair<std::int64_t, std::int64_t>> slices;
    if (plan.outer.empty()) {
        slices.emplace_back(0, 0);
    } else {
        const auto &r = plan.ranges[plan.outer[0]];
        const std::uint64_t total = r.size();
        const std::uint64_t w = std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, total));
        std::int64_t lo = r.lo;
        for (std::uint64_t i = 0; i < w; ++i) {
            const auto len = static_cast<std::int64_t>(total / w + (i < total % w ? 1 : 0));
            slices.emplace_back(lo, lo + len - 1);
            lo += len;
        }
    }
    std::vector<EnumerationResult> parts(slices.size());
    if (slices.size() == 1) {
        detail::scan_partition(plan, slices[0].first, slices[0].second, parts[0]);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < slices.size(); ++i) {
            threads.emplace_back([&, i] { detail::scan_partition(plan, slices[i].first, slices[i].second, parts[i]); });
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    for (auto &part : parts) {
        out.visited += part.visited;
        out.sieved += part.sieved;
        for (auto &s : part.solutions) {
            out.solutions.push_back(std::move(s));
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

/// Name-keyed convenience form over an equation system.
inline EnumerationResult bounded_enumerate(const EquationSystem &sys,
                                           const std::map<std::string, IntegerInterval> &bounds,
                                           const EnumerationOptions &options = {})
{
    BoxBounds b;
    for (const auto &[name, r] : bounds) {
        b[sys.variable_index(name)] = r;
    }
    std::vector<Polynomial> eqs;
    for (const auto &e : sys.equations) {
        eqs.push_back(e.poly);
    }
    return bounded_enumerate(eqs, b, options);
}

} // namespace chiy

#endif
