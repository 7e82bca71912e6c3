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

#ifndef CHIY_CLASSIFY_HPP
#define CHIY_CLASSIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <chiy/enumerate.hpp>
#include <chiy/fujita.hpp>
#include <chiy/linear.hpp>
#include <chiy/polynomial.hpp>
#include <chiy/roots.hpp>

namespace chiy
{

enum class Verdict { no_integer_solution, solutions, inconclusive };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::no_integer_solution:
        return "NoIntegerSolution";
    case Verdict::solutions:
        return "Solutions";
    case Verdict::inconclusive:
        break;
    }
    return "Inconclusive";
}

inline Verdict parse_verdict(const std::string &s)
{
    for (auto v : {Verdict::no_integer_solution, Verdict::solutions, Verdict::inconclusive}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw std::invalid_argument("unknown verdict '" + s + "' (expected NoIntegerSolution, Solutions or Inconclusive)");
}

enum class NodeKind {
    linear_inconsistency, // a combination of the equations is a nonzero constant
    non_integral,         // elimination forces a variable to a non-integer constant
    no_integer_roots,     // an implied univariate equation has no integer root
    modular_obstruction,  // the remaining equations have no common zero modulo a prime
    branch,               // one child per integer root of an implied univariate equation
    solution,             // every variable determined; values satisfy the system
    enumeration,          // bounded search over the remaining free variables
};

inline std::string to_string(NodeKind k)
{
    switch (k) {
    case NodeKind::linear_inconsistency:
        return "linear_inconsistency";
    case NodeKind::non_integral:
        return "non_integral";
    case NodeKind::no_integer_roots:
        return "no_integer_roots";
    case NodeKind::modular_obstruction:
        return "modular_obstruction";
    case NodeKind::branch:
        return "branch";
    case NodeKind::solution:
        return "solution";
    case NodeKind::enumeration:
        break;
    }
    return "enumeration";
}

inline NodeKind parse_node_kind(const std::string &s)
{
    for (auto k : {NodeKind::linear_inconsistency, NodeKind::non_integral, NodeKind::no_integer_roots,
                   NodeKind::modular_obstruction, NodeKind::branch, NodeKind::solution, NodeKind::enumeration}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown certificate node kind '" + s + "'");
}

using Assignment = std::vector<std::pair<std::size_t, Integer>>; // sorted by variable

/// One node of the search tree. Every node starts from the original system
/// with `assignment` plugged in and replays `substitutions` (each justified
/// by its witness) before the kind-specific evidence applies.
struct CertificateNode {
    NodeKind kind = NodeKind::enumeration;
    Assignment assignment;
    std::vector<Substitution> substitutions;
    std::optional<LinearInconsistency> inconsistency;
    std::optional<std::size_t> forced_variable;
    std::optional<std::size_t> equation;
    std::optional<UnivariateRoots> roots;
    std::optional<std::uint32_t> prime;
    std::vector<CertificateNode> children;
    BoxBounds bounds;
    std::uint64_t visited = 0;
    std::uint64_t sieved = 0;
    bool budget_exhausted = false;
    std::vector<std::vector<Integer>> solutions; // full assignments over all variables

    /// True when this subtree proves that no integer solution exists.
    bool refutes() const
    {
        switch (kind) {
        case NodeKind::linear_inconsistency:
        case NodeKind::non_integral:
        case NodeKind::no_integer_roots:
        case NodeKind::modular_obstruction:
            return true;
        case NodeKind::branch:
            return std::all_of(children.begin(), children.end(), [](const auto &c) { return c.refutes(); });
        case NodeKind::solution:
        case NodeKind::enumeration:
            break;
        }
        return false;
    }
};

struct ClassifyOptions {
    std::int64_t bound_scale = 16;
    std::map<std::string, IntegerInterval> bounds; // overrides the scaled defaults
    EnumerationOptions enumeration;
    /// Before enumerating, look for a prime modulo which the remaining
    /// equations have no common zero; such a prime refutes the whole system,
    /// not just the box.
    bool modular_certificates = true;
    std::vector<std::uint32_t> obstruction_primes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    std::uint64_t obstruction_limit = std::uint64_t{1} << 22; // residue points per prime
    bool record_timing = true;
};

struct SearchReport {
    std::size_t n = 0;
    std::optional<Branch> branch;
    SystemMode mode = SystemMode::ak;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> variables;
    CertificateNode certificate;
    std::vector<std::vector<Integer>> solutions; // full assignments, lexicographic
    bool complete = false; // solutions (possibly none) are all the integer solutions
    std::map<std::string, IntegerInterval> bounds; // boxes actually searched
    std::vector<std::uint32_t> moduli;
    std::uint64_t visited = 0;
    std::uint64_t sieved = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<std::string> reduction_trace;
};

/// |c_i| <= binom(n+1, i) * scale for a generated system; hand-built systems
/// need explicit bounds.
inline std::map<std::string, IntegerInterval> default_bounds(const EquationSystem &sys, std::int64_t scale)
{
    if (scale <= 0) {
        throw std::invalid_argument("bound scale must be positive");
    }
    std::map<std::string, IntegerInterval> out;
    if (sys.n == 0) {
        return out;
    }
    for (std::size_t v = 0; v < sys.variable_count(); ++v) {
        const auto &name = (*sys.variables)[v];
        if (name.size() < 2 || name[0] != 'c') {
            continue;
        }
        const auto i = std::stoul(name.substr(1));
        const Integer b = binomial(sys.n + 1, i) * scale;
        if (!b.fits_slong_p()) {
            throw std::invalid_argument("default bound for " + name + " overflows");
        }
        out[name] = {-b.get_si(), b.get_si()};
    }
    return out;
}

namespace detail
{

inline std::vector<Polynomial> plug_in(const EquationSystem &sys, const Assignment &a)
{
    std::map<std::size_t, Rational> values;
    for (const auto &[v, x] : a) {
        values[v] = Rational(x);
    }
    std::vector<Polynomial> eqs;
    for (const auto &e : sys.equations) {
        eqs.push_back(e.poly.rebind(sys.variables).substitute_values(values).rebind(sys.variables));
    }
    return eqs;
}

inline bool satisfies(const EquationSystem &sys, const std::vector<Integer> &values)
{
    std::vector<Rational> q;
    for (const auto &v : values) {
        q.emplace_back(v);
    }
    return q.size() == sys.variable_count() && sys.satisfied_by(q);
}

class Classifier
{
public:
    Classifier(const EquationSystem &sys, const ClassifyOptions &opt, SearchReport &report)
        : m_sys(sys), m_opt(opt), m_report(report)
    {
        m_bounds = default_bounds(sys, opt.bound_scale);
        for (const auto &[name, r] : opt.bounds) {
            sys.variable_index(name); // validates the name
            if (r.size() == 0) {
                throw std::invalid_argument("empty bounds for " + name);
            }
            m_bounds[name] = r;
        }
    }

    CertificateNode solve(const Assignment &path)
    {
        CertificateNode node;
        node.assignment = path;
        const std::string prefix = path_prefix(path);
        auto lr = linear_reduce(plug_in(m_sys, path), m_sys.variables);
        node.substitutions = lr.substitutions;
        for (const auto &s : lr.substitutions) {
            m_report.reduction_trace.push_back(prefix + name(s.variable) + " = " + s.value.to_string());
        }
        if (lr.inconsistency) {
            node.kind = NodeKind::linear_inconsistency;
            node.inconsistency = lr.inconsistency;
            m_report.reduction_trace.push_back(prefix + "linear inconsistency: 0 = "
                                               + lr.inconsistency->constant.to_string());
            return node;
        }
        const auto resolved = resolve_substitutions(lr.substitutions);
        for (const auto &[v, val] : resolved) {
            if (val.is_constant() && !val.constant_term().is_integer()) {
                node.kind = NodeKind::non_integral;
                node.forced_variable = v;
                m_report.reduction_trace.push_back(prefix + name(v) + " forced to non-integer "
                                                   + val.constant_term().to_string());
                return node;
            }
        }

        std::vector<std::size_t> free;
        for (std::size_t v = 0; v < m_sys.variable_count(); ++v) {
            const bool assigned = std::any_of(path.begin(), path.end(), [&](const auto &p) { return p.first == v; });
            if (!assigned && !resolved.contains(v)) {
                free.push_back(v);
            }
        }
        std::vector<std::size_t> remaining;
        for (std::size_t i = 0; i < lr.equations.size(); ++i) {
            if (!lr.equations[i].is_zero()) {
                remaining.push_back(i);
            }
        }

        if (remaining.empty() && free.empty()) {
            node.kind = NodeKind::solution;
            node.solutions.push_back(complete_assignment(path, resolved, {}, {}));
            return node;
        }

        // Pick the univariate equation of least degree.
        std::optional<std::size_t> uni;
        for (auto i : remaining) {
            if (lr.equations[i].used_variables().size() == 1
                && (!uni || lr.equations[i].total_degree() < lr.equations[*uni].total_degree())) {
                uni = i;
            }
        }
        if (uni) {
            node.equation = *uni;
            node.roots = univariate_integer_roots(lr.equations[*uni]);
            const std::size_t var = *node.roots->variable;
            if (node.roots->roots.empty()) {
                node.kind = NodeKind::no_integer_roots;
                m_report.reduction_trace.push_back(prefix + m_sys.equations[*uni].provenance + " has no integer root in "
                                                   + name(var) + ": " + lr.equations[*uni].to_string() + " = 0");
                return node;
            }
            node.kind = NodeKind::branch;
            for (const auto &r : node.roots->roots) {
                m_report.reduction_trace.push_back(prefix + "branch " + name(var) + " = " + r.get_str() + " (from "
                                                   + m_sys.equations[*uni].provenance + ")");
                Assignment child = path;
                child.emplace_back(var, r);
                std::sort(child.begin(), child.end());
                node.children.push_back(solve(child));
            }
            return node;
        }

        std::vector<Polynomial> eqs;
        for (auto i : remaining) {
            eqs.push_back(lr.equations[i]);
        }
        if (m_opt.modular_certificates) {
            for (auto p : m_opt.obstruction_primes) {
                if (has_common_zero_mod(eqs, p, m_opt.obstruction_limit) == false) {
                    node.kind = NodeKind::modular_obstruction;
                    node.prime = p;
                    m_report.reduction_trace.push_back(prefix + "no common zero modulo " + std::to_string(p));
                    return node;
                }
            }
        }
        node.kind = NodeKind::enumeration;
        for (auto v : free) {
            const auto it = m_bounds.find(name(v));
            if (it == m_bounds.end()) {
                throw std::invalid_argument("no enumeration bounds for variable " + name(v));
            }
            node.bounds[v] = it->second;
            m_report.bounds[name(v)] = it->second;
        }
        const auto res = bounded_enumerate(eqs, node.bounds, m_opt.enumeration);
        node.visited = res.visited;
        node.sieved = res.sieved;
        node.budget_exhausted = res.budget_exhausted;
        m_report.visited += res.visited;
        m_report.sieved += res.sieved;
        std::string box;
        for (const auto &[v, r] : node.bounds) {
            box += (box.empty() ? "" : ", ") + name(v) + " in [" + std::to_string(r.lo) + ", " + std::to_string(r.hi)
                   + "]";
        }
        m_report.reduction_trace.push_back(prefix + "enumerate " + box + (res.budget_exhausted ? ": budget exhausted" : ": "
                                           + std::to_string(res.solutions.size()) + " solution(s)"));
        for (const auto &pt : res.solutions) {
            auto full = complete_assignment(path, resolved, res.variables, pt);
            if (!full.empty()) {
                node.solutions.push_back(std::move(full));
            }
        }
        return node;
    }

private:
    const std::string &name(std::size_t v) const { return (*m_sys.variables)[v]; }

    std::string path_prefix(const Assignment &path) const
    {
        if (path.empty()) {
            return "";
        }
        std::string s = "[";
        for (const auto &[v, x] : path) {
            s += (s.size() > 1 ? ", " : "") + name(v) + "=" + x.get_str();
        }
        return s + "] ";
    }

    // Full integer assignment, or empty when a forced value is not integral.
    std::vector<Integer> complete_assignment(const Assignment &path, const std::map<std::size_t, Polynomial> &resolved,
                                             const std::vector<std::size_t> &box_vars,
                                             const std::vector<Integer> &box_values) const
    {
        std::map<std::size_t, Rational> known;
        for (const auto &[v, x] : path) {
            known[v] = Rational(x);
        }
        for (std::size_t i = 0; i < box_vars.size(); ++i) {
            known[box_vars[i]] = Rational(box_values[i]);
        }
        for (const auto &[v, val] : resolved) {
            const Polynomial c = val.substitute_values(known);
            if (!c.is_constant()) {
                throw std::logic_error("classify: undetermined variable " + name(v));
            }
            known[v] = c.constant_term();
        }
        std::vector<Integer> out;
        for (std::size_t v = 0; v < m_sys.variable_count(); ++v) {
            const auto &q = known.at(v);
            if (!q.is_integer()) {
                return {};
            }
            out.push_back(q.numerator());
        }
        if (!satisfies(m_sys, out)) {
            throw std::logic_error("classify: candidate solution fails the original system");
        }
        return out;
    }

    const EquationSystem &m_sys;
    const ClassifyOptions &m_opt;
    SearchReport &m_report;
    std::map<std::string, IntegerInterval> m_bounds;
};

inline void collect(const CertificateNode &node, std::vector<std::vector<Integer>> &sols, bool &exhausted,
                    bool &bounded)
{
    for (const auto &s : node.solutions) {
        sols.push_back(s);
    }
    if (node.kind == NodeKind::enumeration) {
        bounded = true;
        exhausted = exhausted || node.budget_exhausted;
    }
    for (const auto &c : node.children) {
        collect(c, sols, exhausted, bounded);
    }
}

} // namespace detail

/// Decide the integer solvability of an arbitrary system. Verdicts:
/// NoIntegerSolution only with a refuting certificate tree, Solutions only
/// with exactly verified assignments, Inconclusive otherwise.
inline SearchReport classify_system(const EquationSystem &sys, const ClassifyOptions &options = {})
{
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.n = sys.n;
    report.branch = sys.branch;
    report.mode = sys.mode;
    if (sys.variables) {
        report.variables = *sys.variables;
    }
    report.moduli = options.enumeration.moduli;
    if (sys.variable_count() == 0) {
        throw std::invalid_argument("classify: system has no variables");
    }
    detail::Classifier c(sys, options, report);
    report.certificate = c.solve({});
    bool exhausted = false;
    bool bounded = false;
    detail::collect(report.certificate, report.solutions, exhausted, bounded);
    std::sort(report.solutions.begin(), report.solutions.end());
    report.solutions.erase(std::unique(report.solutions.begin(), report.solutions.end()), report.solutions.end());
    for (const auto &s : report.solutions) {
        if (!detail::satisfies(sys, s)) {
            throw std::logic_error("classify: reported solution fails the original system");
        }
    }
    if (report.certificate.refutes()) {
        report.verdict = Verdict::no_integer_solution;
        report.complete = true;
    } else if (exhausted || report.solutions.empty()) {
        report.verdict = Verdict::inconclusive;
    } else {
        report.verdict = Verdict::solutions;
        report.complete = !bounded;
    }
    if (options.record_timing) {
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                                .count();
    }
    return report;
}

inline SearchReport classify(std::size_t n, Branch branch, SystemMode mode = SystemMode::ak,
                             const ClassifyOptions &options = {})
{
    if (n < 3) {
        throw std::invalid_argument("classify: requires n >= 3");
    }
    return classify_system(generate_system(n, branch, mode), options);
}

struct ReplayResult {
    bool ok = true;
    bool refutes = false;
    std::string failure;
};

namespace detail
{

inline bool replay_node(const EquationSystem &sys, const CertificateNode &node, const Assignment &expected,
                        std::string &why)
{
    auto fail = [&](const std::string &msg) {
        why = msg;
        return false;
    };
    if (node.assignment != expected) {
        return fail("assignment does not match the branch path");
    }
    auto eqs = plug_in(sys, node.assignment);
    for (const auto &s : node.substitutions) {
        for (const auto &[i, m] : s.witness) {
            if (i >= eqs.size()) {
                return fail("witness references equation " + std::to_string(i));
            }
        }
        if (s.variable >= sys.variable_count() || s.value.depends_on(s.variable)) {
            return fail("malformed substitution");
        }
        const Polynomial target = Polynomial::variable(sys.variables, s.variable) - s.value;
        if (combine(eqs, s.witness).rebind(sys.variables) != target.rebind(sys.variables)) {
            return fail("substitution witness for " + (*sys.variables)[s.variable] + " does not check");
        }
        for (auto &e : eqs) {
            e = e.substitute(s.variable, s.value);
        }
    }
    switch (node.kind) {
    case NodeKind::linear_inconsistency: {
        if (!node.inconsistency) {
            return fail("missing inconsistency witness");
        }
        for (const auto &[i, m] : node.inconsistency->witness) {
            if (i >= eqs.size()) {
                return fail("witness references equation " + std::to_string(i));
            }
        }
        const Polynomial r = combine(eqs, node.inconsistency->witness);
        if (!r.is_constant() || r.is_zero() || r.constant_term() != node.inconsistency->constant) {
            return fail("inconsistency witness does not reduce to the claimed nonzero constant");
        }
        return true;
    }
    case NodeKind::non_integral: {
        const auto resolved = resolve_substitutions(node.substitutions);
        if (!node.forced_variable || !resolved.contains(*node.forced_variable)) {
            return fail("non-integral node names no substituted variable");
        }
        const auto &v = resolved.at(*node.forced_variable);
        if (!v.is_constant() || v.constant_term().is_integer()) {
            return fail("forced value is not a non-integer constant");
        }
        return true;
    }
    case NodeKind::no_integer_roots:
    case NodeKind::branch: {
        if (!node.equation || *node.equation >= eqs.size() || !node.roots) {
            return fail("missing univariate evidence");
        }
        const auto &e = eqs[*node.equation];
        if (e.is_zero() || e.used_variables().size() != 1) {
            return fail("equation " + std::to_string(*node.equation) + " is not univariate after reduction");
        }
        const auto fresh = univariate_integer_roots(e);
        if (!(fresh == *node.roots)) {
            return fail("recorded root evidence differs from recomputation");
        }
        if (node.kind == NodeKind::no_integer_roots) {
            return fresh.roots.empty() ? true : fail("equation has integer roots");
        }
        if (node.children.size() != fresh.roots.size()) {
            return fail("branch does not cover every integer root");
        }
        for (std::size_t i = 0; i < fresh.roots.size(); ++i) {
            Assignment child = node.assignment;
            child.emplace_back(*fresh.variable, fresh.roots[i]);
            std::sort(child.begin(), child.end());
            if (!replay_node(sys, node.children[i], child, why)) {
                return false;
            }
        }
        return true;
    }
    case NodeKind::modular_obstruction: {
        if (!node.prime) {
            return fail("modular obstruction without a prime");
        }
        std::vector<Polynomial> rest;
        for (const auto &e : eqs) {
            if (!e.is_zero()) {
                rest.push_back(e);
            }
        }
        const auto z = has_common_zero_mod(rest, *node.prime, std::numeric_limits<std::uint64_t>::max());
        if (z != false) {
            return fail("equations have a common zero modulo " + std::to_string(*node.prime));
        }
        return true;
    }
    case NodeKind::solution:
    case NodeKind::enumeration:
        for (const auto &s : node.solutions) {
            if (!satisfies(sys, s)) {
                return fail("listed solution fails the original system");
            }
        }
        return true;
    }
    return fail("unknown node kind");
}

} // namespace detail

/// Re-derive every step of a certificate tree against the original system.
inline ReplayResult replay_certificate(const EquationSystem &sys, const CertificateNode &root)
{
    ReplayResult r;
    r.ok = detail::replay_node(sys, root, {}, r.failure);
    r.refutes = r.ok && root.refutes();
    return r;
}

/// A report is internally certified when its verdict is backed by its own
/// evidence: a replayable refutation, or solutions that satisfy the system.
inline ReplayResult certify_report(const EquationSystem &sys, const SearchReport &report)
{
    ReplayResult r = replay_certificate(sys, report.certificate);
    if (!r.ok) {
        return r;
    }
    for (const auto &s : report.solutions) {
        if (!detail::satisfies(sys, s)) {
            return {false, false, "reported solution fails the original system"};
        }
    }
    if (report.verdict == Verdict::no_integer_solution && !r.refutes) {
        return {false, false, "NoIntegerSolution verdict without a refuting certificate"};
    }
    if (report.verdict == Verdict::solutions && report.solutions.empty()) {
        return {false, false, "Solutions verdict with no solutions"};
    }
    return r;
}

} // namespace chiy

#endif
