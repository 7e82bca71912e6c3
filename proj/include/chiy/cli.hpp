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

// Command implementations behind the chiy executable. Each command takes a
// validated RunConfig, writes to a stream, and returns an exit status, so the
// commands can be driven directly from tests.

#ifndef CHIY_CLI_HPP
#define CHIY_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <chiy/chern.hpp>
#include <chiy/classify.hpp>
#include <chiy/fujita.hpp>
#include <chiy/genus.hpp>
#include <chiy/json.hpp>
#include <chiy/linear.hpp>

namespace chiy::cli
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
} // namespace exit_code

/// Invalid configuration or input; maps to the usage exit status.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

inline Format parse_format(const std::string &s)
{
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "text") {
        return Format::text;
    }
    throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

struct RunConfig {
    std::string command;
    std::optional<std::size_t> n;
    std::optional<std::size_t> max_n;
    std::optional<Branch> branch;
    SystemMode mode = SystemMode::ak;
    std::optional<std::string> chern;
    std::optional<std::string> hodge_path;
    bool reduced = false;
    std::int64_t bound_scale = 16;
    std::map<std::string, IntegerInterval> bounds;
    std::vector<std::uint32_t> moduli{2, 3, 5, 7, 11};
    unsigned workers = 1;
    std::optional<Format> format; // command-specific default
    std::optional<std::string> output;
    std::uint64_t seed = 0;
    std::optional<Verdict> expect;
    bool modular_certificates = true;
    std::optional<std::size_t> corrupt_binomial; // test hook: perturb c_1 of P^n in pn-verify
    std::size_t random_samples = 25;             // per dimension in pn-verify
};

/// "c2=-10:10,c3=0:5"
inline std::map<std::string, IntegerInterval> parse_bounds(const std::string &s)
{
    std::map<std::string, IntegerInterval> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        const auto colon = item.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || colon == std::string::npos || eq == 0) {
            throw UsageError("malformed bound '" + item + "' (expected var=lo:hi)");
        }
        IntegerInterval r;
        try {
            std::size_t pos = 0;
            const std::string lo = item.substr(eq + 1, colon - eq - 1);
            const std::string hi = item.substr(colon + 1);
            r.lo = std::stoll(lo, &pos);
            if (pos != lo.size()) {
                throw std::invalid_argument(lo);
            }
            r.hi = std::stoll(hi, &pos);
            if (pos != hi.size()) {
                throw std::invalid_argument(hi);
            }
        } catch (const std::logic_error &) {
            throw UsageError("malformed bound '" + item + "' (expected var=lo:hi)");
        }
        if (r.hi < r.lo) {
            throw UsageError("empty bound '" + item + "'");
        }
        out[item.substr(0, eq)] = r;
    }
    return out;
}

inline std::vector<std::uint32_t> parse_moduli(const std::string &s)
{
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::logic_error &) {
            pos = 0;
        }
        if (pos != item.size() || v > 0xffffffffUL || !is_small_prime(static_cast<std::uint32_t>(v))) {
            throw UsageError("modulus '" + item + "' is not a prime");
        }
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

inline std::vector<Rational> parse_chern_list(const std::string &s)
{
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception &) {
            throw UsageError("malformed Chern entry '" + item + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("empty Chern list");
    }
    return out;
}

namespace detail
{

inline std::size_t require_n(const RunConfig &cfg, std::size_t min)
{
    if (!cfg.n) {
        throw UsageError(cfg.command + ": --n is required");
    }
    if (*cfg.n < min) {
        throw UsageError(cfg.command + ": requires n >= " + std::to_string(min));
    }
    return *cfg.n;
}

inline Branch require_branch(const RunConfig &cfg, std::size_t n)
{
    if (!cfg.branch) {
        throw UsageError(cfg.command + ": --branch is required (standard or half)");
    }
    try {
        branch_c1(n, *cfg.branch);
    } catch (const std::invalid_argument &e) {
        throw UsageError(cfg.command + ": " + e.what());
    }
    return *cfg.branch;
}

inline std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + '"';
}

// Rows of string cells rendered as CSV, aligned text, or a JSON array of objects.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream &os, Format f) const
    {
        if (f == Format::json) {
            Json arr = Json::array();
            for (const auto &r : rows) {
                Json o = Json::object();
                for (std::size_t i = 0; i < header.size(); ++i) {
                    o[header[i]] = r[i];
                }
                arr.push_back(o);
            }
            os << arr.dump(2) << '\n';
            return;
        }
        if (f == Format::csv) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                os << (i ? "," : "") << csv_escape(header[i]);
            }
            os << '\n';
            for (const auto &r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) {
                    os << (i ? "," : "") << csv_escape(r[i]);
                }
                os << '\n';
            }
            return;
        }
        std::vector<std::size_t> w(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) {
            w[i] = header[i].size();
            for (const auto &r : rows) {
                w[i] = std::max(w[i], r[i].size());
            }
        }
        auto line = [&](const std::vector<std::string> &r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                os << (i ? "  " : "") << r[i] << std::string(w[i] - r[i].size(), ' ');
            }
            os << '\n';
        };
        line(header);
        for (const auto &r : rows) {
            line(r);
        }
    }
};

inline std::string join(const std::vector<std::string> &v, const std::string &sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + v[i];
    }
    return out;
}

template <typename T>
std::vector<std::string> strings(const std::vector<T> &v)
{
    std::vector<std::string> out;
    for (const auto &x : v) {
        std::ostringstream os;
        os << x;
        out.push_back(os.str());
    }
    return out;
}

} // namespace detail

/// P^n regression: Todd normalization, chi_y against the diagonal diamond,
/// A_0 and A_1 against the pinned products, the alternating sum, and the A_1
/// closed form on seeded random Chern vectors.
inline int cmd_pn_verify(const RunConfig &cfg, std::ostream &out)
{
    const std::size_t max_n = cfg.max_n.value_or(cfg.n.value_or(0));
    if (max_n < 1) {
        throw UsageError("pn-verify: requires --max-n >= 1");
    }
    detail::Table t{{"n", "check", "status", "detail"}, {}};
    bool all_ok = true;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> dist(-50, 50);
    auto row = [&](std::size_t n, const std::string &check, bool ok, const std::string &detail) {
        all_ok = all_ok && ok;
        t.rows.push_back({std::to_string(n), check, ok ? "pass" : "FAIL", detail});
    };
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto pn = projective_space_chern(n);
        std::vector<Rational> entries(pn.entries().begin(), pn.entries().end());
        if (cfg.corrupt_binomial == n) {
            entries[0] += Rational(1);
        }
        const ManifoldModel<Rational> m{ChernVector<Rational>(entries)};
        const Rational td = integrate(m, todd_class(m.chern()));
        row(n, "todd", td == Rational(1), "integral of Td = " + td.to_string());

        const auto chi = chi_y_from_chern(m);
        const auto oracle = chi_y_from_hodge(HodgeDiamond::projective_space(n));
        row(n, "chi_y", chi == oracle, chi_y_to_string(chi));

        if (n >= 2) {
            const auto a = expand_at_minus_one(chi);
            const auto pin = pinned_products(n);
            const long nl = static_cast<long>(n);
            row(n, "A_0", a.A(0) == pin.euler_M, "A_0 = " + a.A(0).to_string());
            const Rational a1_pinned =
                Rational(nl * (3 * nl - 5), 24) * pin.euler_M + Rational(1, 12) * pin.c1cnm1_M;
            row(n, "A_1", a.A(1) == a1_pinned && a.A(1) == a1_closed_form(m), "A_1 = " + a.A(1).to_string());
            bool random_ok = true;
            for (std::size_t s = 0; s < cfg.random_samples; ++s) {
                std::vector<Rational> c;
                for (std::size_t i = 0; i < n; ++i) {
                    c.emplace_back(dist(rng));
                }
                const ManifoldModel<Rational> r{ChernVector<Rational>(c)};
                random_ok = random_ok && expand_at_minus_one(chi_y_from_chern(r)).A(1) == a1_closed_form(r);
            }
            row(n, "A_1_random", random_ok, std::to_string(cfg.random_samples) + " seeded samples");
            row(n, "alternating_sum", alternating_sum_check(m.chern()),
                "residual " + alternating_sum_residual(m.chern()).to_string());
        }
    }
    t.write(out, cfg.format.value_or(Format::text));
    return all_ok ? exit_code::ok : exit_code::check_failed;
}

/// chi_p, chi_y and its (y+1)-expansion from Chern data or a Hodge diamond.
inline int cmd_genus(const RunConfig &cfg, std::ostream &out)
{
    if (cfg.chern.has_value() == cfg.hodge_path.has_value()) {
        throw UsageError("genus: give exactly one of --chern or --hodge");
    }
    ChiYPolynomial<Rational> chi;
    std::optional<Rational> a1_closed;
    std::string source;
    if (cfg.chern) {
        const auto c = parse_chern_list(*cfg.chern);
        const ManifoldModel<Rational> m{ChernVector<Rational>(c)};
        chi = chi_y_from_chern(m);
        if (m.dimension() >= 2) {
            a1_closed = a1_closed_form(m);
        }
        source = "chern";
    } else {
        std::ifstream in(*cfg.hodge_path);
        if (!in) {
            throw UsageError("genus: cannot open Hodge file '" + *cfg.hodge_path + "'");
        }
        try {
            chi = chi_y_from_hodge(HodgeDiamond::parse(in));
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("genus: ") + e.what());
        }
        source = "hodge";
    }
    if (cfg.n && *cfg.n != chi.n) {
        throw UsageError("genus: dimension mismatch: --n " + std::to_string(*cfg.n) + " but input has dimension "
                         + std::to_string(chi.n));
    }
    const auto a = expand_at_minus_one(chi);
    std::vector<std::string> A;
    for (std::size_t k = 0; 2 * k <= chi.n; ++k) {
        A.push_back(a.A(k).to_string());
    }
    const bool cross_ok = !a1_closed || (chi.n >= 2 && a.A(1) == *a1_closed);
    const Format f = cfg.format.value_or(Format::text);
    if (f == Format::json) {
        Json j{{"n", chi.n},
               {"source", source},
               {"chi", detail::strings(chi.chi)},
               {"chi_y", chi_y_to_string(chi)},
               {"expansion", detail::strings(a.coefficients)},
               {"A", A},
               {"integral", chi_y_is_integral(chi)}};
        if (a1_closed) {
            j["a1_closed_form"] = a1_closed->to_string();
            j["a1_check"] = cross_ok;
        }
        out << j.dump(2) << '\n';
    } else if (f == Format::csv) {
        detail::Table t{{"j", "chi_j", "a_j", "A_k"}, {}};
        for (std::size_t j = 0; j <= chi.n; ++j) {
            t.rows.push_back({std::to_string(j), chi.chi[j].to_string(), a.coefficients[j].to_string(),
                              j % 2 == 0 ? "A_" + std::to_string(j / 2) : ""});
        }
        t.write(out, f);
    } else {
        out << "n = " << chi.n << " (" << source << " input)\n";
        out << "chi_p: " << detail::join(detail::strings(chi.chi), ", ") << '\n';
        out << "chi_y = " << chi_y_to_string(chi) << '\n';
        out << "chi_y = ";
        for (std::size_t j = 0; j <= chi.n; ++j) {
            out << (j ? " + " : "") << (j % 2 == 0 ? "[" : "(") << a.coefficients[j] << (j % 2 == 0 ? "]" : ")")
                << "*(y+1)^" << j;
        }
        out << "\nA_k (bracketed above): " << detail::join(A, ", ") << '\n';
        if (a1_closed) {
            out << "A_1 closed form: " << *a1_closed << (cross_ok ? " (agrees)" : " (MISMATCH)") << '\n';
        }
        if (!chi_y_is_integral(chi)) {
            out << "note: chi_y has non-integer coefficients; the input is not the Chern data of a manifold\n";
        }
    }
    return cross_ok ? exit_code::ok : exit_code::check_failed;
}

inline Json substitutions_to_json(const std::vector<Substitution> &subs, const VariableNames &vars)
{
    Json arr = Json::array();
    for (const auto &s : subs) {
        arr.push_back({{"variable", (*vars)[s.variable]},
                       {"value", s.value.to_string()},
                       {"monomials", polynomial_to_json(s.value.rebind(vars), vars->size())}});
    }
    return arr;
}

/// The generated equation system, optionally with its linear reduction.
inline int cmd_system(const RunConfig &cfg, std::ostream &out)
{
    const std::size_t n = detail::require_n(cfg, 3);
    const Branch b = detail::require_branch(cfg, n);
    const auto sys = generate_system(n, b, cfg.mode);
    std::optional<std::string> failure;
    if (b == Branch::standard) {
        std::vector<Rational> binom;
        for (std::size_t i = 2; i < n; ++i) {
            binom.emplace_back(binomial(n + 1, i));
        }
        if (!sys.satisfied_by(binom)) {
            failure = "binomial Chern vector does not satisfy the generated system";
        }
    }
    std::optional<LinearReduction> lr;
    if (cfg.reduced) {
        lr = linear_reduce(sys);
    }
    const Format f = cfg.format.value_or(Format::json);
    if (f == Format::json) {
        Json j = to_json(sys);
        if (lr) {
            Json r{{"substitutions", substitutions_to_json(lr->substitutions, sys.variables)}};
            if (lr->inconsistency) {
                r["inconsistent"] = true;
                r["inconsistency_constant"] = lr->inconsistency->constant.to_string();
            } else {
                r["inconsistent"] = false;
                r["equations"] = to_json(reduced_system(sys, *lr))["equations"];
            }
            j["reduction"] = r;
        }
        out << j.dump(2) << '\n';
    } else if (f == Format::csv) {
        detail::Table t{{"provenance", "equation"}, {}};
        for (const auto &e : sys.equations) {
            t.rows.push_back({e.provenance, e.poly.to_string()});
        }
        if (lr) {
            for (const auto &s : lr->substitutions) {
                t.rows.push_back({"substitution", (*sys.variables)[s.variable] + " = " + s.value.to_string()});
            }
            if (!lr->inconsistency) {
                for (const auto &e : reduced_system(sys, *lr).equations) {
                    t.rows.push_back({"reduced " + e.provenance, e.poly.to_string()});
                }
            }
        }
        t.write(out, f);
    } else {
        out << "n = " << n << ", branch " << to_string(b) << ", mode " << to_string(cfg.mode) << ", c_1 = "
            << branch_c1(n, b) << ", c_" << n << " = " << n + 1 << '\n';
        for (const auto &e : sys.equations) {
            out << "  " << e.provenance << ": " << e.poly << " = 0\n";
        }
        for (const auto &note : sys.notes) {
            out << "  note: " << note << '\n';
        }
        if (lr) {
            out << "linear reduction:\n";
            for (const auto &s : lr->substitutions) {
                out << "  " << (*sys.variables)[s.variable] << " = " << s.value << '\n';
            }
            if (lr->inconsistency) {
                out << "  inconsistent: a combination of the equations gives 0 = " << lr->inconsistency->constant
                    << '\n';
            } else {
                for (const auto &e : reduced_system(sys, *lr).equations) {
                    out << "  " << e.provenance << ": " << e.poly << " = 0\n";
                }
            }
        }
    }
    if (failure) {
        out.flush();
        throw std::runtime_error(*failure);
    }
    return exit_code::ok;
}

inline ClassifyOptions classify_options(const RunConfig &cfg)
{
    ClassifyOptions o;
    o.bound_scale = cfg.bound_scale;
    if (o.bound_scale <= 0) {
        throw UsageError("classify: --bound-scale must be positive");
    }
    o.bounds = cfg.bounds;
    o.enumeration.moduli = cfg.moduli;
    o.enumeration.workers = cfg.workers == 0 ? 1 : cfg.workers;
    o.modular_certificates = cfg.modular_certificates;
    return o;
}

/// Runs the classifier and writes the certified report. Exit status follows
/// the verdict: 2 for Inconclusive, 1 if --expect disagrees or the report
/// fails its own certification.
inline int cmd_classify(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const std::size_t n = detail::require_n(cfg, 3);
    const Branch b = detail::require_branch(cfg, n);
    const auto sys = generate_system(n, b, cfg.mode);
    for (const auto &[name, r] : cfg.bounds) {
        try {
            sys.variable_index(name);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("classify: ") + e.what());
        }
    }
    const auto report = classify_system(sys, classify_options(cfg));
    const auto cert = certify_report(sys, report);
    const Format f = cfg.format.value_or(Format::json);
    if (f == Format::json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        detail::Table t{{"field", "value"}, {}};
        t.rows.push_back({"n", std::to_string(report.n)});
        t.rows.push_back({"branch", to_string(b)});
        t.rows.push_back({"mode", to_string(report.mode)});
        t.rows.push_back({"verdict", to_string(report.verdict)});
        t.rows.push_back({"certified", cert.ok ? "yes" : "no: " + cert.failure});
        for (const auto &s : report.solutions) {
            t.rows.push_back({"solution", detail::join(detail::strings(s), ",")});
        }
        for (const auto &line : report.reduction_trace) {
            t.rows.push_back({"trace", line});
        }
        t.rows.push_back({"visited", std::to_string(report.visited)});
        t.rows.push_back({"sieved", std::to_string(report.sieved)});
        t.rows.push_back({"elapsed_ms", std::to_string(report.elapsed_ms)});
        t.write(out, f);
    }
    if (!cert.ok) {
        err << "classify: report failed certification: " << cert.failure << '\n';
        return exit_code::check_failed;
    }
    if (cfg.expect) {
        if (*cfg.expect == report.verdict) {
            return exit_code::ok;
        }
        err << "classify: expected " << to_string(*cfg.expect) << ", got " << to_string(report.verdict) << '\n';
        return exit_code::check_failed;
    }
    return report.verdict == Verdict::inconclusive ? exit_code::inconclusive : exit_code::ok;
}

/// Per-dimension summary of the c_1 dichotomy and the half-branch filters.
inline int cmd_table(const RunConfig &cfg, std::ostream &out)
{
    const std::size_t max_n = cfg.max_n.value_or(cfg.n.value_or(0));
    if (max_n < 2) {
        throw UsageError("table: requires --max-n >= 2");
    }
    detail::Table t{{"n", "roots", "half_integral", "parity_admissible", "half_admissible", "forced_cM_nm1",
                     "forced_cD_nm2", "note"},
                    {}};
    for (std::size_t n = 2; n <= max_n; ++n) {
        const auto roots = dichotomy_roots(n);
        std::vector<std::string> rs;
        bool half_integral = false;
        for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
            rs.push_back(it->value.to_string());
            if (it->value != Rational(static_cast<long>(n + 1))) {
                half_integral = it->integral;
            }
        }
        const bool parity = parity_admissible(n);
        std::string fM;
        std::string fD;
        std::string note;
        if (parity) {
            const auto fv = forced_values(n);
            if (const auto *v = std::get_if<ForcedValues>(&fv)) {
                fM = v->cM_nm1.to_string();
                fD = v->cD_nm2.to_string();
            } else {
                const auto &inc = std::get<ForcedInconsistency>(fv);
                fM = "inconsistent";
                fD = "inconsistent";
                note = inc.message;
            }
        }
        t.rows.push_back({std::to_string(n), "{" + detail::join(rs, ", ") + "}", half_integral ? "yes" : "no",
                          parity ? "yes" : "no", half_integral && parity ? "yes" : "no", fM, fD, note});
    }
    t.write(out, cfg.format.value_or(Format::csv));
    return exit_code::ok;
}

/// Dispatch with the exit-status contract: usage errors 64, internal check
/// failures 1.
inline int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    try {
        if (cfg.command == "pn-verify") {
            return cmd_pn_verify(cfg, out);
        }
        if (cfg.command == "genus") {
            return cmd_genus(cfg, out);
        }
        if (cfg.command == "system") {
            return cmd_system(cfg, out);
        }
        if (cfg.command == "classify") {
            return cmd_classify(cfg, out, err);
        }
        if (cfg.command == "table") {
            return cmd_table(cfg, out);
        }
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception &e) {
        err << "internal check failed: " << e.what() << '\n';
        return exit_code::check_failed;
    }
}

} // namespace chiy::cli

#endif
