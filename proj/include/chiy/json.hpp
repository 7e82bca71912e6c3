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

// JSON forms of equation systems and search reports. Arbitrary-precision
// integers are written as decimal strings; rationals as "num/den" strings
// except in monomials, which carry coeff_num and coeff_den separately.

#ifndef CHIY_JSON_HPP
#define CHIY_JSON_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <chiy/classify.hpp>
#include <chiy/fujita.hpp>
#include <chiy/polynomial.hpp>

namespace chiy
{

using Json = nlohmann::ordered_json;

inline Json polynomial_to_json(const Polynomial &p, std::size_t nvars)
{
    Json monomials = Json::array();
    for (const auto &[mono, c] : p.terms()) {
        Json exps = Json::array();
        for (std::size_t v = 0; v < nvars; ++v) {
            exps.push_back(mono[v]);
        }
        monomials.push_back({{"coeff_num", c.numerator().get_str()},
                             {"coeff_den", c.denominator().get_str()},
                             {"exponents", exps}});
    }
    return monomials;
}

inline Polynomial polynomial_from_json(const Json &j, const VariableNames &vars)
{
    std::vector<std::pair<Exponents, Rational>> terms;
    for (const auto &m : j) {
        terms.emplace_back(m.at("exponents").get<Exponents>(),
                           Rational(Integer(m.at("coeff_num").get<std::string>()),
                                    Integer(m.at("coeff_den").get<std::string>())));
    }
    return Polynomial::from_terms(vars, terms);
}

inline Json to_json(const EquationSystem &sys)
{
    const std::size_t nv = sys.variable_count();
    Json eqs = Json::array();
    for (const auto &e : sys.equations) {
        eqs.push_back({{"provenance", e.provenance}, {"monomials", polynomial_to_json(e.poly.rebind(sys.variables), nv)}});
    }
    return {{"n", sys.n},
            {"branch", sys.branch ? Json(to_string(*sys.branch)) : Json(nullptr)},
            {"mode", to_string(sys.mode)},
            {"variables", sys.variables ? *sys.variables : std::vector<std::string>{}},
            {"equations", eqs},
            {"notes", sys.notes}};
}

inline EquationSystem equation_system_from_json(const Json &j)
{
    EquationSystem sys;
    sys.n = j.at("n").get<std::size_t>();
    if (!j.at("branch").is_null()) {
        sys.branch = parse_branch(j.at("branch").get<std::string>());
    }
    sys.mode = parse_mode(j.at("mode").get<std::string>());
    sys.variables = make_variables(j.at("variables").get<std::vector<std::string>>());
    for (const auto &e : j.at("equations")) {
        sys.equations.push_back({polynomial_from_json(e.at("monomials"), sys.variables),
                                 e.at("provenance").get<std::string>()});
    }
    if (j.contains("notes")) {
        sys.notes = j.at("notes").get<std::vector<std::string>>();
    }
    return sys;
}

namespace detail
{

inline Json combination_to_json(const Combination &c)
{
    Json out = Json::array();
    for (const auto &[i, m] : c) {
        out.push_back({{"equation", i}, {"multiplier", m.to_string()}});
    }
    return out;
}

inline Combination combination_from_json(const Json &j)
{
    Combination c;
    for (const auto &e : j) {
        c.emplace_back(e.at("equation").get<std::size_t>(), Rational::parse(e.at("multiplier").get<std::string>()));
    }
    return c;
}

inline Json integers_to_json(const std::vector<Integer> &v)
{
    Json out = Json::array();
    for (const auto &x : v) {
        out.push_back(x.get_str());
    }
    return out;
}

inline std::vector<Integer> integers_from_json(const Json &j)
{
    std::vector<Integer> out;
    for (const auto &x : j) {
        out.emplace_back(x.get<std::string>());
    }
    return out;
}

inline Json interval_to_json(const IntegerInterval &r)
{
    return {{"lo", std::to_string(r.lo)}, {"hi", std::to_string(r.hi)}};
}

inline IntegerInterval interval_from_json(const Json &j)
{
    return {std::stoll(j.at("lo").get<std::string>()), std::stoll(j.at("hi").get<std::string>())};
}

inline Json node_to_json(const CertificateNode &node, const std::vector<std::string> &names)
{
    const std::size_t nv = names.size();
    Json j{{"kind", to_string(node.kind)}};
    Json assignment = Json::array();
    for (const auto &[v, x] : node.assignment) {
        assignment.push_back({{"variable", names.at(v)}, {"value", x.get_str()}});
    }
    j["assignment"] = assignment;
    Json subs = Json::array();
    for (const auto &s : node.substitutions) {
        subs.push_back({{"variable", names.at(s.variable)},
                        {"value", polynomial_to_json(s.value, nv)},
                        {"witness", combination_to_json(s.witness)}});
    }
    j["substitutions"] = subs;
    if (node.inconsistency) {
        j["inconsistency"] = {{"witness", combination_to_json(node.inconsistency->witness)},
                              {"constant", node.inconsistency->constant.to_string()}};
    }
    if (node.forced_variable) {
        j["forced_variable"] = names.at(*node.forced_variable);
    }
    if (node.equation) {
        j["equation"] = *node.equation;
    }
    if (node.roots) {
        const auto &r = *node.roots;
        Json roots{{"variable", r.variable ? Json(names.at(*r.variable)) : Json(nullptr)},
                   {"primitive", integers_to_json(r.primitive)},
                   {"roots", integers_to_json(r.roots)},
                   {"evidence", to_string(r.evidence)},
                   {"candidates_tested", r.candidates_tested}};
        if (r.discriminant) {
            roots["discriminant"] = r.discriminant->get_str();
            roots["discriminant_square"] = r.discriminant_square;
        }
        j["roots"] = roots;
    }
    if (node.prime) {
        j["prime"] = *node.prime;
    }
    if (!node.children.empty()) {
        Json children = Json::array();
        for (const auto &c : node.children) {
            children.push_back(node_to_json(c, names));
        }
        j["children"] = children;
    }
    if (node.kind == NodeKind::enumeration) {
        Json bounds = Json::object();
        for (const auto &[v, r] : node.bounds) {
            bounds[names.at(v)] = interval_to_json(r);
        }
        j["bounds"] = bounds;
        j["visited"] = node.visited;
        j["sieved"] = node.sieved;
        j["budget_exhausted"] = node.budget_exhausted;
    }
    if (!node.solutions.empty()) {
        Json sols = Json::array();
        for (const auto &s : node.solutions) {
            sols.push_back(integers_to_json(s));
        }
        j["solutions"] = sols;
    }
    return j;
}

inline std::size_t index_of(const std::vector<std::string> &names, const std::string &name)
{
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return i;
        }
    }
    throw std::invalid_argument("unknown variable '" + name + "' in certificate");
}

inline CertificateNode node_from_json(const Json &j, const VariableNames &vars)
{
    const auto &names = *vars;
    CertificateNode node;
    node.kind = parse_node_kind(j.at("kind").get<std::string>());
    for (const auto &a : j.at("assignment")) {
        node.assignment.emplace_back(index_of(names, a.at("variable").get<std::string>()),
                                     Integer(a.at("value").get<std::string>()));
    }
    for (const auto &s : j.at("substitutions")) {
        node.substitutions.push_back({index_of(names, s.at("variable").get<std::string>()),
                                      polynomial_from_json(s.at("value"), vars), combination_from_json(s.at("witness"))});
    }
    if (j.contains("inconsistency")) {
        node.inconsistency = LinearInconsistency{combination_from_json(j["inconsistency"].at("witness")),
                                                 Rational::parse(j["inconsistency"].at("constant").get<std::string>())};
    }
    if (j.contains("forced_variable")) {
        node.forced_variable = index_of(names, j["forced_variable"].get<std::string>());
    }
    if (j.contains("equation")) {
        node.equation = j["equation"].get<std::size_t>();
    }
    if (j.contains("roots")) {
        const auto &r = j["roots"];
        UnivariateRoots u;
        if (!r.at("variable").is_null()) {
            u.variable = index_of(names, r["variable"].get<std::string>());
        }
        u.primitive = integers_from_json(r.at("primitive"));
        u.roots = integers_from_json(r.at("roots"));
        u.evidence = parse_root_evidence(r.at("evidence").get<std::string>());
        u.candidates_tested = r.at("candidates_tested").get<std::size_t>();
        if (r.contains("discriminant")) {
            u.discriminant = Integer(r["discriminant"].get<std::string>());
            u.discriminant_square = r.at("discriminant_square").get<bool>();
        }
        node.roots = std::move(u);
    }
    if (j.contains("prime")) {
        node.prime = j["prime"].get<std::uint32_t>();
    }
    if (j.contains("children")) {
        for (const auto &c : j["children"]) {
            node.children.push_back(node_from_json(c, vars));
        }
    }
    if (j.contains("bounds")) {
        for (const auto &[name, r] : j["bounds"].items()) {
            node.bounds[index_of(names, name)] = interval_from_json(r);
        }
        node.visited = j.at("visited").get<std::uint64_t>();
        node.sieved = j.at("sieved").get<std::uint64_t>();
        node.budget_exhausted = j.at("budget_exhausted").get<bool>();
    }
    if (j.contains("solutions")) {
        for (const auto &s : j["solutions"]) {
            node.solutions.push_back(integers_from_json(s));
        }
    }
    return node;
}

} // namespace detail

inline Json to_json(const SearchReport &r)
{
    Json j{{"n", r.n},
           {"branch", r.branch ? Json(to_string(*r.branch)) : Json(nullptr)},
           {"mode", to_string(r.mode)},
           {"verdict", to_string(r.verdict)},
           {"variables", r.variables},
           {"complete", r.complete}};
    j["certificate"] = detail::node_to_json(r.certificate, r.variables);
    Json sols = Json::array();
    for (const auto &s : r.solutions) {
        sols.push_back(detail::integers_to_json(s));
    }
    j["solutions"] = sols;
    Json bounds = Json::object();
    for (const auto &[name, b] : r.bounds) {
        bounds[name] = detail::interval_to_json(b);
    }
    j["bounds"] = bounds;
    j["moduli"] = r.moduli;
    j["visited"] = r.visited;
    j["sieved"] = r.sieved;
    j["elapsed_ms"] = r.elapsed_ms;
    j["reduction_trace"] = r.reduction_trace;
    return j;
}

inline SearchReport search_report_from_json(const Json &j)
{
    SearchReport r;
    r.n = j.at("n").get<std::size_t>();
    if (!j.at("branch").is_null()) {
        r.branch = parse_branch(j["branch"].get<std::string>());
    }
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.variables = j.at("variables").get<std::vector<std::string>>();
    r.complete = j.at("complete").get<bool>();
    r.certificate = detail::node_from_json(j.at("certificate"), make_variables(r.variables));
    for (const auto &s : j.at("solutions")) {
        r.solutions.push_back(detail::integers_from_json(s));
    }
    for (const auto &[name, b] : j.at("bounds").items()) {
        r.bounds[name] = detail::interval_from_json(b);
    }
    r.moduli = j.at("moduli").get<std::vector<std::uint32_t>>();
    r.visited = j.at("visited").get<std::uint64_t>();
    r.sieved = j.at("sieved").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.reduction_trace = j.at("reduction_trace").get<std::vector<std::string>>();
    return r;
}

/// Structural check of a serialized report: required keys with the right
/// JSON types, verdict-specific payloads, and integer fields as strings.
inline std::vector<std::string> validate_report_json(const Json &j)
{
    std::vector<std::string> errors;
    auto need = [&](const char *key, bool ok) {
        if (!j.contains(key)) {
            errors.push_back(std::string("missing key '") + key + "'");
        } else if (!ok) {
            errors.push_back(std::string("wrong type for '") + key + "'");
        }
    };
    if (!j.is_object()) {
        return {"report is not an object"};
    }
    need("n", j.contains("n") && j["n"].is_number_unsigned());
    need("branch", j.contains("branch") && (j["branch"].is_string() || j["branch"].is_null()));
    need("mode", j.contains("mode") && j["mode"].is_string());
    need("verdict", j.contains("verdict") && j["verdict"].is_string());
    need("bounds", j.contains("bounds") && j["bounds"].is_object());
    need("moduli", j.contains("moduli") && j["moduli"].is_array());
    need("visited", j.contains("visited") && j["visited"].is_number_unsigned());
    need("elapsed_ms", j.contains("elapsed_ms") && j["elapsed_ms"].is_number_integer());
    need("solutions", j.contains("solutions") && j["solutions"].is_array());
    need("certificate", j.contains("certificate") && j["certificate"].is_object());
    if (!errors.empty()) {
        return errors;
    }
    try {
        const auto v = parse_verdict(j["verdict"].get<std::string>());
        if (v == Verdict::solutions && j["solutions"].empty()) {
            errors.emplace_back("Solutions verdict without solutions");
        }
        for (const auto &s : j["solutions"]) {
            for (const auto &x : s) {
                if (!x.is_string()) {
                    errors.emplace_back("solution entries must be decimal strings");
                }
            }
        }
        for (const auto &[name, b] : j["bounds"].items()) {
            if (!b.contains("lo") || !b["lo"].is_string() || !b.contains("hi") || !b["hi"].is_string()) {
                errors.push_back("bounds for '" + name + "' must be {lo, hi} strings");
            }
        }
        search_report_from_json(j);
    } catch (const std::exception &e) {
        errors.emplace_back(e.what());
    }
    return errors;
}

} // namespace chiy

#endif
