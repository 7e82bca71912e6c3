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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <chiy/cli.hpp>

namespace
{

using chiy::cli::RunConfig;

struct RawFlags {
    std::string branch;
    std::string mode = "ak";
    std::string bounds;
    std::string moduli;
    std::string format;
    std::string expect;
    std::size_t corrupt = 0;
    bool no_modular_certificates = false;
};

void add_common(CLI::App *sub, RunConfig &cfg, RawFlags &raw)
{
    sub->add_option("--n", cfg.n, "Dimension n");
    sub->add_option("--format", raw.format, "Output format: json, csv or text");
    sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
}

void add_system_flags(CLI::App *sub, RawFlags &raw)
{
    sub->add_option("--branch", raw.branch, "c_1 branch: standard (n+1) or half ((n+1)/2)");
    sub->add_option("--mode", raw.mode, "Equations: ak (A_k only) or full (every chi_y coefficient)");
}

} // namespace

int main(int argc, char **argv)
{
    RunConfig cfg;
    RawFlags raw;
    CLI::App app{"Chern numbers, chi_y genera and integer solvability of Chern-number systems"};
    app.require_subcommand(1);

    auto *pn = app.add_subcommand("pn-verify", "Regression suite over projective spaces P^1..P^max-n");
    add_common(pn, cfg, raw);
    pn->add_option("--max-n", cfg.max_n, "Largest dimension checked");
    pn->add_option("--corrupt-binomial", raw.corrupt, "Perturb c_1 of P^n (negative control)")->group("");

    auto *genus = app.add_subcommand("genus", "chi_p, chi_y and its expansion about y = -1");
    add_common(genus, cfg, raw);
    genus->add_option("--chern", cfg.chern, "Comma-separated c_1,...,c_n");
    genus->add_option("--hodge", cfg.hodge_path, "File with the (n+1)x(n+1) Hodge matrix h^{p,q}");

    auto *system = app.add_subcommand("system", "Emit the Chern-number equation system");
    add_common(system, cfg, raw);
    add_system_flags(system, raw);
    system->add_flag("--reduced", cfg.reduced, "Also apply linear elimination and emit the trace");

    auto *classify = app.add_subcommand("classify", "Decide integer solvability of the system");
    add_common(classify, cfg, raw);
    add_system_flags(classify, raw);
    classify->add_option("--bound-scale", cfg.bound_scale, "Default box |c_i| <= binom(n+1,i) * scale");
    classify->add_option("--bounds", raw.bounds, "Explicit bounds var=lo:hi,...");
    classify->add_option("--moduli", raw.moduli, "Sieving primes, comma-separated");
    classify->add_option("--workers", cfg.workers, "Enumeration worker threads");
    classify->add_option("--expect", raw.expect, "Expected verdict: NoIntegerSolution, Solutions or Inconclusive");
    classify->add_flag("--no-modular-certificates", raw.no_modular_certificates,
                       "Do not search for a prime with no common zero before enumerating");

    auto *table = app.add_subcommand("table", "Per-dimension summary of the c_1 dichotomy");
    add_common(table, cfg, raw);
    table->add_option("--max-n", cfg.max_n, "Largest dimension listed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : chiy::cli::exit_code::usage;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!raw.branch.empty()) {
            cfg.branch = chiy::parse_branch(raw.branch);
        }
        cfg.mode = chiy::parse_mode(raw.mode);
        if (!raw.bounds.empty()) {
            cfg.bounds = chiy::cli::parse_bounds(raw.bounds);
        }
        if (!raw.moduli.empty()) {
            cfg.moduli = chiy::cli::parse_moduli(raw.moduli);
        }
        if (!raw.format.empty()) {
            cfg.format = chiy::cli::parse_format(raw.format);
        }
        if (!raw.expect.empty()) {
            cfg.expect = chiy::parse_verdict(raw.expect);
        }
        if (raw.corrupt != 0) {
            cfg.corrupt_binomial = raw.corrupt;
        }
        cfg.modular_certificates = !raw.no_modular_certificates;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return chiy::cli::exit_code::usage;
    }

    if (cfg.output) {
        std::ostringstream buffer;
        const int rc = chiy::cli::run(cfg, buffer, std::cerr);
        std::ofstream file(*cfg.output);
        if (!file) {
            std::cerr << "error: cannot write '" << *cfg.output << "'\n";
            return chiy::cli::exit_code::usage;
        }
        file << buffer.str();
        return rc;
    }
    return chiy::cli::run(cfg, std::cout, std::cerr);
}
