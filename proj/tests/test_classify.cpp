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

#include <gtest/gtest.h>

#include <random>

#include <chiy/classify.hpp>

#include "planted.hpp"

using namespace chiy;

namespace
{

using test::Planted;
using test::Point;

ClassifyOptions deterministic()
{
    ClassifyOptions o;
    o.record_timing = false;
    return o;
}

} // namespace

TEST(Classify, ThreefoldHalfIsLinearlyInconsistent)
{
    const auto r = classify(3, Branch::half);
    EXPECT_EQ(r.verdict, Verdict::no_integer_solution);
    EXPECT_EQ(r.certificate.kind, NodeKind::linear_inconsistency);
    EXPECT_TRUE(replay_certificate(generate_system(3, Branch::half), r.certificate).refutes);
}

TEST(Classify, FiveFoldHalfHasNoSolution)
{
    const auto sys = generate_system(5, Branch::half);
    const auto r = classify_system(sys);
    EXPECT_EQ(r.verdict, Verdict::no_integer_solution);
    EXPECT_TRUE(r.complete);
    ASSERT_EQ(r.certificate.kind, NodeKind::no_integer_roots);
    const auto &roots = *r.certificate.roots;
    EXPECT_EQ(roots.evidence, RootEvidence::discriminant);
    EXPECT_FALSE(roots.discriminant_square);
    EXPECT_EQ(*roots.discriminant, 592);
    const auto replay = certify_report(sys, r);
    EXPECT_TRUE(replay.ok) << replay.failure;
    EXPECT_TRUE(replay.refutes);
    EXPECT_TRUE(r.solutions.empty());
}

TEST(Classify, FiveFoldStandardFindsProjectiveSpace)
{
    const auto r = classify(5, Branch::standard);
    EXPECT_EQ(r.verdict, Verdict::solutions);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.solutions, (std::vector<Point>{{15, 20, 15}}));
    EXPECT_TRUE(certify_report(generate_system(5, Branch::standard), r).ok);
}

TEST(Classify, SmallStandardBranches)
{
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto sys = generate_system(n, Branch::standard);
        const auto r = classify_system(sys);
        ASSERT_EQ(r.verdict, Verdict::solutions) << "n = " << n;
        std::vector<Integer> binom;
        for (std::size_t i = 2; i < n; ++i) {
            binom.push_back(binomial(n + 1, i));
        }
        EXPECT_NE(std::find(r.solutions.begin(), r.solutions.end(), binom), r.solutions.end()) << "n = " << n;
        EXPECT_TRUE(certify_report(sys, r).ok);
    }
}

TEST(Classify, SevenFoldHalfModularObstruction)
{
    const auto sys = generate_system(7, Branch::half);
    const auto r = classify_system(sys, deterministic());
    ASSERT_EQ(r.verdict, Verdict::no_integer_solution);
    ASSERT_EQ(r.certificate.kind, NodeKind::modular_obstruction);
    EXPECT_EQ(*r.certificate.prime, 13u);
    EXPECT_TRUE(certify_report(sys, r).refutes);

    // without the obstruction search the bounded scan finds nothing but proves nothing
    auto opt = deterministic();
    opt.modular_certificates = false;
    opt.bound_scale = 2;
    const auto box = classify_system(sys, opt);
    EXPECT_EQ(box.verdict, Verdict::inconclusive);
    EXPECT_EQ(box.certificate.kind, NodeKind::enumeration);
    EXPECT_TRUE(box.solutions.empty());
    EXPECT_FALSE(box.bounds.empty());
    EXPECT_TRUE(certify_report(sys, box).ok);
}

TEST(Classify, RecoversPlantedSolutionSets)
{
    std::mt19937_64 rng(83);
    int with_two = 0, refuted = 0, enumerated = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Planted p;
        if (trial % 4 == 3) {
            p = test::circle_system(rng);
        } else {
            p = test::line_system(rng, 2 + trial % 3, trial % 2 == 0);
        }
        std::vector<Point> results[4];
        int idx = 0;
        for (bool sieve : {true, false}) {
            for (bool modular : {true, false}) {
                auto opt = deterministic();
                opt.bounds = p.bounds;
                opt.modular_certificates = modular;
                if (!sieve) {
                    opt.enumeration.moduli.clear();
                }
                const auto r = classify_system(p.sys, opt);
                const auto cert = certify_report(p.sys, r);
                EXPECT_TRUE(cert.ok) << "trial " << trial << ": " << cert.failure;
                if (p.expected.empty()) {
                    EXPECT_NE(r.verdict, Verdict::solutions) << "trial " << trial;
                } else {
                    EXPECT_EQ(r.verdict, Verdict::solutions) << "trial " << trial;
                }
                enumerated += r.certificate.kind == NodeKind::enumeration;
                results[idx++] = r.solutions;
            }
        }
        const std::vector<Point> expected(p.expected.begin(), p.expected.end());
        for (const auto &got : results) {
            EXPECT_EQ(got, expected) << "trial " << trial;
        }
        with_two += expected.size() == 2;
        refuted += expected.empty();
    }
    // the corpus exercises several shapes
    EXPECT_GT(with_two, 10);
    EXPECT_GT(enumerated, 10);
    (void)refuted;
}

TEST(Classify, Deterministic)
{
    for (const auto &[n, b] : {std::pair{5ul, Branch::half}, std::pair{5ul, Branch::standard}, std::pair{7ul, Branch::half}}) {
        const auto a = classify(n, b, SystemMode::ak, deterministic());
        auto opt = deterministic();
        opt.enumeration.workers = 4;
        const auto c = classify(n, b, SystemMode::ak, opt);
        EXPECT_EQ(a.verdict, c.verdict);
        EXPECT_EQ(a.solutions, c.solutions);
        EXPECT_EQ(a.reduction_trace, c.reduction_trace);
        EXPECT_EQ(a.visited, c.visited);
    }
}

TEST(Replay, RejectsTamperedCertificates)
{
    const auto sys5 = generate_system(5, Branch::half);
    const auto r5 = classify_system(sys5);
    {
        auto bad = r5;
        bad.certificate.roots->discriminant = Integer(593);
        EXPECT_FALSE(certify_report(sys5, bad).ok);
    }
    {
        auto bad = r5;
        ASSERT_FALSE(bad.certificate.substitutions.empty());
        bad.certificate.substitutions[0].value += 1;
        EXPECT_FALSE(certify_report(sys5, bad).ok);
    }
    {
        auto bad = r5;
        bad.certificate.equation = 0; // A_1(M) is eliminated, not univariate
        EXPECT_FALSE(certify_report(sys5, bad).ok);
    }
    const auto sys3 = generate_system(3, Branch::half);
    {
        auto bad = classify_system(sys3);
        bad.certificate.inconsistency->constant += 1;
        EXPECT_FALSE(certify_report(sys3, bad).ok);
    }
    const auto sys7 = generate_system(7, Branch::half);
    {
        auto bad = classify_system(sys7);
        bad.certificate.prime = 2; // there are zeros mod 2
        const auto res = certify_report(sys7, bad);
        EXPECT_FALSE(res.ok);
        EXPECT_NE(res.failure.find("modulo 2"), std::string::npos);
    }
    const auto sysS = generate_system(5, Branch::standard);
    {
        auto bad = classify_system(sysS);
        bad.solutions[0][0] += 1;
        EXPECT_FALSE(certify_report(sysS, bad).ok);
    }
    {
        auto bad = classify_system(sysS);
        bad.verdict = Verdict::no_integer_solution;
        EXPECT_FALSE(certify_report(sysS, bad).ok);
    }
}

TEST(Classify, Errors)
{
    EXPECT_THROW(classify(2, Branch::standard), std::invalid_argument);
    ClassifyOptions bad;
    bad.bounds["c9"] = {0, 1};
    EXPECT_THROW(classify(5, Branch::half, SystemMode::ak, bad), std::invalid_argument);
    ClassifyOptions empty;
    empty.bounds["c2"] = {3, 1};
    EXPECT_THROW(classify(5, Branch::half, SystemMode::ak, empty), std::invalid_argument);
    EXPECT_THROW(parse_verdict("Maybe"), std::invalid_argument);
    EXPECT_EQ(parse_verdict("NoIntegerSolution"), Verdict::no_integer_solution);
}
