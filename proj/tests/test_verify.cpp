/*
   Copyright 2026 The desmic-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <set>

#include "desmic/verify/suites.hpp"

using namespace desmic;

namespace {

SuiteOptions opts(unsigned threads)
{
    SuiteOptions o;
    o.threads = threads;
    return o;
}

}  // namespace

TEST(Report, JsonShape)
{
    auto j = to_json(run_suite("identities", opts(1)));
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("suite"), "identities");
    ASSERT_EQ(j.at("checks").size(), 4u);
    for (const auto& c : j.at("checks")) {
        EXPECT_TRUE(c.contains("id"));
        EXPECT_TRUE(c.contains("anchor"));
        EXPECT_TRUE(c.contains("details"));
        EXPECT_FALSE(c.contains("elapsed_seconds"));
        std::set<std::string> statuses{"pass", "fail", "evidence-only", "skipped"};
        EXPECT_TRUE(statuses.count(c.at("status").get<std::string>()));
    }
}

TEST(Report, ByteIdenticalAcrossRunsAndThreadCounts)
{
    auto a = to_json(run_suite("lattices", opts(1))).dump(2);
    auto b = to_json(run_suite("lattices", opts(1))).dump(2);
    auto c = to_json(run_suite("lattices", opts(4))).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(Report, ExceptionsBecomeFailures)
{
    std::vector<CheckTask> tasks{{"t.ok", "", [] { return verdict(true, "fine"); }},
                                 {"t.throws", "", []() -> Outcome { throw std::runtime_error("boom"); }}};
    auto r = run_checks(tasks, 2);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].status, CheckStatus::Pass);
    EXPECT_EQ(r[1].status, CheckStatus::Fail);
    EXPECT_NE(r[1].details.find("boom"), std::string::npos);
    tasks.push_back(tasks[0]);
    EXPECT_THROW(run_checks(tasks, 1), std::logic_error);
}

TEST(Suites, UnknownSuiteThrows)
{
    EXPECT_THROW(run_suite("no-such-suite", opts(1)), std::invalid_argument);
}

TEST(Suites, MissingDataIsAnError)
{
    auto o = opts(1);
    o.data_dir = "/nonexistent-desmic-data";
    EXPECT_THROW(run_suite("lattices", o), MissingDataError);
    EXPECT_THROW(run_suite("all", o), MissingDataError);
    EXPECT_NO_THROW(run_suite("identities", o));
}

TEST(Suites, IdsAreUniqueAndPrefixed)
{
    std::set<std::string> seen;
    for (const auto& s : suite_names())
        for (const auto& t : suite_tasks(s, opts(1))) {
            EXPECT_EQ(t.id.rfind(s + ".", 0), 0u) << t.id;
            EXPECT_TRUE(seen.insert(t.id).second) << t.id;
            EXPECT_FALSE(t.anchor.empty()) << t.id;
        }
}

TEST(Suites, ScanChecksFollowPrimes)
{
    auto o = opts(1);
    o.primes = {5};
    std::vector<std::string> ids;
    for (const auto& t : suite_tasks("line-complex", o))
        if (t.id.find("scan") != std::string::npos) ids.push_back(t.id);
    EXPECT_EQ(ids, (std::vector<std::string>{"line-complex.scan-F5", "line-complex.scan-variant-F5"}));
}

TEST(Suites, LatticeVerdicts)
{
    auto r = run_suite("lattices", opts(2));
    for (const char* id : {"lattices.artin2-sigma1", "lattices.artin2-sigma2", "lattices.artin2-sigma3",
                           "lattices.genus-match", "lattices.curve-span", "lattices.overlattice-chain"}) {
        const auto* c = r.find(id);
        ASSERT_NE(c, nullptr) << id;
        EXPECT_EQ(c->status, CheckStatus::Pass) << id << ": " << c->details;
    }
    EXPECT_NE(r.find("lattices.artin2-sigma3")->details.find("not embeddable"), std::string::npos);
}

TEST(Suites, PrintedDiscrepanciesAreReportedAsFailures)
{
    auto d = run_suite("desmic-surface", opts(1));
    EXPECT_EQ(d.find("desmic-surface.tangency-computed")->status, CheckStatus::Pass);
    EXPECT_EQ(d.find("desmic-surface.tangency-printed")->status, CheckStatus::Fail);
    EXPECT_FALSE(d.ok());
    auto s = run_suite("supersingular", opts(1));
    EXPECT_EQ(s.find("supersingular.h-profile")->status, CheckStatus::Fail);
    EXPECT_EQ(s.count(CheckStatus::Fail), 1u);
}
