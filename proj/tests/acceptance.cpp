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

// Acceptance gate: one line per criterion, each with a wall-clock budget.
// A criterion passes when every check of its suite passes (scan checks may be
// evidence-only) and the suite finishes within budget.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "desmic/verify/suites.hpp"

namespace {

struct Criterion {
    int number;
    const char* title;
    const char* suite;
    double budget_seconds;
};

const Criterion criteria[] = {
    {1, "polynomial identities", "identities", 10},
    {2, "desmic surface", "desmic-surface", 30},
    {3, "Klein line complex", "line-complex", 300},
    {4, "monomial symmetry group", "symmetry", 600},
    {5, "projection from a node", "projection", 60},
    {6, "characteristic 2", "char2", 60},
    {7, "supersingular Kummer surface", "supersingular", 60},
    {8, "lattices", "lattices", 120},
};

}  // namespace

int main()
{
    desmic::SuiteOptions opts;
    opts.primes = {13, 17};
    int failed = 0;
    for (const auto& c : criteria) {
        opts.budget_seconds = c.budget_seconds;
        auto start = std::chrono::steady_clock::now();
        std::vector<std::string> bad;
        try {
            auto r = desmic::run_suite(c.suite, opts);
            for (const auto& chk : r.checks)
                if (chk.status != desmic::CheckStatus::Pass && chk.status != desmic::CheckStatus::EvidenceOnly)
                    bad.push_back(chk.id + " [" + desmic::status_str(chk.status) + "] " + chk.details);
        } catch (const std::exception& e) {
            bad.push_back(std::string("error: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) bad.push_back("over budget");
        bool ok = bad.empty();
        failed += !ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_seconds);
        std::cout << "criterion " << c.number << " (" << c.title << "): " << (ok ? "PASS" : "FAIL") << " (" << timing << ")\n";
        for (const auto& b : bad) std::cout << "    " << b << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
