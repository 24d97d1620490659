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

#ifndef DESMIC_VERIFY_REPORT_HPP
#define DESMIC_VERIFY_REPORT_HPP

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace desmic {

enum class CheckStatus { Pass, Fail, EvidenceOnly, Skipped };

inline std::string status_str(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::EvidenceOnly: return "evidence-only";
    case CheckStatus::Skipped: return "skipped";
    }
    return "fail";
}

struct CheckResult {
    std::string id;
    std::string anchor;  // the claim being checked, in words
    CheckStatus status = CheckStatus::Fail;
    double elapsed_seconds = 0;  // not serialized, so reports stay byte-identical
    std::string details;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const
    {
        return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
    }
    std::size_t count(CheckStatus s) const
    {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
    }
    const CheckResult* find(const std::string& id) const
    {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
    void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

/// What a check body returns: a verdict and a human-readable explanation.
struct Outcome {
    CheckStatus status;
    std::string details;
};

inline Outcome verdict(bool ok, std::string details) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)}; }

struct CheckTask {
    std::string id;
    std::string anchor;
    std::function<Outcome()> body;
};

/// Runs tasks on up to threads workers; results keep the task order. A throwing body is a failed check.
inline std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, unsigned threads)
{
    std::set<std::string> ids;
    for (const auto& t : tasks)
        if (!ids.insert(t.id).second) throw std::logic_error("run_checks: duplicate check id " + t.id);
    std::vector<CheckResult> out(tasks.size());
    auto run_one = [&](std::size_t k) {
        const auto& t = tasks[k];
        auto& r = out[k];
        r.id = t.id;
        r.anchor = t.anchor;
        auto start = std::chrono::steady_clock::now();
        try {
            auto o = t.body();
            r.status = o.status;
            r.details = std::move(o.details);
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.details = std::string("exception: ") + e.what();
        }
        r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
        for (std::size_t k = 0; k < tasks.size(); ++k) run_one(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < tasks.size(); k = next++) run_one(k);
        });
    for (auto& th : pool) th.join();
    return out;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["ok"] = r.ok();
    j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                    {"fail", r.count(CheckStatus::Fail)},
                    {"evidence-only", r.count(CheckStatus::EvidenceOnly)},
                    {"skipped", r.count(CheckStatus::Skipped)}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        arr.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", status_str(c.status)}, {"details", c.details}});
    j["checks"] = arr;
    return j;
}

/// One line per check, with timings.
inline std::string render_text(const VerificationReport& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << "[" << status_str(c.status) << "] " << c.id << " (" << static_cast<long>(c.elapsed_seconds * 1000) << " ms)";
        if (!c.details.empty()) os << ": " << c.details;
        os << "\n";
    }
    os << r.suite << ": " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
       << r.count(CheckStatus::EvidenceOnly) << " evidence-only, " << r.count(CheckStatus::Skipped) << " skipped\n";
    return os.str();
}

}  // namespace desmic

#endif
