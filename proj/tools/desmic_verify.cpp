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

// desmic-verify: runs the verification suites and reports one line per check.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "desmic/verify/suites.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of desmic surfaces, the Klein line complex and related lattices"};
    desmic::SuiteOptions opts;
    std::string suite = "all";
    std::string json_path, export_path;
    std::vector<std::int64_t> primes;

    std::vector<std::string> choices = desmic::suite_names();
    choices.push_back("all");
    app.add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(choices));
    app.add_option("--prime", primes, "Prime for the finite-field scans (repeatable, default 13 and 17)")->allow_extra_args(false);
    app.add_option("--json", json_path, "Write the JSON report here");
    app.add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--data-dir", opts.data_dir, "Directory holding the curve-system data files");
    app.add_option("--budget-seconds", opts.budget_seconds, "Time budget for the symmetry search")->check(CLI::PositiveNumber);
    app.add_option("--export-supersingular", export_path, "Write the generated 42-curve system as JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!primes.empty()) opts.primes = primes;

    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) {
            std::cerr << "desmic-verify: cannot write " << export_path << "\n";
            return 2;
        }
        out << desmic::to_json(desmic::supersingular_curve_system()).dump(1) << "\n";
        return 0;
    }

    desmic::VerificationReport report;
    try {
        report = desmic::run_suite(suite, opts);
    } catch (const std::exception& e) {
        std::cerr << "desmic-verify: " << e.what() << "\n";
        return 2;
    }
    std::cout << desmic::render_text(report);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "desmic-verify: cannot write " << json_path << "\n";
            return 2;
        }
        out << desmic::to_json(report).dump(2) << "\n";
    }
    return report.ok() ? 0 : 1;
}
