// Copyright 2026 The mdseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mdseq/errors.hpp"
#include "mdseq_cli/pipelines.hpp"
#include "mdseq_cli/run_config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitComputation = 3;

struct FlagSpec {
    const char* field;
    const char* flag;
    const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"prime_limit", "--prime-limit", "Sieve primes up to this bound"},
    {"dyad", "--dyad", "Gap pair, e.g. 6,6"},
    {"sizes", "--sizes", "Comma-separated interval sizes"},
    {"offsets", "--offsets", "Comma-separated offsets j"},
    {"n_max", "--n-max", "Largest Weyl frequency"},
    {"constant_C", "--constant-c", "Erdos-Turan constant"},
    {"budget", "--budget", "Integrand evaluations per integral"},
    {"tolerance", "--tolerance", "Relative error for convergence"},
    {"epsilon", "--epsilon", "Cauchy tube half-width"},
    {"output_dir", "--output-dir", "Directory for CSV and SVG artifacts"},
    {"seed", "--seed", "Seed for the random comparison streams"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meta-distance sequence of prime gaps: construction and equidistribution analyses"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_file;
    std::string data_dir = MDSEQ_DEFAULT_DATA_DIR;
    std::string battery_file;
    std::map<std::string, std::string> raw;

    app.add_option("-c,--config", config_file, "key=value config file")->check(CLI::ExistingFile);
    app.add_option("--data-dir", data_dir, "Directory with digit corpora and fixtures");
    app.add_option("--battery", battery_file, "CSV battery replacing the built-in one")->check(CLI::ExistingFile);
    for (const FlagSpec& f : kFlags) {
        app.add_option_function<std::string>(
            f.flag, [&raw, field = std::string(f.field)](const std::string& v) { raw[field] = v; }, f.help);
    }

    const std::map<std::string, std::string> descriptions{
        {"generate", "Write Md and the comparison sequences"},
        {"coverage", "Interval coverage and well-distribution tables"},
        {"discrepancy", "Weyl sums, Erdos-Turan bounds and the Cauchy tube"},
        {"integrate", "Integration battery with error statistics"},
        {"entropy", "Base-10 Shannon entropy table"},
        {"gue", "Empirical CDF, model fit and confidence bands"},
        {"all", "Every pipeline above"},
    };
    for (std::string_view name : mdseq::cli::kSubcommands) {
        app.add_subcommand(std::string(name), descriptions.at(std::string(name)));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }
    const std::string sub = app.get_subcommands().front()->get_name();

    mdseq::cli::RunConfig config;
    try {
        config = mdseq::cli::resolve_config(config_file, raw);
    } catch (const mdseq::cli::ConfigError& e) {
        std::cerr << "mdseq: config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        mdseq::cli::Workspace ws(config, data_dir, battery_file);
        mdseq::cli::run(sub, ws);
        for (const auto& p : ws.written()) std::cout << p.string() << '\n';
    } catch (const mdseq::cli::ConfigError& e) {
        std::cerr << "mdseq: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "mdseq " << sub << ": " << e.what() << '\n';
        return kExitComputation;
    }
    return EXIT_SUCCESS;
}
