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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdseq/analysis.hpp"
#include "mdseq/prime_engine.hpp"
#include "mdseq/qmc.hpp"
#include "mdseq/report_io.hpp"
#include "mdseq/sequences.hpp"
#include "mdseq_cli/run_config.hpp"

namespace mdseq::cli {

inline constexpr std::string_view kSubcommands[] = {"generate", "coverage", "discrepancy", "integrate",
                                                    "entropy",  "gue",      "all"};

/// Lazily built inputs shared by the subcommands of one run.
class Workspace {
public:
    Workspace(RunConfig config, std::filesystem::path data_dir, std::filesystem::path battery_file = {});

    const RunConfig& config() const { return config_; }
    const std::filesystem::path& data_dir() const { return data_dir_; }
    const std::string& hash() const { return hash_; }

    const PrimeTable& primes();
    const GapSequence& gaps();
    /// Gap prefix scanned for dyads: 10^6 or every available gap.
    std::size_t gap_prefix();
    const MetaDistanceSequence& md();
    const UnitSequence& md_unit();
    /// Md followed by the comparison sequences used in the battery: SWB,
    /// prime gaps and the three digit streams.
    const std::vector<UnitSequence>& sequences();
    const std::vector<Integrand>& battery();

    /// Stamps the config hash and writes `name` under output_dir.
    std::filesystem::path emit(CsvTable table, const std::string& name) const;
    std::filesystem::path emit_svg(const std::string& svg, const std::string& name) const;
    const std::vector<std::filesystem::path>& written() const { return written_; }

private:
    RunConfig config_;
    std::filesystem::path data_dir_;
    std::filesystem::path battery_file_;
    std::string hash_;
    std::optional<PrimeTable> primes_;
    std::optional<GapSequence> gaps_;
    std::optional<MetaDistanceSequence> md_;
    std::optional<UnitSequence> md_unit_;
    std::optional<std::vector<UnitSequence>> sequences_;
    std::optional<std::vector<Integrand>> battery_;
    mutable std::vector<std::filesystem::path> written_;
};

/// One entropy table row: our value next to the published one.
struct EntropyRow {
    EntropyReport report;
    std::string symbolization;
    std::optional<double> published_value;
    double tolerance = 0.0;
    bool reproduces() const;
};

std::vector<EntropyRow> entropy_rows(Workspace& ws);

void run_generate(Workspace& ws);
void run_coverage(Workspace& ws);
void run_discrepancy(Workspace& ws);
void run_integrate(Workspace& ws);
void run_entropy(Workspace& ws);
void run_gue(Workspace& ws);

/// Dispatches by name; "all" runs every pipeline in order. Throws
/// ConfigError for an unknown name.
void run(std::string_view subcommand, Workspace& ws);

/// Initial (a, b) for the CDF fit.
inline constexpr Params2 kGueInitialGuess{4.6203, 0.03};

}  // namespace mdseq::cli
