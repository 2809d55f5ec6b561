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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdseq/analysis.hpp"
#include "mdseq/equidist.hpp"
#include "mdseq/qmc.hpp"

namespace mdseq {

/// Comma-separated table: header row, LF line endings, floats with 17
/// significant digits, optional trailing "# key=value" metadata lines.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    CsvTable& row(std::vector<std::string> cells);
    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }

    void add_metadata(std::string key, std::string value);

    void write(std::ostream& out) const;
    void write(const std::filesystem::path& path) const;
    std::string str() const;

    static std::string cell(double v) { return format_double_cell(v); }
    static std::string cell(std::optional<double> v) { return v ? cell(*v) : std::string(); }
    static std::string cell(std::size_t v) { return std::to_string(v); }
    static std::string cell(std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string(); }

private:
    static std::string format_double_cell(double v);

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::pair<std::string, std::string>> metadata_;
};

/// size, offset_j, measured_fraction, expected_published, analytic_uniform, sample_count
CsvTable coverage_csv(std::span<const CoverageReport> reports);

/// n, weyl_sum, partial_bound
CsvTable discrepancy_csv(const DiscrepancyReport& report);

/// n, difference, fitted, residual, in_tube
CsvTable cauchy_csv(const CauchyReport& report);

/// segment_first, segment_last, a, b
CsvTable cauchy_fits_csv(const CauchyReport& report);

/// label, rule, count, outliers_excluded, mean, stdev, skewness, excess_kurtosis, median, iqr
CsvTable stats_csv(std::span<const StatsReport> reports, std::span<const std::string> labels);

/// label, entropy, symbol_count, distinct_symbols
CsvTable entropy_csv(std::span<const EntropyReport> reports);

/// x, F, fitted, lower, upper, residual, gue_r2
CsvTable fit_grid_csv(const FitResult& fit);

/// a, b, rms_residual, cov_aa, cov_ab, cov_bb, iterations, band_level
CsvTable fit_params_csv(const FitResult& fit);

/// sequence, integrand, family, dimension, n, estimate, reference, relative_error, converged_at
CsvTable battery_csv(const BatteryTable& table);

}  // namespace mdseq
