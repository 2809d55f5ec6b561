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

#include "mdseq/report_io.hpp"

#include <fstream>
#include <sstream>

#include "mdseq/numeric.hpp"

namespace mdseq {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw std::invalid_argument("CsvTable: row has " + std::to_string(cells.size()) + " cells, header has " +
                                    std::to_string(header_.size()));
    }
    rows_.push_back(std::move(cells));
    return *this;
}

void CsvTable::add_metadata(std::string key, std::string value) {
    metadata_.emplace_back(std::move(key), std::move(value));
}

std::string CsvTable::format_double_cell(double v) { return format_double(v); }

namespace {

void write_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char ch : c) {
                if (ch == '"') out << '"';
                out << ch;
            }
            out << '"';
        } else {
            out << c;
        }
    }
    out << '\n';
}

}  // namespace

void CsvTable::write(std::ostream& out) const {
    write_line(out, header_);
    for (const auto& r : rows_) write_line(out, r);
    for (const auto& [k, v] : metadata_) out << "# " << k << '=' << v << '\n';
}

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write(out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string CsvTable::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

CsvTable coverage_csv(std::span<const CoverageReport> reports) {
    CsvTable t({"size", "offset_j", "measured_fraction", "expected_published", "analytic_uniform", "sample_count"});
    for (const auto& r : reports) {
        t.row({CsvTable::cell(r.size), CsvTable::cell(r.offset_j), CsvTable::cell(r.measured_fraction),
               CsvTable::cell(r.expected_published), CsvTable::cell(r.analytic_uniform), CsvTable::cell(r.sample_count)});
    }
    return t;
}

CsvTable discrepancy_csv(const DiscrepancyReport& report) {
    CsvTable t({"n", "weyl_sum", "partial_bound"});
    for (std::size_t i = 0; i < report.n_max; ++i) {
        t.row({CsvTable::cell(i + 1), CsvTable::cell(report.weyl_sums[i]), CsvTable::cell(report.partial_bounds[i])});
    }
    t.add_metadata("m", std::to_string(report.m));
    t.add_metadata("constant_C", format_double(report.constant_C));
    t.add_metadata("supremum_bound", format_double(report.supremum_bound));
    return t;
}

CsvTable cauchy_csv(const CauchyReport& report) {
    CsvTable t({"n", "difference", "fitted", "residual", "in_tube"});
    for (std::size_t i = 0; i < report.differences.size(); ++i) {
        const bool in = report.tube_entry_index && i + 1 >= *report.tube_entry_index;
        t.row({CsvTable::cell(i + 1), CsvTable::cell(report.differences[i]), CsvTable::cell(report.fitted[i]),
               CsvTable::cell(report.residuals[i]), in ? "1" : "0"});
    }
    t.add_metadata("epsilon", format_double(report.epsilon));
    t.add_metadata("tube_entry_index",
                   report.tube_entry_index ? std::to_string(*report.tube_entry_index) : "not-converged");
    return t;
}

CsvTable cauchy_fits_csv(const CauchyReport& report) {
    CsvTable t({"segment_first", "segment_last", "a", "b"});
    for (const auto& f : report.fit_segments) {
        t.row({CsvTable::cell(f.range.first), CsvTable::cell(f.range.last), CsvTable::cell(f.a), CsvTable::cell(f.b)});
    }
    return t;
}

CsvTable stats_csv(std::span<const StatsReport> reports, std::span<const std::string> labels) {
    CsvTable t({"label", "rule", "count", "outliers_excluded", "mean", "stdev", "skewness", "excess_kurtosis",
                "median", "iqr"});
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        t.row({i < labels.size() ? labels[i] : std::string(), r.rule, CsvTable::cell(r.count),
               CsvTable::cell(r.outliers_excluded), CsvTable::cell(r.mean), CsvTable::cell(r.stdev),
               CsvTable::cell(r.skewness), CsvTable::cell(r.excess_kurtosis), CsvTable::cell(r.median),
               CsvTable::cell(r.iqr)});
    }
    return t;
}

CsvTable entropy_csv(std::span<const EntropyReport> reports) {
    CsvTable t({"label", "entropy", "symbol_count", "distinct_symbols"});
    for (const auto& r : reports) {
        t.row({r.label, CsvTable::cell(r.entropy), CsvTable::cell(r.symbol_count), CsvTable::cell(r.distinct_symbols)});
    }
    return t;
}

CsvTable fit_grid_csv(const FitResult& fit) {
    CsvTable t({"x", "F", "fitted", "lower", "upper", "residual", "gue_r2"});
    for (std::size_t i = 0; i < fit.x.size(); ++i) {
        const BandPoint band = i < fit.bands.size() ? fit.bands[i] : BandPoint{fit.x[i], gue_model(fit.x[i], fit.a, fit.b), 0, 0};
        t.row({CsvTable::cell(fit.x[i]), CsvTable::cell(fit.y[i]), CsvTable::cell(band.fitted),
               CsvTable::cell(band.lower), CsvTable::cell(band.upper), CsvTable::cell(fit.residuals[i]),
               CsvTable::cell(gue_r2(fit.x[i]))});
    }
    return t;
}

CsvTable fit_params_csv(const FitResult& fit) {
    CsvTable t({"a", "b", "rms_residual", "cov_aa", "cov_ab", "cov_bb", "iterations", "band_level"});
    t.row({CsvTable::cell(fit.a), CsvTable::cell(fit.b), CsvTable::cell(fit.rms_residual),
           CsvTable::cell(fit.covariance[0]), CsvTable::cell(fit.covariance[1]), CsvTable::cell(fit.covariance[3]),
           std::to_string(fit.iterations), CsvTable::cell(fit.band_level)});
    return t;
}

CsvTable battery_csv(const BatteryTable& table) {
    CsvTable t({"sequence", "integrand", "family", "dimension", "n", "estimate", "reference", "relative_error",
                "converged_at"});
    for (const auto& r : table.rows) {
        t.row({r.sequence, r.integrand, to_string(r.family), CsvTable::cell(r.dimension), CsvTable::cell(r.n),
               CsvTable::cell(r.estimate), CsvTable::cell(r.reference), CsvTable::cell(r.relative_error),
               CsvTable::cell(r.converged_at)});
    }
    return t;
}

}  // namespace mdseq
