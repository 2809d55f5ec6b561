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

#include <cstddef>
#include <optional>
#include <vector>

#include "mdseq/sequences.hpp"

namespace mdseq {

struct CoverageReport {
    double size = 0.0;
    std::size_t offset_j = 1;
    double measured_fraction = 0.0;       ///< n / N
    std::optional<double> expected_published;  ///< published "expected" column, when size is one of its rows
    double analytic_uniform = 0.0;        ///< 2 size - 3 size^2, law of |X - Y| for iid uniforms
    std::size_t sample_count = 0;          ///< N
};

/// Fraction (over the full length N) of consecutive pairs whose absolute
/// difference lies in [size, 2 size]. Needs values in [0, 1], size in (0, 0.5].
CoverageReport interval_coverage_test(const UnitSequence& seq, double size);

/// As interval_coverage_test, but pairs (seq[k], seq[k + offset_j]).
CoverageReport well_distributed_test(const UnitSequence& seq, double size, std::size_t offset_j);

/// The sizes of the published coverage tables.
inline constexpr double kCoverageSizes[] = {0.1, 0.2, 0.25, 0.333};

/// |sum_j exp(2 pi i k s_j)|, values taken mod 1.
double weyl_sum(const UnitSequence& seq, std::size_t k);

/// Constant for which the bound provably dominates the extreme (hence the
/// star) discrepancy: with the Kuipers-Niederreiter form
///   D_N <= 6/(n+1) + 4/pi sum_{k<=n} (1/k - 1/(n+1)) |W_k| / N
/// both terms are at most 6/n and 6/k |W_k| / N respectively.
inline constexpr double kClassicalErdosTuranConstant = 6.0;

struct DiscrepancyReport {
    std::size_t m = 0;
    std::size_t n_max = 0;
    double constant_C = 1.0;
    std::vector<double> weyl_sums;       ///< [k - 1] = |W_k|, k = 1..n_max
    std::vector<double> partial_bounds;  ///< [n - 1] = C (1/n + 1/m sum_{k<=n} |W_k| / k)
    double supremum_bound = 0.0;
};

/// Erdős–Turán partial bounds for every n <= n_max. Weyl sums are evaluated
/// in parallel over k; each one is a fixed-order pairwise sum over the
/// distinct values of the sequence, so results are bit-stable across runs
/// and thread counts.
DiscrepancyReport erdos_turan_bound(const UnitSequence& seq, std::size_t n_max, double constant_C = 1.0);

/// Exact one-dimensional star discrepancy from the order statistics:
/// max_i max(i/N - x_(i), x_(i) - (i-1)/N).
double star_discrepancy_exact(const UnitSequence& seq);

/// Half-open range [first, last) of 1-based difference indices n.
struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

struct PowerLawFit {
    double a = 0.0;
    double b = 0.0;
    IndexRange range;
};

struct CauchyReport {
    /// [n - 1] = partial_bounds[n] - partial_bounds[n - 1] in 1-based terms,
    /// i.e. bound(n + 1) - bound(n).
    std::vector<double> differences;
    std::vector<PowerLawFit> fit_segments;
    std::vector<double> fitted;
    std::vector<double> residuals;  ///< differences - fitted
    double epsilon = 0.0;
    /// Least 1-based N0 such that for every n >= N0 both |difference| and
    /// |residual| are below epsilon; empty when the last point is outside.
    std::optional<std::size_t> tube_entry_index;

    bool converged() const { return tube_entry_index.has_value(); }
};

/// [1, 4), then [2^t, 2^(t+1)) for t >= 2, clipped to `count` differences;
/// a short trailing segment (< 3 points) is merged into its predecessor.
std::vector<IndexRange> default_fit_segments(std::size_t count);

/// Least-squares fit of a x^b on x = first..last-1.
PowerLawFit fit_power_law(std::span<const double> differences, IndexRange range);

/// Cauchy-convergence diagnostics of the partial-bound sequence. An empty
/// `segments` selects default_fit_segments.
CauchyReport convergence_analysis(const DiscrepancyReport& report, double epsilon = 1e-4,
                                  std::vector<IndexRange> segments = {});

/// Same analysis on a raw difference sequence (x = 1, 2, ...).
CauchyReport convergence_analysis_of_differences(std::vector<double> differences, double epsilon,
                                                 std::vector<IndexRange> segments = {});

}  // namespace mdseq
