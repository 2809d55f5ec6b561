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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdseq/least_squares.hpp"
#include "mdseq/sequences.hpp"

namespace mdseq {

// ---------------------------------------------------------------------------
// Descriptive statistics

enum class OutlierRule {
    none,
    iqr_1_5,  ///< drop points outside [Q1 - 1.5 IQR, Q3 + 1.5 IQR]
};

std::string to_string(OutlierRule rule);

struct StatsReport {
    double mean = 0.0;
    double stdev = 0.0;            ///< sample (n - 1) standard deviation
    double skewness = 0.0;         ///< m3 / m2^1.5
    double excess_kurtosis = 0.0;  ///< m4 / m2^2 - 3, zero for a normal law
    double median = 0.0;
    double iqr = 0.0;
    std::size_t count = 0;  ///< points kept after exclusion
    std::size_t outliers_excluded = 0;
    std::string rule;
};

/// Moments, median and IQR of the data left after applying `rule`.
/// Quantiles use linear interpolation (h = (n - 1) p). Needs >= 2 points
/// (>= 4 for iqr_1_5) and nonzero spread.
StatsReport descriptive_stats(std::span<const double> data, OutlierRule rule = OutlierRule::iqr_1_5);

// ---------------------------------------------------------------------------
// Shannon entropy, base-10 logarithm throughout.

struct EntropyReport {
    double entropy = 0.0;
    std::size_t symbol_count = 0;
    std::size_t distinct_symbols = 0;
    std::string label;
};

/// How reals become symbols: by exact value, or rounded to `digits` decimals.
struct Symbolization {
    enum class Mode { exact, rounded } mode = Mode::exact;
    int digits = 0;

    static Symbolization exact() { return {}; }
    static Symbolization rounded(int digits) { return {Mode::rounded, digits}; }
};

EntropyReport shannon_entropy(std::span<const std::int64_t> symbols, std::string label = {});
EntropyReport shannon_entropy(std::span<const std::string> symbols, std::string label = {});
EntropyReport shannon_entropy(std::span<const double> values, Symbolization how, std::string label = {});

/// Whitespace-separated tokens of a fixture file, each token one symbol.
std::vector<std::string> load_symbol_file(const std::string& path);

// ---------------------------------------------------------------------------
// Empirical CDF and the GUE pair-correlation model

struct CdfStep {
    double x = 0.0;
    double F = 0.0;  ///< fraction of samples <= x
};

/// One step per distinct value, right-continuous, final F exactly 1.
std::vector<CdfStep> empirical_cdf(const UnitSequence& seq);

/// 1 - (sin(pi x) / (pi x))^2, continuous at 0.
double gue_r2(double x);

/// m(x; a, b) = 1 - b sin^2(a x) / x^2, with m(0) = 1 - b a^2.
double gue_model(double x, double a, double b);

/// (dm/da, dm/db), analytic.
Params2 gue_model_gradient(double x, double a, double b);

struct BandPoint {
    double x = 0.0;
    double fitted = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct FitResult {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> residuals;  ///< y - m(x)
    double rms_residual = 0.0;
    std::array<double, 4> covariance{};  ///< row-major, parameters (a, b)
    std::vector<double> sse_history;     ///< per accepted iteration, non-increasing
    int iterations = 0;
    std::vector<BandPoint> bands;  ///< filled by confidence_bands / fit_gue_model
    double band_level = 0.0;
};

/// Damped Gauss-Newton fit of m(x; a, b) to CDF points, with bands at the
/// data abscissae. Throws DegenerateFitError on singular normal equations
/// and NonConvergenceError (carrying the best iterate) at the iteration cap.
FitResult fit_gue_model(std::span<const CdfStep> cdf, Params2 initial,
                        const LeastSquaresOptions& options = {}, double band_level = 0.999);

/// Pointwise bands fitted +- t_{(1+level)/2, n-2} sqrt(g^T Cov g), with g the
/// model gradient at x. Throws DomainError for level outside (0, 1) and
/// ComputationError for a covariance that is not positive semidefinite.
std::vector<BandPoint> confidence_bands(const FitResult& fit, double level, std::span<const double> grid);

}  // namespace mdseq
