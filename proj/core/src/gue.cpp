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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/students_t.hpp>

#include "mdseq/analysis.hpp"
#include "mdseq/errors.hpp"

namespace mdseq {

namespace {

double sinc(double u) {
    if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

}  // namespace

std::vector<CdfStep> empirical_cdf(const UnitSequence& seq) {
    if (seq.empty()) throw DomainError("empirical_cdf: empty sequence");
    std::vector<double> x(seq.values().begin(), seq.values().end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    std::vector<CdfStep> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i + 1 < x.size() && x[i + 1] == x[i]) continue;
        out.push_back({x[i], static_cast<double>(i + 1) / n});
    }
    out.back().F = 1.0;
    return out;
}

double gue_r2(double x) {
    const double s = sinc(std::numbers::pi * x);
    return 1.0 - s * s;
}

double gue_model(double x, double a, double b) {
    const double s = sinc(a * x);
    return 1.0 - b * a * a * s * s;
}

Params2 gue_model_gradient(double x, double a, double b) {
    const double s = sinc(a * x);
    return {-2.0 * a * b * sinc(2.0 * a * x), -a * a * s * s};
}

FitResult fit_gue_model(std::span<const CdfStep> cdf, Params2 initial, const LeastSquaresOptions& options,
                        double band_level) {
    if (cdf.size() < 3) throw DomainError("fit_gue_model: need at least 3 points");
    FitResult fit;
    fit.x.reserve(cdf.size());
    fit.y.reserve(cdf.size());
    for (const CdfStep& s : cdf) {
        fit.x.push_back(s.x);
        fit.y.push_back(s.F);
    }
    const CurveModel2 model{
        [](double x, const Params2& p) { return gue_model(x, p[0], p[1]); },
        [](double x, const Params2& p) { return gue_model_gradient(x, p[0], p[1]); }};
    const LeastSquaresResult ls = damped_gauss_newton(fit.x, fit.y, model, initial, options);

    fit.a = ls.params[0];
    fit.b = ls.params[1];
    fit.residuals = ls.residuals;
    fit.rms_residual = std::sqrt(ls.sse / static_cast<double>(cdf.size()));
    fit.covariance = parameter_covariance(ls);
    fit.sse_history = ls.sse_history;
    fit.iterations = ls.iterations;
    fit.bands = confidence_bands(fit, band_level, fit.x);
    fit.band_level = band_level;
    return fit;
}

std::vector<BandPoint> confidence_bands(const FitResult& fit, double level, std::span<const double> grid) {
    if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence_bands: level must be in (0, 1)");
    if (fit.x.size() < 3) throw DomainError("confidence_bands: fit has fewer than 3 points");
    const auto& c = fit.covariance;
    const double det = c[0] * c[3] - c[1] * c[2];
    const bool finite = std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); });
    if (!finite || c[0] < 0.0 || c[3] < 0.0 || det < -1e-12 * std::abs(c[0] * c[3]) ||
        std::abs(c[1] - c[2]) > 1e-9 * (std::abs(c[1]) + std::abs(c[2]) + 1e-300)) {
        throw ComputationError("confidence_bands: covariance is not positive semidefinite");
    }
    const boost::math::students_t_distribution<double> t_dist(static_cast<double>(fit.x.size() - 2));
    const double t = boost::math::quantile(t_dist, 0.5 * (1.0 + level));

    std::vector<BandPoint> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const Params2 g = gue_model_gradient(x, fit.a, fit.b);
        const double var = g[0] * g[0] * c[0] + 2.0 * g[0] * g[1] * c[1] + g[1] * g[1] * c[3];
        const double half = t * std::sqrt(std::max(0.0, var));
        const double y = gue_model(x, fit.a, fit.b);
        out.push_back({x, y, y - half, y + half});
    }
    return out;
}

}  // namespace mdseq
