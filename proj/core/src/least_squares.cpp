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

#include "mdseq/least_squares.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mdseq {

namespace {

struct Linearization {
    std::vector<double> residuals;
    double sse = 0.0;
    std::array<double, 4> jtj{};
    Params2 jtr{};
    double jacobian_scale = 0.0;  // sqrt(trace J^T J)
};

Linearization linearize(std::span<const double> x, std::span<const double> y, const CurveModel2& model,
                        const Params2& p) {
    Linearization lin;
    lin.residuals.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - model.value(x[i], p);
        const Params2 g = model.gradient(x[i], p);
        if (!std::isfinite(r) || !std::isfinite(g[0]) || !std::isfinite(g[1])) {
            throw ComputationError("least squares: non-finite model value at x = " + std::to_string(x[i]));
        }
        lin.residuals[i] = r;
        lin.sse += r * r;
        lin.jtj[0] += g[0] * g[0];
        lin.jtj[1] += g[0] * g[1];
        lin.jtj[3] += g[1] * g[1];
        // Residual is y - f, so the SSE gradient is -2 J^T r; we keep J^T r.
        lin.jtr[0] += g[0] * r;
        lin.jtr[1] += g[1] * r;
    }
    lin.jtj[2] = lin.jtj[1];
    lin.jacobian_scale = std::sqrt(lin.jtj[0] + lin.jtj[3]);
    return lin;
}

double sse_at(std::span<const double> x, std::span<const double> y, const CurveModel2& model, const Params2& p) {
    double sse = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - model.value(x[i], p);
        sse += r * r;
    }
    return sse;
}

LeastSquaresResult make_result(const Params2& p, const Linearization& lin, int iterations,
                               std::vector<double> history) {
    LeastSquaresResult out;
    out.params = p;
    out.residuals = lin.residuals;
    out.sse = lin.sse;
    out.gradient_norm = std::hypot(lin.jtr[0], lin.jtr[1]);
    out.jtj = lin.jtj;
    out.iterations = iterations;
    out.sse_history = std::move(history);
    return out;
}

bool singular(const std::array<double, 4>& m) {
    const double det = m[0] * m[3] - m[1] * m[2];
    const double scale = std::max(std::abs(m[0] * m[3]), std::abs(m[1] * m[2]));
    return !(scale > 0.0) || std::abs(det) <= 1e-14 * scale;
}

}  // namespace

LeastSquaresResult damped_gauss_newton(std::span<const double> x, std::span<const double> y,
                                       const CurveModel2& model, Params2 p,
                                       const LeastSquaresOptions& options) {
    if (x.size() != y.size()) throw DomainError("least squares: x and y differ in length");
    if (x.size() < 2) throw DomainError("least squares: need at least two points");
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) throw DomainError("least squares: non-finite initial guess");

    Linearization lin = linearize(x, y, model, p);
    std::vector<double> history{lin.sse};
    if (singular(lin.jtj)) throw DegenerateFitError("least squares: singular normal equations at initial guess");

    double lambda = options.initial_damping;
    for (int it = 0; it < options.max_iterations; ++it) {
        const double grad = std::hypot(lin.jtr[0], lin.jtr[1]);
        if (grad < options.gradient_tolerance || lin.sse == 0.0) {
            return make_result(p, lin, it, std::move(history));
        }
        bool accepted = false;
        while (!accepted) {
            // Marquardt scaling: damp each diagonal by its own magnitude.
            const double a00 = lin.jtj[0] * (1.0 + lambda);
            const double a11 = lin.jtj[3] * (1.0 + lambda);
            const double a01 = lin.jtj[1];
            const double det = a00 * a11 - a01 * a01;
            if (!(std::abs(det) > 0.0)) throw DegenerateFitError("least squares: singular damped system");
            const Params2 step{(a11 * lin.jtr[0] - a01 * lin.jtr[1]) / det,
                               (a00 * lin.jtr[1] - a01 * lin.jtr[0]) / det};
            const Params2 trial{p[0] + step[0], p[1] + step[1]};
            const double trial_sse = sse_at(x, y, model, trial);
            if (std::isfinite(trial_sse) && trial_sse < lin.sse) {
                p = trial;
                lin = linearize(x, y, model, p);
                history.push_back(lin.sse);
                lambda = std::max(lambda / 10.0, 1e-15);
                accepted = true;
                if (singular(lin.jtj)) {
                    throw DegenerateFitError("least squares: normal equations became singular");
                }
            } else {
                lambda *= 10.0;
                if (lambda > 1e16) {
                    // No descent direction left at double precision.
                    const double rel = grad / std::max(lin.jacobian_scale * std::sqrt(lin.sse),
                                                       std::numeric_limits<double>::min());
                    auto result = make_result(p, lin, it, std::move(history));
                    if (rel < 1e-6) return result;
                    throw NonConvergenceError("least squares: damping saturated before convergence",
                                              std::move(result));
                }
            }
        }
    }
    const double grad = std::hypot(lin.jtr[0], lin.jtr[1]);
    auto result = make_result(p, lin, options.max_iterations, std::move(history));
    if (grad < options.gradient_tolerance) return result;
    throw NonConvergenceError("least squares: iteration cap " + std::to_string(options.max_iterations) +
                                  " reached (gradient norm " + std::to_string(grad) + ")",
                              std::move(result));
}

std::array<double, 4> parameter_covariance(const LeastSquaresResult& fit) {
    const std::size_t n = fit.residuals.size();
    if (n <= 2) throw DomainError("covariance: need more points than parameters");
    const auto& m = fit.jtj;
    const double det = m[0] * m[3] - m[1] * m[2];
    if (singular(m)) throw DegenerateFitError("covariance: singular J^T J");
    const double s2 = fit.sse / static_cast<double>(n - 2);
    return {s2 * m[3] / det, -s2 * m[1] / det, -s2 * m[2] / det, s2 * m[0] / det};
}

}  // namespace mdseq
