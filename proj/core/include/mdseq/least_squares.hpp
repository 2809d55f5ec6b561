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
#include <functional>
#include <span>
#include <vector>

#include "mdseq/errors.hpp"

namespace mdseq {

using Params2 = std::array<double, 2>;

/// Two-parameter curve y = f(x; p) with its analytic gradient in p.
struct CurveModel2 {
    std::function<double(double x, const Params2& p)> value;
    std::function<Params2(double x, const Params2& p)> gradient;
};

struct LeastSquaresOptions {
    double gradient_tolerance = 1e-10;  ///< stop when |J^T r| < this
    int max_iterations = 500;
    double initial_damping = 1e-3;
};

struct LeastSquaresResult {
    Params2 params{};
    std::vector<double> residuals;  ///< y - f(x; params)
    double sse = 0.0;
    double gradient_norm = 0.0;
    std::array<double, 4> jtj{};  ///< row-major J^T J at params
    int iterations = 0;
    /// SSE after the initial guess and after each accepted step.
    std::vector<double> sse_history;
};

/// Normal equations became singular; fitting cannot proceed.
class DegenerateFitError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Iteration cap reached before the gradient tolerance; carries the best
/// parameters found so far.
class NonConvergenceError : public ComputationError {
public:
    NonConvergenceError(const std::string& what, LeastSquaresResult best)
        : ComputationError(what), best_(std::move(best)) {}

    const LeastSquaresResult& best() const noexcept { return best_; }

private:
    LeastSquaresResult best_;
};

/// Damped Gauss-Newton (Levenberg-Marquardt) on sum of squared residuals.
///
/// A step is accepted only if it lowers the SSE, so sse_history is
/// non-increasing. When the damping saturates without progress the fit is
/// at a numerical minimum; it is reported as converged if the gradient is
/// below 1e-6 relative to |J| |r|, otherwise NonConvergenceError.
LeastSquaresResult damped_gauss_newton(std::span<const double> x, std::span<const double> y,
                                       const CurveModel2& model, Params2 initial,
                                       const LeastSquaresOptions& options = {});

/// (J^T J)^-1 scaled by the residual variance SSE / (n - 2), row-major.
std::array<double, 4> parameter_covariance(const LeastSquaresResult& fit);

}  // namespace mdseq
