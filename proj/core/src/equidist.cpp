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

#include "mdseq/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "mdseq/errors.hpp"
#include "mdseq/least_squares.hpp"
#include "mdseq/numeric.hpp"

namespace mdseq {

namespace {

void require_unit_interval(const UnitSequence& seq, const char* who) {
    if (seq.range_max() != 1.0) {
        throw DomainError(std::string(who) + ": sequence '" + seq.label() + "' is not normalized to [0, 1]");
    }
}

std::optional<double> published_expected(double size) {
    for (double s : kCoverageSizes) {
        if (std::abs(s - size) < 1e-12) return s;
    }
    return std::nullopt;
}

/// Distinct fractional parts with multiplicities, in increasing order.
struct PhaseTable {
    std::vector<double> values;
    std::vector<double> weights;
};

PhaseTable phase_table(const UnitSequence& seq) {
    std::vector<double> frac(seq.values().begin(), seq.values().end());
    for (double& v : frac) {
        v -= std::floor(v);
        if (v >= 1.0) v = 0.0;
    }
    std::sort(frac.begin(), frac.end());
    PhaseTable t;
    for (double v : frac) {
        if (!t.values.empty() && t.values.back() == v) {
            t.weights.back() += 1.0;
        } else {
            t.values.push_back(v);
            t.weights.push_back(1.0);
        }
    }
    return t;
}

/// k v mod 1 with the rounding error of the product folded back in via fma.
double phase_mod1(double k, double v) {
    const double p = k * v;
    const double err = std::fma(k, v, -p);
    double f = (p - std::floor(p)) + err;
    f -= std::floor(f);
    return f;
}

double weyl_abs(const PhaseTable& t, std::size_t k, std::vector<std::complex<double>>& scratch) {
    scratch.resize(t.values.size());
    const double kd = static_cast<double>(k);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        const double angle = 2.0 * std::numbers::pi * phase_mod1(kd, t.values[i]);
        scratch[i] = {t.weights[i] * std::cos(angle), t.weights[i] * std::sin(angle)};
    }
    return std::abs(pairwise_sum(std::span<const std::complex<double>>(scratch)));
}

}  // namespace

CoverageReport well_distributed_test(const UnitSequence& seq, double size, std::size_t offset_j) {
    require_unit_interval(seq, "coverage test");
    if (!(size > 0.0 && size <= 0.5)) throw DomainError("coverage test: size must lie in (0, 0.5]");
    if (offset_j < 1) throw DomainError("coverage test: offset must be >= 1");
    if (seq.size() < 2 || seq.size() <= offset_j) {
        throw DomainError("coverage test: sequence shorter than offset + 1");
    }
    const auto v = seq.values();
    std::size_t hits = 0;
    for (std::size_t k = 0; k + offset_j < v.size(); ++k) {
        const double d = std::abs(v[k + offset_j] - v[k]);
        hits += (d >= size && d <= 2.0 * size);
    }
    CoverageReport r;
    r.size = size;
    r.offset_j = offset_j;
    r.sample_count = v.size();
    r.measured_fraction = static_cast<double>(hits) / static_cast<double>(v.size());
    r.expected_published = published_expected(size);
    r.analytic_uniform = 2.0 * size - 3.0 * size * size;
    return r;
}

CoverageReport interval_coverage_test(const UnitSequence& seq, double size) {
    return well_distributed_test(seq, size, 1);
}

double weyl_sum(const UnitSequence& seq, std::size_t k) {
    if (seq.empty()) throw DomainError("weyl_sum: empty sequence");
    if (k < 1) throw DomainError("weyl_sum: k must be >= 1");
    std::vector<std::complex<double>> scratch;
    return weyl_abs(phase_table(seq), k, scratch);
}

DiscrepancyReport erdos_turan_bound(const UnitSequence& seq, std::size_t n_max, double constant_C) {
    if (seq.empty()) throw DomainError("erdos_turan_bound: empty sequence");
    if (n_max < 1) throw DomainError("erdos_turan_bound: n_max must be >= 1");
    if (!(constant_C > 0.0)) throw DomainError("erdos_turan_bound: constant C must be positive");

    DiscrepancyReport r;
    r.m = seq.size();
    r.n_max = n_max;
    r.constant_C = constant_C;
    r.weyl_sums.resize(n_max);
    r.partial_bounds.resize(n_max);

    const PhaseTable table = phase_table(seq);
    parallel_for_blocks(n_max, [&](std::size_t begin, std::size_t end) {
        std::vector<std::complex<double>> scratch;
        for (std::size_t i = begin; i < end; ++i) r.weyl_sums[i] = weyl_abs(table, i + 1, scratch);
    });

    const double m = static_cast<double>(r.m);
    CompensatedSum acc;
    for (std::size_t i = 0; i < n_max; ++i) {
        const double k = static_cast<double>(i + 1);
        acc.add(r.weyl_sums[i] / k);
        r.partial_bounds[i] = constant_C * (1.0 / k + acc.value() / m);
    }
    r.supremum_bound = *std::max_element(r.partial_bounds.begin(), r.partial_bounds.end());
    return r;
}

double star_discrepancy_exact(const UnitSequence& seq) {
    if (seq.empty()) throw DomainError("star_discrepancy_exact: empty sequence");
    require_unit_interval(seq, "star_discrepancy_exact");
    std::vector<double> x(seq.values().begin(), seq.values().end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double upper = static_cast<double>(i + 1) / n - x[i];
        const double lower = x[i] - static_cast<double>(i) / n;
        d = std::max({d, upper, lower});
    }
    return d;
}

std::vector<IndexRange> default_fit_segments(std::size_t count) {
    std::vector<IndexRange> out;
    const std::size_t end = count + 1;  // exclusive, 1-based
    std::size_t first = 1;
    std::size_t last = 4;
    while (first < end) {
        out.push_back({first, std::min(last, end)});
        first = last;
        last *= 2;
    }
    if (out.size() >= 2 && out.back().last - out.back().first < 3) {
        out[out.size() - 2].last = out.back().last;
        out.pop_back();
    }
    return out;
}

PowerLawFit fit_power_law(std::span<const double> differences, IndexRange range) {
    if (range.first < 1 || range.last > differences.size() + 1 || range.last < range.first + 2) {
        throw DomainError("fit_power_law: degenerate segment [" + std::to_string(range.first) + ", " +
                          std::to_string(range.last) + ")");
    }
    const std::size_t n = range.last - range.first;
    std::vector<double> x(n), y(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>(range.first + i);
        y[i] = differences[range.first + i - 1];
        scale = std::max(scale, std::abs(y[i]));
    }
    if (scale == 0.0) return {0.0, 0.0, range};
    for (double& v : y) v /= scale;

    // Start from a log-log regression over the positive points.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] <= 0.0) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; cnt += 1;
    }
    Params2 init{pairwise_sum(y) / static_cast<double>(n), 0.0};
    if (cnt >= 2 && cnt * sxx - sx * sx > 0.0) {
        const double b = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        init = {std::exp((sy - b * sx) / cnt), b};
    }

    const CurveModel2 model{
        [](double xv, const Params2& p) { return p[0] * std::pow(xv, p[1]); },
        [](double xv, const Params2& p) {
            const double xb = std::pow(xv, p[1]);
            return Params2{xb, p[0] * xb * std::log(xv)};
        }};
    LeastSquaresResult fit;
    try {
        fit = damped_gauss_newton(x, y, model, init, {.gradient_tolerance = 1e-12, .max_iterations = 500});
    } catch (const NonConvergenceError& e) {
        fit = e.best();
    } catch (const DegenerateFitError&) {
        fit.params = init;
    }
    return {fit.params[0] * scale, fit.params[1], range};
}

CauchyReport convergence_analysis_of_differences(std::vector<double> differences, double epsilon,
                                                 std::vector<IndexRange> segments) {
    if (differences.size() < 2) throw DomainError("convergence_analysis: too few points");
    if (!(epsilon > 0.0)) throw DomainError("convergence_analysis: epsilon must be positive");
    if (segments.empty()) segments = default_fit_segments(differences.size());

    CauchyReport r;
    r.epsilon = epsilon;
    r.differences = std::move(differences);
    const std::size_t count = r.differences.size();
    r.fitted.assign(count, 0.0);
    std::vector<bool> covered(count, false);
    for (const IndexRange& seg : segments) {
        const PowerLawFit fit = fit_power_law(r.differences, seg);
        r.fit_segments.push_back(fit);
        for (std::size_t n = seg.first; n < seg.last; ++n) {
            r.fitted[n - 1] = fit.a * std::pow(static_cast<double>(n), fit.b);
            covered[n - 1] = true;
        }
    }
    r.residuals.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Outside every segment there is no model; the residual is the raw difference.
        r.residuals[i] = covered[i] ? r.differences[i] - r.fitted[i] : r.differences[i];
    }
    auto inside = [&](std::size_t i) {
        return std::abs(r.differences[i]) < epsilon && std::abs(r.residuals[i]) < epsilon;
    };
    std::size_t i = count;
    while (i > 0 && inside(i - 1)) --i;
    if (i < count) r.tube_entry_index = i + 1;
    return r;
}

CauchyReport convergence_analysis(const DiscrepancyReport& report, double epsilon,
                                  std::vector<IndexRange> segments) {
    if (report.partial_bounds.size() < 3) throw DomainError("convergence_analysis: need >= 3 partial bounds");
    std::vector<double> diffs(report.partial_bounds.size() - 1);
    for (std::size_t i = 0; i + 1 < report.partial_bounds.size(); ++i) {
        diffs[i] = report.partial_bounds[i + 1] - report.partial_bounds[i];
    }
    return convergence_analysis_of_differences(std::move(diffs), epsilon, std::move(segments));
}

}  // namespace mdseq
