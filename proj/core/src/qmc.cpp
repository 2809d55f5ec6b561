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

#include "mdseq/qmc.hpp"

#include <algorithm>
#include <cmath>

#include "mdseq/errors.hpp"
#include "mdseq/numeric.hpp"

namespace mdseq {

std::string to_string(IntegrandFamily family) {
    switch (family) {
        case IntegrandFamily::multiplicative: return "multiplicative";
        case IntegrandFamily::additive: return "additive";
        case IntegrandFamily::mixed: return "mixed";
    }
    return "unknown";
}

IntegrandFamily parse_family(std::string_view text) {
    if (text == "multiplicative") return IntegrandFamily::multiplicative;
    if (text == "additive") return IntegrandFamily::additive;
    if (text == "mixed") return IntegrandFamily::mixed;
    throw DomainError("unknown integrand family '" + std::string(text) + "'");
}

double Integrand::volume() const {
    double v = 1.0;
    for (const Bounds& b : domain) v *= b.width();
    return v;
}

void validate(const Integrand& f) {
    if (f.dimension < 1 || f.dimension > 4) throw DomainError("integrand '" + f.label + "': dimension must be 1..4");
    if (f.domain.size() != f.dimension) throw DomainError("integrand '" + f.label + "': domain/dimension mismatch");
    for (const Bounds& b : f.domain) {
        if (!(b.upper > b.lower) || !std::isfinite(b.lower) || !std::isfinite(b.upper)) {
            throw DomainError("integrand '" + f.label + "': empty or non-finite axis interval");
        }
    }
    if (!f.evaluator) throw DomainError("integrand '" + f.label + "': no evaluator");
    if (!std::isfinite(f.reference_value)) throw DomainError("integrand '" + f.label + "': non-finite reference");
}

NodeSet::NodeSet(std::size_t dimension, std::vector<double> coordinates)
    : dimension_(dimension), coordinates_(std::move(coordinates)) {
    if (dimension_ == 0) throw DomainError("NodeSet: dimension must be positive");
    if (coordinates_.size() % dimension_ != 0) throw DomainError("NodeSet: ragged coordinates");
}

NodeSet make_nodes(const UnitSequence& seq, std::size_t dimension, std::size_t count) {
    if (dimension < 1) throw DomainError("make_nodes: dimension must be >= 1");
    const std::size_t required = dimension * count;
    if (seq.size() < required) {
        throw DomainError("make_nodes: sequence '" + seq.label() + "' has " + std::to_string(seq.size()) +
                          " values, " + std::to_string(count) + " nodes in dimension " +
                          std::to_string(dimension) + " need " + std::to_string(required));
    }
    std::vector<double> coords(seq.values().begin(), seq.values().begin() + static_cast<std::ptrdiff_t>(required));
    const double scale = seq.range_max();
    if (scale != 1.0) {
        for (double& c : coords) c /= scale;
    }
    return NodeSet(dimension, std::move(coords));
}

double relative_error(double estimate, double reference) {
    return std::abs(estimate - reference) / std::max(std::abs(reference), kRelativeErrorFloor);
}

namespace {

/// Integrand values at every node, mapped onto the domain.
std::vector<double> evaluate_all(const Integrand& f, const NodeSet& nodes) {
    std::vector<double> values(nodes.size());
    std::vector<double> x(f.dimension);
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        const auto u = nodes.node(t);
        for (std::size_t i = 0; i < f.dimension; ++i) {
            x[i] = f.domain[i].lower + f.domain[i].width() * u[i];
        }
        const double y = f.evaluator(x);
        if (!std::isfinite(y)) {
            std::string where;
            for (double c : x) where += (where.empty() ? "" : ", ") + format_double(c);
            throw ComputationError("integrand '" + f.label + "' is non-finite at node " + std::to_string(t) +
                                   " (" + where + ")");
        }
        values[t] = y;
    }
    return values;
}

std::vector<std::size_t> checkpoints(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t c = 1; c < n; c *= 2) out.push_back(c);
    out.push_back(n);
    return out;
}

IntegrationResult summarize(const Integrand& f, std::span<const double> values) {
    const double volume = f.volume();
    IntegrationResult r;
    r.reference = f.reference_value;
    r.nodes_used = values.size();
    for (std::size_t n : checkpoints(values.size())) {
        const double mean = pairwise_sum(values.first(n)) / static_cast<double>(n);
        r.trace.push_back({n, volume * mean});
    }
    r.estimate = r.trace.back().estimate;
    r.relative_error = relative_error(r.estimate, r.reference);
    return r;
}

}  // namespace

IntegrationResult qmc_integrate(const Integrand& f, const NodeSet& nodes) {
    validate(f);
    if (nodes.size() == 0) throw DomainError("qmc_integrate: no nodes");
    if (nodes.dimension() != f.dimension) throw DomainError("qmc_integrate: node/integrand dimension mismatch");
    return summarize(f, evaluate_all(f, nodes));
}

IntegrationResult convergence_trace(const Integrand& f, const UnitSequence& seq, std::size_t budget,
                                    double tolerance) {
    validate(f);
    if (budget < 1) throw DomainError("convergence_trace: budget must be >= 1");
    const std::size_t count = std::min(budget, seq.size() / f.dimension);
    if (count == 0) {
        throw DomainError("convergence_trace: sequence '" + seq.label() + "' shorter than dimension " +
                          std::to_string(f.dimension));
    }
    const std::vector<double> values = evaluate_all(f, make_nodes(seq, f.dimension, count));
    IntegrationResult r = summarize(f, values);

    // The running mean at every n decides converged_at.
    const double volume = f.volume();
    CompensatedSum running;
    for (std::size_t n = 1; n <= values.size(); ++n) {
        running.add(values[n - 1]);
        if (relative_error(volume * running.value() / static_cast<double>(n), r.reference) <= tolerance) {
            r.converged_at = n;
            break;
        }
    }

    std::vector<double> ratios;
    for (std::size_t t = 0; t + 1 < r.trace.size(); ++t) {
        const double e0 = std::abs(r.trace[t].estimate - r.reference);
        const double e1 = std::abs(r.trace[t + 1].estimate - r.reference);
        if (e0 > 0.0) ratios.push_back(e1 / e0);
    }
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        r.linear_ratio = sorted_quantile(ratios, 0.5);
    }
    return r;
}

std::optional<double> BatteryTable::multiplicative_advantage(std::string_view sequence) const {
    std::optional<double> mult, add;
    for (const FamilyMean& m : family_means) {
        if (m.sequence != sequence) continue;
        if (m.family == IntegrandFamily::multiplicative) mult = m.mean_relative_error;
        if (m.family == IntegrandFamily::additive) add = m.mean_relative_error;
    }
    if (!mult || !add) return std::nullopt;
    return *add - *mult;
}

BatteryTable kernel_battery(std::span<const UnitSequence> sequences, std::span<const Integrand> battery,
                            std::size_t budget, double tolerance) {
    if (sequences.empty() || battery.empty()) throw DomainError("kernel_battery: empty sequences or battery");
    BatteryTable table;
    for (const UnitSequence& seq : sequences) {
        for (const Integrand& f : battery) {
            const IntegrationResult r = convergence_trace(f, seq, budget, tolerance);
            table.rows.push_back({seq.label(), f.label, f.family, f.dimension, r.nodes_used, r.estimate,
                                  r.reference, r.relative_error, r.converged_at});
        }
        for (IntegrandFamily fam :
             {IntegrandFamily::multiplicative, IntegrandFamily::additive, IntegrandFamily::mixed}) {
            std::vector<double> errs;
            for (const BatteryRow& row : table.rows) {
                if (row.sequence == seq.label() && row.family == fam) errs.push_back(row.relative_error);
            }
            if (errs.empty()) continue;
            table.family_means.push_back(
                {seq.label(), fam, pairwise_sum(errs) / static_cast<double>(errs.size()), errs.size()});
        }
    }
    return table;
}

}  // namespace mdseq
