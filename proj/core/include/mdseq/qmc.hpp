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
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdseq/sequences.hpp"

namespace mdseq {

enum class IntegrandFamily { multiplicative, additive, mixed };

std::string to_string(IntegrandFamily family);
IntegrandFamily parse_family(std::string_view text);

struct Bounds {
    double lower = 0.0;
    double upper = 1.0;

    double width() const { return upper - lower; }
};

struct Integrand {
    std::size_t dimension = 1;
    std::vector<Bounds> domain;
    std::function<double(std::span<const double>)> evaluator;
    IntegrandFamily family = IntegrandFamily::multiplicative;
    double reference_value = 0.0;
    std::string label;

    double volume() const;
};

/// Throws DomainError unless 1 <= dimension <= 4, the domain has one
/// nonempty interval per axis, the evaluator is set and the reference is
/// finite.
void validate(const Integrand& f);

/// Quadrature nodes in the unit cube, row-major.
class NodeSet {
public:
    NodeSet(std::size_t dimension, std::vector<double> coordinates);

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return coordinates_.size() / dimension_; }
    std::span<const double> node(std::size_t t) const {
        return std::span<const double>(coordinates_).subspan(t * dimension_, dimension_);
    }

private:
    std::size_t dimension_;
    std::vector<double> coordinates_;
};

/// Node t is the t-th non-overlapping block of `dimension` consecutive
/// values, each divided by the sequence's range_max. Throws DomainError
/// naming the required length when the sequence is too short.
NodeSet make_nodes(const UnitSequence& seq, std::size_t dimension, std::size_t count);

/// Floor applied to |reference| in relative errors.
inline constexpr double kRelativeErrorFloor = 1e-12;

double relative_error(double estimate, double reference);

struct TracePoint {
    std::size_t n = 0;
    double estimate = 0.0;
};

struct IntegrationResult {
    double estimate = 0.0;
    double reference = 0.0;
    double relative_error = 0.0;
    std::size_t nodes_used = 0;
    std::vector<TracePoint> trace;  ///< n = 1, 2, 4, ..., and nodes_used
    std::optional<std::size_t> converged_at;
    std::optional<double> linear_ratio;
};

/// volume(domain) * mean of f over the nodes mapped affinely onto the domain.
/// Throws ComputationError naming the node if f returns a non-finite value.
IntegrationResult qmc_integrate(const Integrand& f, const NodeSet& nodes);

/// Integrates with as many nodes as the budget (integrand evaluations) and
/// the sequence length allow. converged_at is the first n whose running
/// estimate has relative error <= tolerance; linear_ratio is the median of
/// e(n_{t+1}) / e(n_t) over consecutive trace checkpoints with e(n_t) > 0.
IntegrationResult convergence_trace(const Integrand& f, const UnitSequence& seq, std::size_t budget,
                                    double tolerance);

/// Closed-form factor integrands used by the default battery.
enum class FactorKind { cosine, exp_neg, identity };

std::string to_string(FactorKind kind);
FactorKind parse_factor_kind(std::string_view text);

/// prod g(x_i) (multiplicative), sum g(x_i) (additive) or their sum (mixed),
/// with the exact reference over `domain` filled in.
Integrand make_factor_integrand(FactorKind kind, IntegrandFamily family, std::vector<Bounds> domain,
                                std::string label = {});

/// {prod, sum} x {cos, exp(-x), x} for dimensions 1..4 on the unit cube.
std::vector<Integrand> default_battery();

/// Battery file: CSV with header "name,family,kind,dimension,bounds,reference".
/// bounds is "lo:hi" per axis joined by '|' (a single pair is broadcast);
/// an empty reference selects the closed form. ParseError offsets are
/// 1-based line numbers.
std::vector<Integrand> parse_battery(std::string_view text);
std::vector<Integrand> load_battery(const std::filesystem::path& path);

/// Throws DomainError unless every dimension 1..4 has at least one
/// multiplicative and one additive integrand.
void require_family_coverage(std::span<const Integrand> battery);

struct BatteryRow {
    std::string sequence;
    std::string integrand;
    IntegrandFamily family = IntegrandFamily::multiplicative;
    std::size_t dimension = 1;
    std::size_t n = 0;
    double estimate = 0.0;
    double reference = 0.0;
    double relative_error = 0.0;
    std::optional<std::size_t> converged_at;
};

struct FamilyMean {
    std::string sequence;
    IntegrandFamily family = IntegrandFamily::multiplicative;
    double mean_relative_error = 0.0;
    std::size_t count = 0;
};

struct BatteryTable {
    std::vector<BatteryRow> rows;  ///< sequence-major, battery order within
    std::vector<FamilyMean> family_means;

    /// mean(additive) - mean(multiplicative) for one sequence; positive when
    /// the multiplicative integrands were integrated more accurately.
    std::optional<double> multiplicative_advantage(std::string_view sequence) const;
};

BatteryTable kernel_battery(std::span<const UnitSequence> sequences, std::span<const Integrand> battery,
                            std::size_t budget, double tolerance = 0.15);

}  // namespace mdseq
