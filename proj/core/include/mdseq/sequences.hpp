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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mdseq/prime_engine.hpp"

namespace mdseq {

/// Ordered pair of consecutive prime gaps, e.g. (6, 6).
struct DyadPattern {
    std::uint32_t first = 0;
    std::uint32_t second = 0;

    DyadPattern reversed() const { return {second, first}; }
    std::string to_string() const;

    friend bool operator==(const DyadPattern&, const DyadPattern&) = default;
};

/// Throws DomainError unless both gaps are positive and each is even or the
/// unique odd gap 1.
void validate(const DyadPattern& pattern);

/// How a dyad written {a, b} is matched against the gap stream.
enum class DyadConvention {
    ordered,    ///< (gaps[i], gaps[i+1]) == (a, b)
    unordered,  ///< count of (a, b) plus count of (b, a); (a, a) counted once
};

/// Convention used for every reported dyad count. Ordered scanning over the
/// first 10^6 gaps yields 17,547 {6,6} and 15,861 {4,6} occurrences.
inline constexpr DyadConvention kDyadConvention = DyadConvention::ordered;

/// Number of leading gaps scanned by default: the gaps between the first
/// 1,000,001 primes.
inline constexpr std::size_t kDefaultGapPrefix = 1'000'000;

/// 1-based indices i in [1, prefix_length - 1] with
/// (gaps[i], gaps[i+1]) == (pattern.first, pattern.second). Overlapping
/// occurrences are all reported.
std::vector<std::size_t> scan_dyads(const GapSequence& gaps, const DyadPattern& pattern,
                                    std::size_t prefix_length);

struct DyadCounts {
    std::size_t ordered = 0;          ///< (a, b)
    std::size_t reversed = 0;         ///< (b, a)
    std::size_t unordered = 0;        ///< union of both orders
    std::size_t non_overlapping = 0;  ///< ordered, greedy left-to-right, no shared gap
};

/// Counts under every convention we know of, for reproduction reports.
DyadCounts count_dyad_conventions(const GapSequence& gaps, const DyadPattern& pattern,
                                  std::size_t prefix_length);

std::size_t count_dyads(const GapSequence& gaps, const DyadPattern& pattern,
                        std::size_t prefix_length, DyadConvention convention = kDyadConvention);

struct MetaDistanceSequence {
    DyadPattern pattern;
    std::vector<std::size_t> occurrence_indices;
    /// values[j] = occurrence_indices[j + 1] - occurrence_indices[j]
    std::vector<std::int64_t> values;
    std::string provenance;
};

/// First differences of strictly increasing occurrence indices. Throws
/// DomainError on non-monotone input.
MetaDistanceSequence meta_distances(std::span<const std::size_t> occurrences,
                                    const DyadPattern& pattern, std::string provenance = {});

/// Convenience: scan `prefix_length` gaps for `pattern` and return its
/// meta-distances with provenance filled in.
MetaDistanceSequence build_meta_distances(const GapSequence& gaps, const DyadPattern& pattern,
                                          std::size_t prefix_length);

enum class Normalization {
    max_scale,        ///< v / max(v), range [0, 1]
    digit_rule,       ///< 2 v / 9 for decimal digits, range [0, 2]
    fractional_part,  ///< v mod 1, range [0, 1)
    none,             ///< already in [0, range_max]
};

std::string to_string(Normalization mode);

/// A sequence of reals in [0, range_max]; the common input of every test and
/// integrator. Immutable after construction.
class UnitSequence {
public:
    /// Validates the range invariant; throws DomainError on violation.
    UnitSequence(std::vector<double> values, double range_max, std::string label,
                 Normalization normalization);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double range_max() const { return range_max_; }
    const std::string& label() const { return label_; }
    Normalization normalization() const { return normalization_; }

    /// The first `count` values (all if count >= size()).
    UnitSequence prefix(std::size_t count) const;

private:
    std::vector<double> values_;
    double range_max_;
    std::string label_;
    Normalization normalization_;
};

/// Throws DomainError on empty input, a zero maximum under max_scale,
/// negative values, or non-digit values under digit_rule.
UnitSequence normalize(std::span<const double> values, Normalization mode, std::string label);

UnitSequence normalize(const MetaDistanceSequence& md, Normalization mode = Normalization::max_scale);

}  // namespace mdseq
