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

#include "mdseq/sequences.hpp"

#include <algorithm>
#include <cmath>

#include "mdseq/errors.hpp"

namespace mdseq {

std::string DyadPattern::to_string() const {
    return "{" + std::to_string(first) + "," + std::to_string(second) + "}";
}

void validate(const DyadPattern& pattern) {
    auto ok = [](std::uint32_t g) { return g == 1 || (g > 0 && g % 2 == 0); };
    if (!ok(pattern.first) || !ok(pattern.second)) {
        throw DomainError("dyad " + pattern.to_string() +
                          ": gaps must be positive and even (or the odd gap 1)");
    }
}

namespace {

void check_scan_args(const GapSequence& gaps, const DyadPattern& pattern, std::size_t prefix_length) {
    if (gaps.gaps.empty()) throw DomainError("scan_dyads: empty gap sequence");
    if (prefix_length > gaps.size()) {
        throw DomainError("scan_dyads: prefix_length " + std::to_string(prefix_length) +
                          " exceeds gap count " + std::to_string(gaps.size()));
    }
    validate(pattern);
}

}  // namespace

std::vector<std::size_t> scan_dyads(const GapSequence& gaps, const DyadPattern& pattern,
                                    std::size_t prefix_length) {
    check_scan_args(gaps, pattern, prefix_length);
    std::vector<std::size_t> out;
    const auto& g = gaps.gaps;
    for (std::size_t i = 0; i + 1 < prefix_length; ++i) {
        if (g[i] == pattern.first && g[i + 1] == pattern.second) out.push_back(i + 1);
    }
    return out;
}

DyadCounts count_dyad_conventions(const GapSequence& gaps, const DyadPattern& pattern,
                                  std::size_t prefix_length) {
    check_scan_args(gaps, pattern, prefix_length);
    DyadCounts c;
    const auto& g = gaps.gaps;
    std::size_t next_free = 0;
    for (std::size_t i = 0; i + 1 < prefix_length; ++i) {
        const bool fwd = g[i] == pattern.first && g[i + 1] == pattern.second;
        const bool rev = g[i] == pattern.second && g[i + 1] == pattern.first;
        c.ordered += fwd;
        c.reversed += rev;
        c.unordered += (fwd || rev);
        if (fwd && i >= next_free) {
            ++c.non_overlapping;
            next_free = i + 2;
        }
    }
    return c;
}

std::size_t count_dyads(const GapSequence& gaps, const DyadPattern& pattern,
                        std::size_t prefix_length, DyadConvention convention) {
    const DyadCounts c = count_dyad_conventions(gaps, pattern, prefix_length);
    return convention == DyadConvention::ordered ? c.ordered : c.unordered;
}

MetaDistanceSequence meta_distances(std::span<const std::size_t> occurrences,
                                    const DyadPattern& pattern, std::string provenance) {
    MetaDistanceSequence md;
    md.pattern = pattern;
    md.provenance = std::move(provenance);
    md.occurrence_indices.assign(occurrences.begin(), occurrences.end());
    if (occurrences.size() < 2) return md;
    md.values.reserve(occurrences.size() - 1);
    for (std::size_t j = 0; j + 1 < occurrences.size(); ++j) {
        if (occurrences[j + 1] <= occurrences[j]) {
            throw DomainError("meta_distances: occurrences not strictly increasing at position " +
                              std::to_string(j + 1));
        }
        md.values.push_back(static_cast<std::int64_t>(occurrences[j + 1] - occurrences[j]));
    }
    return md;
}

MetaDistanceSequence build_meta_distances(const GapSequence& gaps, const DyadPattern& pattern,
                                          std::size_t prefix_length) {
    const auto occ = scan_dyads(gaps, pattern, prefix_length);
    std::string provenance = "dyad " + pattern.to_string() + ", ordered overlapping scan of the first " +
                             std::to_string(prefix_length) + " gaps of primes <= " +
                             std::to_string(gaps.source.limit);
    return meta_distances(occ, pattern, std::move(provenance));
}

std::string to_string(Normalization mode) {
    switch (mode) {
        case Normalization::max_scale: return "max_scale";
        case Normalization::digit_rule: return "digit_rule";
        case Normalization::fractional_part: return "fractional_part";
        case Normalization::none: return "none";
    }
    return "unknown";
}

UnitSequence::UnitSequence(std::vector<double> values, double range_max, std::string label,
                           Normalization normalization)
    : values_(std::move(values)),
      range_max_(range_max),
      label_(std::move(label)),
      normalization_(normalization) {
    if (label_.empty()) throw DomainError("UnitSequence: label must be nonempty");
    if (!(range_max_ > 0.0) || !std::isfinite(range_max_)) {
        throw DomainError("UnitSequence: range_max must be positive and finite");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!(v >= 0.0 && v <= range_max_)) {
            throw DomainError("UnitSequence '" + label_ + "': value at " + std::to_string(i) +
                              " outside [0, " + std::to_string(range_max_) + "]");
        }
    }
}

UnitSequence UnitSequence::prefix(std::size_t count) const {
    const std::size_t n = std::min(count, values_.size());
    return UnitSequence(std::vector<double>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n)),
                        range_max_, label_, normalization_);
}

UnitSequence normalize(std::span<const double> values, Normalization mode, std::string label) {
    if (values.empty()) throw DomainError("normalize: empty input");
    std::vector<double> out(values.begin(), values.end());
    for (double v : out) {
        if (!std::isfinite(v)) throw DomainError("normalize: non-finite value");
    }
    switch (mode) {
        case Normalization::max_scale: {
            if (*std::min_element(out.begin(), out.end()) < 0.0) {
                throw DomainError("normalize(max_scale): negative value");
            }
            const double max = *std::max_element(out.begin(), out.end());
            if (max == 0.0) throw DomainError("normalize(max_scale): maximum is zero");
            for (double& v : out) v /= max;
            return UnitSequence(std::move(out), 1.0, std::move(label), mode);
        }
        case Normalization::digit_rule:
            for (double& v : out) {
                if (!(v >= 0.0 && v <= 9.0) || v != std::floor(v)) {
                    throw DomainError("normalize(digit_rule): value is not a decimal digit");
                }
                v = v / 9.0 * 2.0;
            }
            return UnitSequence(std::move(out), 2.0, std::move(label), mode);
        case Normalization::fractional_part:
            for (double& v : out) v -= std::floor(v);
            return UnitSequence(std::move(out), 1.0, std::move(label), mode);
        case Normalization::none:
            return UnitSequence(std::move(out), 1.0, std::move(label), mode);
    }
    throw DomainError("normalize: unknown mode");
}

UnitSequence normalize(const MetaDistanceSequence& md, Normalization mode) {
    std::vector<double> v(md.values.begin(), md.values.end());
    return normalize(v, mode, "Md" + md.pattern.to_string());
}

}  // namespace mdseq
