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

#include "mdseq/prime_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdseq/errors.hpp"

namespace mdseq {

namespace {

constexpr std::uint64_t kSegmentSpan = 1u << 18;  // odd numbers per segment

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

PrimeTable sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw DomainError("sieve_primes: limit must be >= 2, got " + std::to_string(limit));

    PrimeTable table;
    table.limit = limit;
    table.primes.reserve(static_cast<std::size_t>(1.1 * limit / std::max(1.0, std::log(double(limit)))) + 16);
    table.primes.push_back(2);

    const std::uint64_t root = isqrt(limit);
    std::vector<std::uint64_t> base;
    for (std::uint64_t p : small_primes(root)) {
        if (p != 2) base.push_back(p);
    }
    // next[i]: next odd multiple of base[i] still to be crossed off.
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

    std::vector<char> segment(kSegmentSpan);
    // Segment covers odd numbers low, low + 2, ..., low + 2 * (span - 1).
    for (std::uint64_t low = 3; low <= limit; low += 2 * kSegmentSpan) {
        const std::uint64_t high = std::min(limit, low + 2 * (kSegmentSpan - 1));
        const std::uint64_t slots = (high - low) / 2 + 1;
        std::fill(segment.begin(), segment.begin() + static_cast<std::ptrdiff_t>(slots), char{1});
        for (std::size_t i = 0; i < base.size(); ++i) {
            const std::uint64_t p = base[i];
            std::uint64_t m = next[i];
            for (; m <= high; m += 2 * p) segment[(m - low) / 2] = 0;
            next[i] = m;
        }
        for (std::uint64_t s = 0; s < slots; ++s) {
            if (segment[s]) table.primes.push_back(low + 2 * s);
        }
    }
    return table;
}

GapSequence prime_gaps(const PrimeTable& table) {
    if (table.count() < 2) throw DomainError("prime_gaps: need at least two primes");
    GapSequence out;
    out.source = {table.limit, table.count(), table.primes.front()};
    out.gaps.resize(table.count() - 1);
    for (std::size_t i = 0; i + 1 < table.count(); ++i) {
        out.gaps[i] = static_cast<std::uint32_t>(table.primes[i + 1] - table.primes[i]);
    }
    return out;
}

JumpingChampion jumping_champion(const GapSequence& gaps, std::size_t prefix_length) {
    if (prefix_length < 1 || prefix_length > gaps.size()) {
        throw DomainError("jumping_champion: prefix_length " + std::to_string(prefix_length) +
                          " outside [1, " + std::to_string(gaps.size()) + "]");
    }
    JumpingChampion out;
    for (std::size_t i = 0; i < prefix_length; ++i) ++out.histogram[gaps.gaps[i]];
    std::size_t best = 0;
    // std::map iterates in increasing gap order, so strict '>' keeps the smallest tie.
    for (const auto& [gap, count] : out.histogram) {
        if (count > best) {
            best = count;
            out.champion = gap;
        }
    }
    return out;
}

}  // namespace mdseq
