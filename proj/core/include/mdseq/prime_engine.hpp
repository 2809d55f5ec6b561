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
#include <map>
#include <vector>

namespace mdseq {

/// All primes up to `limit`, increasing.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    std::size_t count() const { return primes.size(); }
};

/// Consecutive prime differences: gaps[i] = primes[i + 1] - primes[i].
///
/// When the table starts at 2 the first gap is the unique odd gap 1 and
/// every later gap is even.
struct GapSequence {
    struct Source {
        std::uint64_t limit = 0;
        std::size_t prime_count = 0;
        std::uint64_t first_prime = 0;
    };

    std::vector<std::uint32_t> gaps;
    Source source;

    std::size_t size() const { return gaps.size(); }
};

struct JumpingChampion {
    std::uint32_t champion = 0;
    std::map<std::uint32_t, std::size_t> histogram;
};

/// Segmented, odd-only sieve of Eratosthenes. Throws DomainError for
/// limit < 2.
PrimeTable sieve_primes(std::uint64_t limit);

/// Throws DomainError when the table holds fewer than two primes.
GapSequence prime_gaps(const PrimeTable& table);

/// The most frequent gap among the first `prefix_length` gaps (the mode).
///
/// Jumping champions are usually written as a max over gaps, but the
/// quantity is the *most frequent* difference, so this returns the mode.
/// Ties go to the smallest gap; the histogram exposes them.
JumpingChampion jumping_champion(const GapSequence& gaps, std::size_t prefix_length);

}  // namespace mdseq
