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
#include <string>
#include <string_view>
#include <vector>

#include "mdseq/sequences.hpp"

namespace mdseq {

/// Marsaglia-Zaman subtract-with-borrow state:
///   x_n = (x_{n-s} - x_{n-r} - c) mod base,  c = 1 iff the difference
///   went negative.
///
/// Default parameters are r = 43, s = 22, base = 2^32. A default-constructed
/// state is uninitialized; swb_next rejects it.
struct SwbState {
    static constexpr std::uint32_t kLagR = 43;
    static constexpr std::uint32_t kLagS = 22;
    static constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
    /// Outputs discarded after seeding.
    static constexpr std::uint32_t kWarmup = 16 * kLagR;

    std::uint32_t lag_r = kLagR;
    std::uint32_t lag_s = kLagS;
    std::uint64_t base = kBase;
    std::uint32_t carry = 0;
    std::vector<std::uint32_t> buffer;  ///< ring of the last r values
    std::uint32_t position = 0;         ///< slot holding x_{n-r}
    std::uint64_t seed = 0;

    bool initialized() const { return buffer.size() == lag_r && lag_r > 0; }

    /// Deterministic fill: buffer[i] = (splitmix64 output i) >> 32, reduced
    /// mod base; carry = 0; then kWarmup outputs are discarded.
    static SwbState from_seed(std::uint64_t seed);

    /// Whitespace-separated text: "swb r s base carry position seed x0 .. x_{r-1}".
    std::string serialize() const;
    static SwbState deserialize(std::string_view text);

    friend bool operator==(const SwbState&, const SwbState&) = default;
};

/// Advances the state; returns the new value divided by base, in [0, 1).
double swb_next(SwbState& state);

/// `count` consecutive outputs as a UnitSequence labelled "SWB".
UnitSequence swb_sequence(std::uint64_t seed, std::size_t count);

}  // namespace mdseq
