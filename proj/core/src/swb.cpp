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

#include "mdseq/swb.hpp"

#include <sstream>

#include "mdseq/errors.hpp"

namespace mdseq {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void check_params(const SwbState& s) {
    if (!(s.lag_r > s.lag_s && s.lag_s >= 1)) throw DomainError("SwbState: need lag_r > lag_s >= 1");
    if (s.base < 2 || s.base > SwbState::kBase) throw DomainError("SwbState: base must be in [2, 2^32]");
    if (s.carry > 1) throw DomainError("SwbState: carry must be 0 or 1");
}

}  // namespace

SwbState SwbState::from_seed(std::uint64_t seed) {
    SwbState s;
    s.seed = seed;
    s.buffer.resize(s.lag_r);
    std::uint64_t x = seed;
    bool all_zero = true;
    for (auto& v : s.buffer) {
        v = static_cast<std::uint32_t>((splitmix64(x) >> 32) % s.base);
        all_zero = all_zero && v == 0;
    }
    if (all_zero) s.buffer[0] = 1;
    for (std::uint32_t i = 0; i < kWarmup; ++i) swb_next(s);
    return s;
}

double swb_next(SwbState& s) {
    if (!s.initialized()) throw DomainError("swb_next: state is not initialized");
    const std::uint32_t r = s.lag_r;
    const std::uint32_t lag_s_slot = (s.position + r - s.lag_s) % r;
    auto diff = static_cast<std::int64_t>(s.buffer[lag_s_slot]) -
                static_cast<std::int64_t>(s.buffer[s.position]) - static_cast<std::int64_t>(s.carry);
    if (diff < 0) {
        diff += static_cast<std::int64_t>(s.base);
        s.carry = 1;
    } else {
        s.carry = 0;
    }
    const auto x = static_cast<std::uint32_t>(diff);
    s.buffer[s.position] = x;
    s.position = (s.position + 1) % r;
    return static_cast<double>(x) / static_cast<double>(s.base);
}

std::string SwbState::serialize() const {
    std::ostringstream out;
    out << "swb " << lag_r << ' ' << lag_s << ' ' << base << ' ' << carry << ' ' << position << ' ' << seed;
    for (auto v : buffer) out << ' ' << v;
    return out.str();
}

SwbState SwbState::deserialize(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    SwbState s;
    if (!(in >> tag) || tag != "swb") throw ParseError("SwbState: missing 'swb' tag", 0);
    if (!(in >> s.lag_r >> s.lag_s >> s.base >> s.carry >> s.position >> s.seed)) {
        throw ParseError("SwbState: malformed header", 0);
    }
    check_params(s);
    s.buffer.resize(s.lag_r);
    for (std::uint32_t i = 0; i < s.lag_r; ++i) {
        std::uint64_t v = 0;
        if (!(in >> v) || v >= s.base) throw ParseError("SwbState: bad buffer entry " + std::to_string(i), i);
        s.buffer[i] = static_cast<std::uint32_t>(v);
    }
    if (s.position >= s.lag_r) throw ParseError("SwbState: position out of range", 0);
    return s;
}

UnitSequence swb_sequence(std::uint64_t seed, std::size_t count) {
    SwbState s = SwbState::from_seed(seed);
    std::vector<double> v(count);
    for (double& x : v) x = swb_next(s);
    return UnitSequence(std::move(v), 1.0, "SWB", Normalization::none);
}

}  // namespace mdseq
