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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mdseq/sequences.hpp"

namespace mdseq {

/// Decimal digits of a constant, integer part included, point dropped.
struct DigitStream {
    std::vector<std::uint8_t> digits;
    std::string constant_label;

    std::size_t size() const { return digits.size(); }
};

/// Parses the digit-file format: ASCII, whitespace ignored, at most one '.',
/// everything else must be a decimal digit. Throws ParseError whose offset
/// is the byte position of the offending character.
DigitStream parse_digits(std::string_view text, std::string label);

/// Reads and parses a digit file; the label defaults to the file stem.
DigitStream load_digit_file(const std::filesystem::path& path, std::string label = {});

/// Digits mapped by `mode` (digit_rule or max_scale) into a UnitSequence,
/// truncated to `count` digits when nonzero.
UnitSequence to_unit_sequence(const DigitStream& stream, Normalization mode, std::size_t count = 0);

}  // namespace mdseq
