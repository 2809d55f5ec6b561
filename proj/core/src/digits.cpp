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

#include "mdseq/digits.hpp"

#include <fstream>
#include <sstream>

#include "mdseq/errors.hpp"

namespace mdseq {

DigitStream parse_digits(std::string_view text, std::string label) {
    DigitStream out;
    out.constant_label = std::move(label);
    out.digits.reserve(text.size());
    bool seen_point = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            out.digits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\v') {
            continue;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            throw ParseError(std::string("digit file: unexpected ") + (c == '.' ? "second '.'" : "byte") +
                                 " at offset " + std::to_string(i),
                             i);
        }
    }
    return out;
}

DigitStream load_digit_file(const std::filesystem::path& path, std::string label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open digit file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (label.empty()) label = path.stem().string();
    try {
        return parse_digits(buf.str(), std::move(label));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.offset());
    }
}

UnitSequence to_unit_sequence(const DigitStream& stream, Normalization mode, std::size_t count) {
    const std::size_t n = count == 0 ? stream.size() : std::min(count, stream.size());
    std::vector<double> v(stream.digits.begin(), stream.digits.begin() + static_cast<std::ptrdiff_t>(n));
    if (mode == Normalization::max_scale) {
        // Scale by the largest possible digit, not the observed maximum.
        for (double& x : v) x /= 9.0;
        return UnitSequence(std::move(v), 1.0, stream.constant_label, mode);
    }
    return normalize(v, mode, stream.constant_label);
}

}  // namespace mdseq
