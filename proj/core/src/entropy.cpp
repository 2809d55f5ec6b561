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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <unordered_map>

#include "mdseq/analysis.hpp"
#include "mdseq/errors.hpp"
#include "mdseq/numeric.hpp"

namespace mdseq {

namespace {

template <typename Map>
EntropyReport entropy_from_counts(const Map& counts, std::size_t total, std::string label) {
    if (total == 0) throw DomainError("shannon_entropy: empty input");
    std::vector<std::size_t> c;
    c.reserve(counts.size());
    for (const auto& kv : counts) c.push_back(kv.second);
    // Hash-map order is not part of the contract; sort so the sum is reproducible.
    std::sort(c.begin(), c.end());
    std::vector<double> terms(c.size());
    const double n = static_cast<double>(total);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double p = static_cast<double>(c[i]) / n;
        terms[i] = -p * std::log10(p);
    }
    EntropyReport r;
    r.entropy = std::max(0.0, pairwise_sum(terms));
    r.symbol_count = total;
    r.distinct_symbols = c.size();
    r.label = std::move(label);
    return r;
}

}  // namespace

EntropyReport shannon_entropy(std::span<const std::int64_t> symbols, std::string label) {
    std::unordered_map<std::int64_t, std::size_t> counts;
    for (auto s : symbols) ++counts[s];
    return entropy_from_counts(counts, symbols.size(), std::move(label));
}

EntropyReport shannon_entropy(std::span<const std::string> symbols, std::string label) {
    std::unordered_map<std::string_view, std::size_t> counts;
    for (const auto& s : symbols) ++counts[s];
    return entropy_from_counts(counts, symbols.size(), std::move(label));
}

EntropyReport shannon_entropy(std::span<const double> values, Symbolization how, std::string label) {
    std::unordered_map<double, std::size_t> counts;
    const double scale = std::pow(10.0, how.digits);
    for (double v : values) {
        if (!std::isfinite(v)) throw DomainError("shannon_entropy: non-finite value");
        double key = how.mode == Symbolization::Mode::rounded ? std::round(v * scale) / scale : v;
        if (key == 0.0) key = 0.0;  // fold -0.0 into +0.0
        ++counts[key];
    }
    return entropy_from_counts(counts, values.size(), std::move(label));
}

std::vector<std::string> load_symbol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open symbol file " + path);
    return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

}  // namespace mdseq
