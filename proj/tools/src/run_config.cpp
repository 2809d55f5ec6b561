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

#include "mdseq_cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mdseq/numeric.hpp"

namespace mdseq::cli {
namespace {

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
    while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::string_view where, std::string_view key, const std::string& why) {
    std::string msg(where);
    if (!msg.empty()) msg += ": ";
    msg += "field '" + std::string(key) + "': " + why;
    throw ConfigError(msg);
}

template <class T>
T parse_number(std::string_view text, std::string_view where, std::string_view key) {
    text = trim(text);
    T value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        fail(where, key, "cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
}

double parse_real(std::string_view text, std::string_view where, std::string_view key) {
    // from_chars for double is missing from older libstdc++ releases.
    const std::string s(trim(text));
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        fail(where, key, "cannot parse '" + s + "' as a real");
    }
    return v;
}

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(trim(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

template <class T>
void require_positive(T v, std::string_view key) {
    if (!(v > T{0})) fail("", key, "must be positive");
}

std::string join_reals(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_double(v[i]);
    return out;
}

}  // namespace

const std::vector<std::string>& config_fields() {
    static const std::vector<std::string> fields{"prime_limit", "dyad",       "sizes",     "offsets",
                                                 "n_max",       "constant_C", "budget",    "tolerance",
                                                 "epsilon",     "output_dir", "seed"};
    return fields;
}

void apply_field(RunConfig& c, std::string_view key, std::string_view value, std::string_view where) {
    value = trim(value);
    if (key == "prime_limit") {
        c.prime_limit = parse_number<std::uint64_t>(value, where, key);
    } else if (key == "dyad") {
        const auto parts = split_list(value);
        if (parts.size() != 2) fail(where, key, "expected two gaps like 6,6");
        c.dyad = {parse_number<std::uint32_t>(parts[0], where, key), parse_number<std::uint32_t>(parts[1], where, key)};
        try {
            mdseq::validate(c.dyad);
        } catch (const std::exception& e) {
            fail(where, key, e.what());
        }
    } else if (key == "sizes") {
        c.sizes.clear();
        for (std::string_view p : split_list(value)) c.sizes.push_back(parse_real(p, where, key));
    } else if (key == "offsets") {
        c.offsets.clear();
        for (std::string_view p : split_list(value)) c.offsets.push_back(parse_number<std::size_t>(p, where, key));
    } else if (key == "n_max") {
        c.n_max = parse_number<std::size_t>(value, where, key);
    } else if (key == "constant_C") {
        c.constant_C = parse_real(value, where, key);
    } else if (key == "budget") {
        c.budget = parse_number<std::size_t>(value, where, key);
    } else if (key == "tolerance") {
        c.tolerance = parse_real(value, where, key);
    } else if (key == "epsilon") {
        c.epsilon = parse_real(value, where, key);
    } else if (key == "output_dir") {
        if (value.empty()) fail(where, key, "empty path");
        c.output_dir = std::filesystem::path(std::string(value));
    } else if (key == "seed") {
        c.seed = parse_number<std::uint64_t>(value, where, key);
    } else {
        throw ConfigError(std::string(where) + (where.empty() ? "" : ": ") + "unknown field '" + std::string(key) + "'");
    }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::vector<std::string> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw ConfigError(where + ": field '" + key + "' given twice");
        }
        seen.push_back(key);
        apply_field(base, key, line.substr(eq + 1), where);
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str(), std::move(base));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void validate(RunConfig& c) {
    require_positive(c.prime_limit, "prime_limit");
    require_positive(c.n_max, "n_max");
    require_positive(c.constant_C, "constant_C");
    require_positive(c.budget, "budget");
    require_positive(c.tolerance, "tolerance");
    require_positive(c.epsilon, "epsilon");
    require_positive(c.seed, "seed");
    if (c.prime_limit < 100) fail("", "prime_limit", "must be at least 100");
    if (c.sizes.empty()) fail("", "sizes", "empty list");
    for (double s : c.sizes) {
        if (!(s > 0.0 && s <= 0.5)) fail("", "sizes", "each size must lie in (0, 0.5]");
    }
    if (c.offsets.empty()) fail("", "offsets", "empty list");
    for (std::size_t j : c.offsets) require_positive(j, "offsets");

    if (c.output_dir.empty()) fail("", "output_dir", "not set");
    std::error_code ec;
    std::filesystem::create_directories(c.output_dir, ec);
    const auto probe = c.output_dir / ".mdseq-write-probe";
    {
        std::ofstream out(probe);
        if (!out) fail("", "output_dir", "'" + c.output_dir.string() + "' is not writable");
    }
    std::filesystem::remove(probe, ec);
}

std::string canonical_text(const RunConfig& c) {
    std::string offsets;
    for (std::size_t i = 0; i < c.offsets.size(); ++i) offsets += (i ? "," : "") + std::to_string(c.offsets[i]);
    std::ostringstream out;
    out << "prime_limit=" << c.prime_limit << '\n'
        << "dyad=" << c.dyad.first << ',' << c.dyad.second << '\n'
        << "sizes=" << join_reals(c.sizes) << '\n'
        << "offsets=" << offsets << '\n'
        << "n_max=" << c.n_max << '\n'
        << "constant_C=" << format_double(c.constant_C) << '\n'
        << "budget=" << c.budget << '\n'
        << "tolerance=" << format_double(c.tolerance) << '\n'
        << "epsilon=" << format_double(c.epsilon) << '\n'
        << "seed=" << c.seed << '\n';
    return out.str();
}

std::string config_hash(const RunConfig& c) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : canonical_text(c)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig resolve_config(const std::filesystem::path& config_file,
                         const std::map<std::string, std::string>& overrides) {
    RunConfig c;
    if (!config_file.empty()) c = load_config(config_file, c);
    for (const auto& [key, value] : overrides) apply_field(c, key, value, "flag --" + key);
    if (c.output_dir.empty()) {
        const char* env = std::getenv("MDSEQ_OUTPUT_DIR");
        c.output_dir = env && *env ? std::filesystem::path(env) : std::filesystem::path("mdseq-output");
    }
    validate(c);
    return c;
}

}  // namespace mdseq::cli
