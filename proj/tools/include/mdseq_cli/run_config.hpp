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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mdseq/sequences.hpp"

namespace mdseq::cli {

/// Invalid configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::uint64_t prime_limit = 16'000'000;
    DyadPattern dyad{6, 6};
    std::vector<double> sizes{0.1, 0.2, 0.25, 0.333};
    std::vector<std::size_t> offsets{1, 2, 3, 4, 5};
    std::size_t n_max = 100'000;
    double constant_C = 1.0;
    std::size_t budget = 15'000;
    double tolerance = 0.15;
    double epsilon = 1e-4;
    std::filesystem::path output_dir;
    std::uint64_t seed = 20240601;
};

/// The field names accepted in config files, in canonical order.
const std::vector<std::string>& config_fields();

/// Sets one field from its text form. `where` prefixes error messages.
void apply_field(RunConfig& config, std::string_view key, std::string_view value, std::string_view where);

/// Flat key=value text; blank lines and '#' comments ignored. Errors name
/// the line and field.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Checks positivity and makes sure output_dir exists and is writable.
void validate(RunConfig& config);

/// Every field except output_dir as key=value lines, canonical order.
std::string canonical_text(const RunConfig& config);

/// 64-bit FNV-1a of canonical_text, as 16 hex digits.
std::string config_hash(const RunConfig& config);

/// Layers defaults, an optional config file, flag overrides and the
/// MDSEQ_OUTPUT_DIR fallback, then validates.
RunConfig resolve_config(const std::filesystem::path& config_file,
                         const std::map<std::string, std::string>& overrides);

}  // namespace mdseq::cli
