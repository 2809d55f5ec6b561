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

#include "mdseq/report_io.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "mdseq/numeric.hpp"

namespace mdseq {
namespace {

TEST(FormatDouble, RoundTripsBitExactly) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t bits = rng();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        if (!std::isfinite(v)) continue;
        const std::string s = format_double(v);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), v) << s;
    }
}

TEST(CsvTable, LayoutAndMetadata) {
    CsvTable t({"a", "b"});
    t.row({"1", "x,y"});
    t.add_metadata("config_hash", "abc");
    EXPECT_EQ(t.str(), "a,b\n1,\"x,y\"\n# config_hash=abc\n");
    EXPECT_THROW(t.row({"1"}), std::invalid_argument);
}

TEST(CsvTable, CoverageLayout) {
    std::vector<CoverageReport> reps(4);
    for (std::size_t i = 0; i < 4; ++i) reps[i].size = kCoverageSizes[i];
    reps[0].expected_published = 0.1;
    const CsvTable t = coverage_csv(reps);
    EXPECT_EQ(t.rows(), 4u);
    const std::string s = t.str();
    EXPECT_EQ(s.substr(0, s.find('\n')), "size,offset_j,measured_fraction,expected_published,analytic_uniform,sample_count");
    EXPECT_NE(s.find("\n0.10000000000000001,1,0,0.10000000000000001,0,0\n"), std::string::npos) << s;
}

}  // namespace
}  // namespace mdseq
