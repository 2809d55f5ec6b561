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

#include "mdseq/sequences.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mdseq/digits.hpp"
#include "mdseq/errors.hpp"
#include "mdseq/swb.hpp"
#include "oracles.hpp"

namespace mdseq {
namespace {

GapSequence gaps_of(std::vector<std::uint32_t> g) {
    GapSequence s;
    s.gaps = std::move(g);
    return s;
}

TEST(ScanDyads, OverlapsAreReported) {
    EXPECT_EQ(scan_dyads(gaps_of({6, 6, 6}), {6, 6}, 3), (std::vector<std::size_t>{1, 2}));
}

TEST(ScanDyads, OrderedPattern) {
    EXPECT_EQ(scan_dyads(gaps_of({4, 6, 2, 4, 6}), {4, 6}, 5), (std::vector<std::size_t>{1, 4}));
    EXPECT_EQ(scan_dyads(gaps_of({4, 6, 2, 4, 6}), {4, 6}, 4), (std::vector<std::size_t>{1}));
}

TEST(ScanDyads, Errors) {
    EXPECT_THROW(scan_dyads(gaps_of({}), {6, 6}, 0), DomainError);
    EXPECT_THROW(scan_dyads(gaps_of({6, 6}), {6, 6}, 3), DomainError);
    EXPECT_THROW(scan_dyads(gaps_of({6, 6}), {3, 6}, 2), DomainError);
    EXPECT_THROW(scan_dyads(gaps_of({6, 6}), {0, 6}, 2), DomainError);
}

TEST(ScanDyads, UnorderedCountIsSymmetric) {
    std::mt19937 rng(5);
    std::vector<std::uint32_t> g(5000);
    for (auto& x : g) x = 2 * (1 + rng() % 4);
    const GapSequence s = gaps_of(g);
    for (DyadPattern p : {DyadPattern{2, 4}, DyadPattern{4, 6}, DyadPattern{6, 6}, DyadPattern{2, 8}}) {
        const DyadCounts c = count_dyad_conventions(s, p, s.size());
        const DyadCounts r = count_dyad_conventions(s, p.reversed(), s.size());
        EXPECT_EQ(c.unordered, r.unordered);
        EXPECT_EQ(c.ordered, r.reversed);
        EXPECT_EQ(c.ordered, scan_dyads(s, p, s.size()).size());
        if (p.first != p.second) {
            EXPECT_EQ(c.unordered, c.ordered + c.reversed);
        }
        EXPECT_LE(c.non_overlapping, c.ordered);
    }
}

TEST(MetaDistances, Basics) {
    const std::vector<std::size_t> occ{1, 4, 9};
    EXPECT_EQ(meta_distances(occ, {6, 6}).values, (std::vector<std::int64_t>{3, 5}));
    const std::vector<std::size_t> one{7};
    EXPECT_TRUE(meta_distances(one, {6, 6}).values.empty());
    const std::vector<std::size_t> bad{3, 3};
    EXPECT_THROW(meta_distances(bad, {6, 6}), DomainError);
}

TEST(MetaDistances, SumTelescopes) {
    std::mt19937 rng(9);
    std::vector<std::size_t> occ{rng() % 10u};
    for (int i = 0; i < 1000; ++i) occ.push_back(occ.back() + 1 + rng() % 50);
    const auto md = meta_distances(occ, {6, 6});
    ASSERT_EQ(md.values.size(), occ.size() - 1);
    EXPECT_EQ(std::accumulate(md.values.begin(), md.values.end(), std::int64_t{0}),
              static_cast<std::int64_t>(occ.back() - occ.front()));
    for (auto v : md.values) EXPECT_GE(v, 1);
}

TEST(Normalize, Modes) {
    const std::vector<double> v{1, 2, 4};
    const UnitSequence s = normalize(v, Normalization::max_scale, "x");
    EXPECT_EQ(std::vector<double>(s.values().begin(), s.values().end()), (std::vector<double>{0.25, 0.5, 1.0}));
    EXPECT_EQ(s.range_max(), 1.0);

    const std::vector<double> nine{9};
    EXPECT_EQ(normalize(nine, Normalization::digit_rule, "d")[0], 2.0);
    EXPECT_EQ(normalize(nine, Normalization::digit_rule, "d").range_max(), 2.0);

    const std::vector<double> two{2.0};
    EXPECT_EQ(normalize(two, Normalization::fractional_part, "f")[0], 0.0);
}

TEST(Normalize, Errors) {
    const std::vector<double> empty;
    const std::vector<double> zeros{0, 0};
    const std::vector<double> ten{10};
    EXPECT_THROW(normalize(empty, Normalization::max_scale, "x"), DomainError);
    EXPECT_THROW(normalize(zeros, Normalization::max_scale, "x"), DomainError);
    EXPECT_THROW(normalize(ten, Normalization::digit_rule, "x"), DomainError);
    const std::vector<double> one{1};
    EXPECT_THROW(normalize(one, Normalization::max_scale, ""), DomainError);
}

TEST(Normalize, MaxScaleIsIdempotentWithExactUnitMaximum) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1000.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(1 + rng() % 200);
        for (double& x : v) x = u(rng);
        const UnitSequence once = normalize(v, Normalization::max_scale, "x");
        EXPECT_EQ(*std::max_element(once.values().begin(), once.values().end()), 1.0);
        const UnitSequence twice = normalize(once.values(), Normalization::max_scale, "x");
        EXPECT_TRUE(std::equal(once.values().begin(), once.values().end(), twice.values().begin()));
    }
}

TEST(UnitSequence, RejectsOutOfRange) {
    EXPECT_THROW(UnitSequence({0.5, 1.5}, 1.0, "x", Normalization::none), DomainError);
    EXPECT_THROW(UnitSequence({-0.1}, 1.0, "x", Normalization::none), DomainError);
    EXPECT_NO_THROW(UnitSequence({0.0, 2.0}, 2.0, "x", Normalization::digit_rule));
}

TEST(Digits, ParseExamples) {
    EXPECT_EQ(parse_digits("3.14159", "pi").digits, (std::vector<std::uint8_t>{3, 1, 4, 1, 5, 9}));
    EXPECT_EQ(parse_digits("2.7182", "e").digits, (std::vector<std::uint8_t>{2, 7, 1, 8, 2}));
    EXPECT_EQ(parse_digits(" 2.71\n82 \r\n", "e").digits, (std::vector<std::uint8_t>{2, 7, 1, 8, 2}));
}

TEST(Digits, ParseErrorsCarryOffset) {
    try {
        parse_digits("3.14x15", "bad");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
    try {
        parse_digits("3.14.15", "bad");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
    EXPECT_THROW(load_digit_file("/nonexistent/digits.txt"), std::runtime_error);
}

TEST(Digits, BundledCorpora) {
    const std::filesystem::path dir = MDSEQ_DATA_DIR;
    const DigitStream sqrt71 = load_digit_file(dir / "sqrt71.txt");
    EXPECT_EQ(sqrt71.constant_label, "sqrt71");
    ASSERT_GE(sqrt71.size(), 20'000u);
    const std::vector<std::uint8_t> head(sqrt71.digits.begin(), sqrt71.digits.begin() + 9);
    EXPECT_EQ(head, (std::vector<std::uint8_t>{8, 4, 2, 6, 1, 4, 9, 7, 7}));

    // Whole corpus against an exact integer square root.
    const std::string expected = oracle::sqrt_digits(71, sqrt71.size());
    ASSERT_EQ(expected.size(), sqrt71.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        ASSERT_EQ(sqrt71.digits[i], expected[i] - '0') << "digit " << i;
    }

    for (const char* name : {"pi.txt", "e.txt"}) {
        EXPECT_GE(load_digit_file(dir / name).size(), 20'000u) << name;
    }
    EXPECT_EQ(load_digit_file(dir / "pi.txt").digits[0], 3);
    EXPECT_EQ(load_digit_file(dir / "e.txt").digits[1], 7);
}

TEST(Digits, UnitSequenceMapping) {
    const DigitStream s = parse_digits("9.0", "x");
    const UnitSequence digit = to_unit_sequence(s, Normalization::digit_rule);
    EXPECT_EQ(digit[0], 2.0);
    EXPECT_EQ(digit[1], 0.0);
    const UnitSequence scaled = to_unit_sequence(s, Normalization::max_scale);
    EXPECT_EQ(scaled[0], 1.0);
}

TEST(Swb, Determinism) {
    SwbState a = SwbState::from_seed(42);
    SwbState b = SwbState::from_seed(42);
    for (int i = 0; i < 1000; ++i) {
        const double x = swb_next(a);
        ASSERT_EQ(x, swb_next(b));
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 1.0);
    }
    SwbState c = SwbState::from_seed(43);
    EXPECT_NE(swb_next(a), swb_next(c));
}

TEST(Swb, UninitializedRejected) {
    SwbState s;
    EXPECT_THROW(swb_next(s), DomainError);
}

TEST(Swb, SerializeRestorePreservesStream) {
    SwbState s = SwbState::from_seed(7);
    for (int i = 0; i < 123; ++i) swb_next(s);
    SwbState restored = SwbState::deserialize(s.serialize());
    EXPECT_EQ(restored, s);
    for (int i = 0; i < 500; ++i) ASSERT_EQ(swb_next(s), swb_next(restored));
    EXPECT_THROW(SwbState::deserialize("swb 43 22"), ParseError);
    EXPECT_THROW(SwbState::deserialize("xyz"), ParseError);
}

TEST(Swb, RecurrenceMatchesDefinition) {
    SwbState s = SwbState::from_seed(99);
    // Unroll the ring into history order, oldest first.
    std::vector<std::int64_t> hist;
    for (std::uint32_t i = 0; i < s.lag_r; ++i) hist.push_back(s.buffer[(s.position + i) % s.lag_r]);
    std::int64_t carry = s.carry;
    for (int n = 0; n < 2000; ++n) {
        const std::size_t len = hist.size();
        std::int64_t x = hist[len - s.lag_s] - hist[len - s.lag_r] - carry;
        carry = x < 0;
        if (x < 0) x += static_cast<std::int64_t>(s.base);
        hist.push_back(x);
        ASSERT_EQ(swb_next(s), static_cast<double>(x) / 4294967296.0);
    }
}

TEST(Swb, ChiSquareUniformity) {
    const UnitSequence u = swb_sequence(20260101, 100'000);
    std::vector<double> bins(100, 0.0);
    for (double x : u.values()) bins[static_cast<std::size_t>(x * 100.0)] += 1.0;
    const double expected = 1000.0;
    double chi2 = 0.0;
    for (double b : bins) chi2 += (b - expected) * (b - expected) / expected;
    // 99% acceptance region of chi-square with 99 degrees of freedom.
    EXPECT_LT(chi2, oracle::chi_square_quantile(99.0, 0.99));
}

}  // namespace
}  // namespace mdseq
