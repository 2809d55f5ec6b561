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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace mdseq {

/// Pairwise (cascade) summation. The recursion splits at fixed midpoints, so
/// the result depends only on the input order, never on thread count.
double pairwise_sum(std::span<const double> values);

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

/// Neumaier-compensated running sum, for prefix sums that must be emitted
/// at every index.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Linear-interpolation quantile of already sorted data (the "type 7"
/// convention: h = (n - 1) p).
double sorted_quantile(std::span<const double> sorted, double p);

/// Formats with 17 significant digits, enough for a bit-exact round trip.
std::string format_double(double value);

std::size_t worker_count();

/// Runs fn(begin, end) over contiguous blocks of [0, n). Each index is
/// visited exactly once; callers write results to per-index slots so the
/// output is independent of scheduling.
template <typename Fn>
void parallel_for_blocks(std::size_t n, Fn&& fn, std::size_t min_block = 256) {
    if (n == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(worker_count(), (n + min_block - 1) / min_block);
    if (workers <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t block = (n + workers - 1) / workers;
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = w * block;
        const std::size_t end = std::min(n, begin + block);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    fn(std::size_t{0}, std::min(n, block));
}

}  // namespace mdseq
