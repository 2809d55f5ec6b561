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

#include <benchmark/benchmark.h>

#include <random>

#include "mdseq/equidist.hpp"
#include "mdseq/prime_engine.hpp"
#include "mdseq/qmc.hpp"
#include "mdseq/sequences.hpp"
#include "mdseq/swb.hpp"

namespace {

mdseq::UnitSequence random_unit(std::size_t n) {
    std::mt19937_64 rng(1);
    std::vector<double> v(n);
    for (double& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return mdseq::UnitSequence(std::move(v), 1.0, "bench", mdseq::Normalization::none);
}

const mdseq::UnitSequence& md_unit() {
    static const mdseq::UnitSequence md = [] {
        const auto gaps = mdseq::prime_gaps(mdseq::sieve_primes(16'000'000));
        return mdseq::normalize(mdseq::build_meta_distances(gaps, {6, 6}, mdseq::kDefaultGapPrefix));
    }();
    return md;
}

void BM_Sieve(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mdseq::sieve_primes(limit).count());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(16'000'000)->Unit(benchmark::kMillisecond);

void BM_ErdosTuranMd(benchmark::State& state) {
    const auto& md = md_unit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mdseq::erdos_turan_bound(md, static_cast<std::size_t>(state.range(0))).supremum_bound);
    }
}
BENCHMARK(BM_ErdosTuranMd)->Arg(1'000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_StarDiscrepancy(benchmark::State& state) {
    const auto seq = random_unit(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mdseq::star_discrepancy_exact(seq));
}
BENCHMARK(BM_StarDiscrepancy)->Range(1 << 10, 1 << 18);

void BM_Swb(benchmark::State& state) {
    mdseq::SwbState s = mdseq::SwbState::from_seed(42);
    for (auto _ : state) benchmark::DoNotOptimize(mdseq::swb_next(s));
}
BENCHMARK(BM_Swb);

void BM_QmcProductCosine(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto seq = random_unit(15'000 * dim);
    const auto f = mdseq::make_factor_integrand(mdseq::FactorKind::cosine, mdseq::IntegrandFamily::multiplicative,
                                                std::vector<mdseq::Bounds>(dim, mdseq::Bounds{0, 1}));
    const auto nodes = mdseq::make_nodes(seq, dim, 15'000);
    for (auto _ : state) benchmark::DoNotOptimize(mdseq::qmc_integrate(f, nodes).estimate);
}
BENCHMARK(BM_QmcProductCosine)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
