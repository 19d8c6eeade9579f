// Copyright 2026 The sloccsim Authors
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

#include "sloccsim/percolation.hpp"

using namespace sloccsim;

static void BM_GenerateAndSpan(benchmark::State &state) {
    int L = static_cast<int>(state.range(0));
    uint64_t seed = 0;
    for (auto _ : state) {
        BondLattice lat = generate(L, 0.55, seed++);
        benchmark::DoNotOptimize(spans(lat));
    }
    state.SetItemsProcessed(state.iterations() * 2 * L * (L - 1));
}
BENCHMARK(BM_GenerateAndSpan)->Arg(32)->Arg(128);

static void BM_FromBundoWalk(benchmark::State &state) {
    uint64_t seed = 0;
    for (auto _ : state) {
        BondLattice lat = from_bundo(64, 0.6, 10, seed++, BundoBondMode::PerBondWalk);
        benchmark::DoNotOptimize(lat.open_count());
    }
}
BENCHMARK(BM_FromBundoWalk);

BENCHMARK_MAIN();
