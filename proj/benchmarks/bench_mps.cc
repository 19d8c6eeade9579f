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

#include "sloccsim/mps.hpp"

using namespace sloccsim;

static void BM_RingCorrelatorSweep(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    std::map<int, std::pair<double, double>> assign;
    for (int s = 2; s <= n; s += 2) {
        assign[s] = {0.5, 0.8};
    }
    MpsChain ring = nun_sites(n, assign, MpsChain::Boundary::Ring);
    for (auto _ : state) {
        auto corr = ring_correlators_from_site1(ring, Pauli::Z, Pauli::Z, 60);
        benchmark::DoNotOptimize(corr.data());
    }
}
BENCHMARK(BM_RingCorrelatorSweep)->Arg(200)->Arg(1000);

static void BM_CorrelationLengthFit(benchmark::State &state) {
    std::map<int, std::pair<double, double>> assign;
    for (int s = 2; s <= 1000; s += 2) {
        assign[s] = {0.4, 1.1};
    }
    MpsChain ring = nun_sites(1000, assign, MpsChain::Boundary::Ring);
    for (auto _ : state) {
        CorrelationFit fit = correlation_length(ring, Pauli::Z, Pauli::Z, 60);
        benchmark::DoNotOptimize(fit.length);
    }
}
BENCHMARK(BM_CorrelationLengthFit);
