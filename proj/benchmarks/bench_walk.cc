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

#include "sloccsim/walk.hpp"

using namespace sloccsim;

static void BM_WalkDp(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WalkSuccess s = exact_success_dp({0.5, n});
        benchmark::DoNotOptimize(s.p_total);
    }
}
BENCHMARK(BM_WalkDp)->Arg(10)->Arg(40);

static void BM_WalkEnumeration(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WalkSuccess s = exact_success_enumeration({0.5, n});
        benchmark::DoNotOptimize(s.p_total);
    }
}
BENCHMARK(BM_WalkEnumeration)->Arg(10)->Arg(16);

static void BM_Crossing(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(crossing(10, 0.593));
    }
}
BENCHMARK(BM_Crossing);
