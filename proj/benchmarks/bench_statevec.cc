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

#include "sloccsim/statevec.hpp"

using namespace sloccsim;

static void BM_Apply1q(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    PureState st = PureState::product_plus(n);
    Mat2 h = hadamard();
    for (auto _ : state) {
        st.apply_1q(n / 2, h);
        benchmark::DoNotOptimize(st.amps().data());
    }
    state.SetItemsProcessed(state.iterations() * st.dim());
}
BENCHMARK(BM_Apply1q)->Arg(12)->Arg(16)->Arg(20);

static void BM_BuildClusterGrid(benchmark::State &state) {
    LatticeSpec spec = LatticeSpec::grid(4, 4);
    for (auto _ : state) {
        PureState st = build_cluster(spec);
        benchmark::DoNotOptimize(st.amps().data());
    }
}
BENCHMARK(BM_BuildClusterGrid);

static void BM_MeasureWire(benchmark::State &state) {
    PureState st = build_cluster(LatticeSpec::chain(16));
    MeasurementBasis basis = MeasurementBasis::xy_plane(0.7);
    for (auto _ : state) {
        PureState branch = project_site(st, 1, basis.m0);
        benchmark::DoNotOptimize(branch.amps().data());
    }
}
BENCHMARK(BM_MeasureWire);
