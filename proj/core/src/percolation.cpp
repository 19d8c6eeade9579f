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

#include "sloccsim/percolation.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace sloccsim {

int BondLattice::open_count() const {
    int c = 0;
    for (uint8_t b : h_open) {
        c += b;
    }
    for (uint8_t b : v_open) {
        c += b;
    }
    return c;
}

BondLattice generate(int L, double p, uint64_t seed) {
    if (L < 2) {
        throw std::invalid_argument("generate: L must be at least 2");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("generate: p must be in [0,1]");
    }
    BondLattice lat;
    lat.L = L;
    lat.p = p;
    lat.seed = seed;
    lat.h_open.resize(static_cast<size_t>(L) * (L - 1));
    lat.v_open.resize(static_cast<size_t>(L) * (L - 1));
    Rng rng(seed);
    for (auto &b : lat.h_open) {
        b = rng.bernoulli(p) ? 1 : 0;
    }
    for (auto &b : lat.v_open) {
        b = rng.bernoulli(p) ? 1 : 0;
    }
    return lat;
}

bool spans(const BondLattice &lat) {
    int L = lat.L;
    int n = L * L;
    UnionFind uf(n + 2);
    int left = n, right = n + 1;
    for (int r = 0; r < L; ++r) {
        uf.unite(left, lat.site(r, 0));
        uf.unite(right, lat.site(r, L - 1));
        for (int c = 0; c + 1 < L; ++c) {
            if (lat.h_open[r * (L - 1) + c]) {
                uf.unite(lat.site(r, c), lat.site(r, c + 1));
            }
        }
    }
    for (int r = 0; r + 1 < L; ++r) {
        for (int c = 0; c < L; ++c) {
            if (lat.v_open[r * L + c]) {
                uf.unite(lat.site(r, c), lat.site(r + 1, c));
            }
        }
    }
    return uf.same(left, right);
}

bool spans_bfs(const BondLattice &lat) {
    int L = lat.L;
    std::vector<uint8_t> seen(static_cast<size_t>(L) * L, 0);
    std::deque<int> queue;
    for (int r = 0; r < L; ++r) {
        queue.push_back(lat.site(r, 0));
        seen[lat.site(r, 0)] = 1;
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        int r = s / L, c = s % L;
        if (c == L - 1) {
            return true;
        }
        auto visit = [&](int t) {
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        };
        if (c + 1 < L && lat.h_open[r * (L - 1) + c]) {
            visit(lat.site(r, c + 1));
        }
        if (c > 0 && lat.h_open[r * (L - 1) + c - 1]) {
            visit(lat.site(r, c - 1));
        }
        if (r + 1 < L && lat.v_open[r * L + c]) {
            visit(lat.site(r + 1, c));
        }
        if (r > 0 && lat.v_open[(r - 1) * L + c]) {
            visit(lat.site(r - 1, c));
        }
    }
    return false;
}

PercolationEstimate spanning_estimate(int L, double p, int trials, uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("spanning_estimate: trials must be positive");
    }
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        if (spans(generate(L, p, derive_seed(seed, t)))) {
            ++hits;
        }
    }
    PercolationEstimate est;
    est.p = p;
    est.trials = trials;
    est.spanning_fraction = static_cast<double>(hits) / trials;
    est.stderr_binomial =
        std::sqrt(est.spanning_fraction * (1.0 - est.spanning_fraction) / trials);
    return est;
}

std::vector<PercolationEstimate> spanning_curve(int L, const std::vector<double> &p_grid,
                                                int trials, uint64_t seed) {
    std::vector<PercolationEstimate> out;
    out.reserve(p_grid.size());
    for (size_t i = 0; i < p_grid.size(); ++i) {
        out.push_back(spanning_estimate(L, p_grid[i], trials, derive_seed(seed, 1000 + i)));
    }
    return out;
}

BondLattice from_bundo(int L, double lambda, int n_budget, uint64_t seed, BundoBondMode mode) {
    if (lambda <= 0.0 || lambda >= 1.0) {
        throw std::invalid_argument("from_bundo: lambda must be in (0,1)");
    }
    double p_bond = exact_success_dp({lambda, n_budget}).p_total;
    if (mode == BundoBondMode::FromFormula) {
        BondLattice lat = generate(L, p_bond, seed);
        return lat;
    }
    // Sample one walker per bond.
    BondLattice lat;
    lat.L = L;
    lat.p = p_bond;
    lat.seed = seed;
    lat.h_open.resize(static_cast<size_t>(L) * (L - 1));
    lat.v_open.resize(static_cast<size_t>(L) * (L - 1));
    Rng rng(seed);
    auto walk_once = [&]() -> uint8_t {
        int k = 1;
        for (int step = 0; step < n_budget; ++step) {
            double l2 = lambda * lambda;
            double l2k = std::pow(lambda, 2.0 * k);
            double p1 = (l2 + l2k) / ((1.0 + l2) * (1.0 + l2k));
            k += rng.uniform() < p1 ? -1 : 1;
            if (k == 0) {
                return 1;
            }
        }
        return 0;
    };
    for (auto &b : lat.h_open) {
        b = walk_once();
    }
    for (auto &b : lat.v_open) {
        b = walk_once();
    }
    return lat;
}

}  // namespace sloccsim
