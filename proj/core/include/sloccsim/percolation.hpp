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
//
// 2D bond-percolation Monte Carlo: lattices of open/broken bonds generated
// either at a fixed bond probability or from the B-undo walker success law,
// with a union-find left-right spanning test.

#ifndef SLOCCSIM_PERCOLATION_HPP
#define SLOCCSIM_PERCOLATION_HPP

#include <cstdint>
#include <vector>

#include "sloccsim/rng.hpp"
#include "sloccsim/walk.hpp"

namespace sloccsim {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) {
            parent_[i] = i;
        }
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            return false;
        }
        if (rank_[x] < rank_[y]) {
            std::swap(x, y);
        }
        parent_[y] = x;
        if (rank_[x] == rank_[y]) {
            ++rank_[x];
        }
        return true;
    }

    bool same(int x, int y) { return find(x) == find(y); }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

/// L x L sites with open boundaries; 2 L (L-1) bonds, half horizontal and
/// half vertical.
struct BondLattice {
    int L = 0;
    double p = 0.0;
    uint64_t seed = 0;
    std::vector<uint8_t> h_open;  // (row, col)-(row, col+1), L rows x (L-1) cols
    std::vector<uint8_t> v_open;  // (row, col)-(row+1, col), (L-1) rows x L cols

    int site(int row, int col) const { return row * L + col; }  // 0-based
    int bond_count() const { return 2 * L * (L - 1); }
    int open_count() const;
};

/// Each bond open independently with probability p.
BondLattice generate(int L, double p, uint64_t seed);

/// True iff an open-bond path connects the left and right boundary columns.
bool spans(const BondLattice &lattice);

/// Breadth-first-search reachability; independent oracle for spans().
bool spans_bfs(const BondLattice &lattice);

struct PercolationEstimate {
    double p = 0.0;  // bond probability (or p_n(lambda) for from_bundo runs)
    int trials = 0;
    double spanning_fraction = 0.0;
    double stderr_binomial = 0.0;
};

PercolationEstimate spanning_estimate(int L, double p, int trials, uint64_t seed);

std::vector<PercolationEstimate> spanning_curve(int L, const std::vector<double> &p_grid,
                                                int trials, uint64_t seed);

enum class BundoBondMode {
    FromFormula,  // bond open with probability p_n(lambda) from the walk DP
    PerBondWalk,  // sample an actual walker per bond
};

/// Lattice whose bonds are generated from the B-undo success law at the given
/// lambda and even-measurement budget.
BondLattice from_bundo(int L, double lambda, int n_budget, uint64_t seed,
                       BundoBondMode mode = BundoBondMode::FromFormula);

}  // namespace sloccsim

#endif
