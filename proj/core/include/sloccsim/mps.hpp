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
// Matrix-product-state engine for long chains and rings. Physical indices
// are computational-basis throughout. For open chains the first site holds
// row vectors and the last site column vectors; for rings every site holds
// a 2x2 pair and amplitudes are traces of matrix products.

#ifndef SLOCCSIM_MPS_HPP
#define SLOCCSIM_MPS_HPP

#include <map>
#include <vector>

#include "sloccsim/qmath.hpp"
#include "sloccsim/statevec.hpp"

namespace sloccsim {

struct SiteMatrices {
    Mat2 a0, a1;  // A[0], A[1]
};

struct BoundaryRow {
    Vec2 r0, r1;  // 1x2 row vectors
};

struct BoundaryCol {
    Vec2 c0, c1;  // 2x1 column vectors
};

struct MpsChain {
    enum class Boundary { Open, Ring };

    Boundary boundary = Boundary::Open;
    int n = 0;
    BoundaryRow left;                // open chains only (site 1)
    BoundaryCol right;               // open chains only (site n)
    std::vector<SiteMatrices> bulk;  // open: sites 2..n-1; ring: sites 1..n
    bool canonical_checked = false;

    const SiteMatrices &bulk_site(int site) const;

    cplx amplitude(uint64_t bits) const;  // bit of site 1 is most significant
    PureState contract(int qubit_budget = kDefaultQubitBudget) const;
};

/// Sum_i A[i] A[i]^dag == I at every bulk site (and the matching boundary
/// contractions) within tol.
bool is_canonical(const MpsChain &chain, double tol = 1e-10);

/// Dual direction Sum_i A[i]^dag A[i] proportional to I; the site-matrix
/// criterion for a computational wire. Checked per bulk site.
bool site_channel_unital(const SiteMatrices &site, double tol = 1e-10);

/// 4x4 transfer matrix E = Sum_i A[i] (x) conj(A[i]).
Mat4 transfer_op(const SiteMatrices &site);
/// Operator-dressed variant E_O = Sum_{i,j} <j|O|i> A[i] (x) conj(A[j]).
Mat4 transfer_op_dressed(const SiteMatrices &site, const Mat2 &op);

/// Canonical cluster-state MPS: bulk A[i] = H|i><i|, left row <i|/sqrt(2),
/// right column H|i>.
MpsChain cluster_sites(int n, MpsChain::Boundary boundary = MpsChain::Boundary::Open);

/// Applies a local operator to one site's matrices: A'[i'] = Sum_i S_{i'i} A[i].
/// When `rescale` the pair is multiplied by sqrt(2 / sum ||A'[i]||_F^2) so
/// canonical form is restored whenever it can be.
void apply_site_op(MpsChain &chain, int site, const Mat2 &op, bool rescale = true);

/// Cluster chain/ring with N-type operators D(theta) H Rz(gamma) on the
/// keyed sites. Each transformed site's matrices are proportional to
/// unitaries, so the induced channel stays unital and the chain canonical.
MpsChain nun_sites(int n, const std::map<int, std::pair<double, double>> &n_assignments,
                   MpsChain::Boundary boundary = MpsChain::Boundary::Open);

/// B-U-B open chain with B = D(theta^{(2j)}) Rz(gamma^{(2j)}) on even sites;
/// n = 2 * per_pair.size() + 1. Site matrices follow the closed-form
/// canonical list (boundary rows carry cos/sin theta, even bulk sites are
/// antidiagonal phase selectors, odd bulk sites carry cos/sin columns).
MpsChain bub_sites(const std::vector<std::pair<double, double>> &per_pair);

/// Ring variant of the B-U-B pattern (exact transformed-cluster gauge; not
/// canonical for theta != pi/4).
MpsChain bub_ring(int n, const std::map<int, std::pair<double, double>> &b_assignments);

/// Connected correlator C_{a,b}(A, B) on a ring via transfer matrices, with
/// periodic renormalization of the running products. Throws IllConditioned
/// when the normalization trace underflows to zero.
double ring_correlator(const MpsChain &chain, int a, Pauli op_a, int b, Pauli op_b);

/// Raw two-point moment <A_a B_b> on a ring (no product subtraction).
double ring_moment(const MpsChain &chain, int a, Pauli op_a, int b, Pauli op_b);

/// Single-site expectation <O_a> on a ring.
double ring_expectation(const MpsChain &chain, int a, Pauli op);

/// All correlators C_{1,1+d}(A, B) for d = 1..max_d in one pass.
std::vector<double> ring_correlators_from_site1(const MpsChain &chain, Pauli op_a, Pauli op_b,
                                                int max_d);

struct CorrelationFit {
    double length = 0.0;    // L with |C| ~ exp(-2 j / L), j the pair index
    double residual = 0.0;  // rms residual of the linear fit of ln|C|
    int points_used = 0;
};

/// Least-squares fit of ln|C_{1,2j+1}(Z,Z)| against j over points with
/// |C| > 1e-12; L = -2 / slope. Throws InsufficientDecay with fewer than 4
/// usable points.
CorrelationFit correlation_length(const MpsChain &chain, Pauli op_a, Pauli op_b,
                                  int max_distance);

}  // namespace sloccsim

#endif
