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
// Dense statevector simulator. Qubit ordering convention: site 1 is the most
// significant bit of the amplitude index, so for an n-qubit state the bit of
// site s inside an index is (n - s), counting from the least significant bit.
// All site arguments are 1-based.

#ifndef SLOCCSIM_STATEVEC_HPP
#define SLOCCSIM_STATEVEC_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sloccsim/qmath.hpp"
#include "sloccsim/rng.hpp"

namespace sloccsim {

inline constexpr int kDefaultQubitBudget = 22;

struct LatticeSpec {
    enum class Topology { Chain, Ring, Grid, Cubic, Custom };

    Topology topology = Topology::Chain;
    int n1 = 0, n2 = 0, n3 = 0;
    std::vector<std::pair<int, int>> custom_edges;
    std::map<int, Mat2> site_ops;  // default identity on unlisted sites

    static LatticeSpec chain(int n);
    static LatticeSpec ring(int n);
    static LatticeSpec grid(int rows, int cols);
    static LatticeSpec cubic(int lx, int ly, int lz);
    static LatticeSpec custom(int n, std::vector<std::pair<int, int>> edges);

    int num_sites() const;
    // Grid site at (row, col), 1-based, row-major.
    int grid_site(int row, int col) const;
    int cubic_site(int x, int y, int z) const;
    // Nearest-neighbour pairs (i < j), no self-loops.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int site) const;
};

class PureState {
  public:
    PureState() = default;
    PureState(int n, std::vector<cplx> amps);

    static PureState product_plus(int n);
    static PureState basis_state(int n, uint64_t index);

    int n() const { return n_; }
    uint64_t dim() const { return uint64_t{1} << n_; }
    const std::vector<cplx> &amps() const { return amps_; }
    std::vector<cplx> &amps() { return amps_; }
    cplx amp(uint64_t idx) const { return amps_[idx]; }

    int bit_of(uint64_t idx, int site) const { return (idx >> (n_ - site)) & 1; }

    void apply_1q(int site, const Mat2 &m);
    void apply_cz(int a, int b);
    void apply_cp(int a, int b, double phi);
    void apply_pauli(int site, Pauli p);

    double norm_sq() const;
    void normalize();
    cplx inner(const PureState &other) const;  // <this|other>

  private:
    int n_ = 0;
    std::vector<cplx> amps_;
};

/// Orthonormal single-qubit measurement basis. The Bloch-parameter
/// constructor uses the convention that phi = pi is the equatorial family:
/// basis(xi, pi) on a cluster wire teleports H Rz(xi) on outcome 0 and
/// X H Rz(xi) on outcome 1.
struct MeasurementBasis {
    Vec2 m0;
    Vec2 m1;
    std::optional<double> xi;
    std::optional<double> phi;

    // Normalizes both vectors; throws SingularInput if they are not
    // orthogonal to within 1e-12 after normalization.
    static MeasurementBasis from_vectors(const Vec2 &a, const Vec2 &b);
    static MeasurementBasis bloch(double xi, double phi);
    static MeasurementBasis xy_plane(double xi) { return bloch(xi, M_PI); }
    static MeasurementBasis computational();
    static MeasurementBasis plus_minus() { return xy_plane(0.0); }
    static MeasurementBasis pauli_y_eigenbasis();

    MeasurementBasis rotated(const Mat2 &u) const;  // {u m0, u m1}
};

struct MeasureResult {
    int outcome = 0;
    double prob = 0.0;
    PureState post;  // normalized; the measured qubit is removed
};

/// Unnormalized projection <bra|_site applied to the state; the measured
/// qubit is removed and higher-numbered sites shift down by one.
PureState project_site(const PureState &state, int site, const Vec2 &bra);

MeasureResult measure_sampled(const PureState &state, int site, const MeasurementBasis &basis,
                              Rng &rng);
/// Forces the requested branch; throws ZeroProbabilityBranch if its Born
/// probability is below 1e-14.
MeasureResult measure_forced(const PureState &state, int site, const MeasurementBasis &basis,
                             int outcome);

struct ClusterInput {
    int site = 1;
    Vec2 psi{1.0, 0.0};
};

/// CZ over all lattice edges applied to |+>^n (with |psi> at the designated
/// input site when given), then the per-site operators. Throws TooManyQubits
/// when the site count exceeds the budget.
PureState build_cluster(const LatticeSpec &spec, std::optional<ClusterInput> input = std::nullopt,
                        int qubit_budget = kDefaultQubitBudget);

/// prod CP(phi_ij) over the listed edges applied to |+>^n.
PureState weighted_graph_state(int n, const std::vector<std::tuple<int, int, double>> &weights,
                               int qubit_budget = kDefaultQubitBudget);

Eigen::MatrixXcd reduced_density(const PureState &state, const std::vector<int> &sites);

/// Descending singular values of the amplitude matrix reshaped across the
/// bipartition (left sites vs rest); squares sum to 1 for a normalized state.
std::vector<double> schmidt_spectrum(const PureState &state, const std::vector<int> &left);

double expectation(const PureState &state, const std::vector<std::pair<int, Pauli>> &ops);

/// C_{a,b}(A, B) = <A_a B_b> - <A_a><B_b>.
double two_point(const PureState &state, int a, Pauli op_a, int b, Pauli op_b);

double fidelity(const PureState &a, const PureState &b);

/// Tomographic extraction of a teleported operator: the protocol is run once
/// per logical basis input and the output-site branch amplitudes are
/// assembled column-wise, so the result equals the teleported map up to one
/// global complex scale.
struct ForcedStep {
    int site = 0;
    MeasurementBasis basis;
    int outcome = 0;
};

struct ExtractionPlan {
    LatticeSpec lattice;
    std::vector<int> input_sites;   // one or two sites
    std::vector<int> output_sites;  // same count as input_sites
    std::vector<ForcedStep> steps;  // must measure every non-output site
    int qubit_budget = kDefaultQubitBudget;
};

Mat2 extract_teleported(const ExtractionPlan &plan);
Mat4 extract_teleported_2q(const ExtractionPlan &plan);

// Amplitude dumps for debugging. The binary format starts with the 8-byte
// magic "SLSVAMP1", a little-endian uint64 qubit count, then 2^n pairs of
// little-endian float64 (re, im) in index order.
void dump_amplitudes_csv(const PureState &state, const std::string &path);
void dump_amplitudes_binary(const PureState &state, const std::string &path);

}  // namespace sloccsim

#endif
