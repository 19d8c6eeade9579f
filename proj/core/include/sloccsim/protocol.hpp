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
// Executable measurement protocols on 1D wires and small 2D/3D fragments:
// Strategy I/II basis construction, the repeat-until-success rotation on
// N-U-N chains, link decoupling and the entangling gate on the 2D lattice,
// the probabilistic B-U-B rotation, and the vertical-chain B-undo walk.

#ifndef SLOCCSIM_PROTOCOL_HPP
#define SLOCCSIM_PROTOCOL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sloccsim/qmath.hpp"
#include "sloccsim/rng.hpp"
#include "sloccsim/slocc.hpp"
#include "sloccsim/statevec.hpp"

namespace sloccsim {

/// Target rotation Rx(zeta) Rz(eta) Rx(xi).
struct RotationTarget {
    double zeta = 0.0;
    double eta = 0.0;
    double xi = 0.0;

    Mat2 matrix() const;
    // The four wire segments, each teleported as H Rz(angle), first segment
    // applied first: {0, xi, eta, zeta}.
    std::array<double, 4> segments() const { return {0.0, xi, eta, zeta}; }
};

struct RecordEntry {
    int site = 0;
    std::string label;        // "attempt", "advance", "h-cancel", "error-cancel", ...
    double basis_angle = 0.0; // real basis parameter fed to the basis builder
    int outcome = 0;
    double prob = 0.0;        // Born probability of this outcome
    MeasurementBasis basis;   // the exact basis used (for replay and audits)
};

struct MeasurementRecord {
    std::vector<RecordEntry> entries;
    int pauli_x = 0;  // final byproduct word X^{pauli_x} Z^{pauli_z} (up to phase)
    int pauli_z = 0;

    double path_probability() const;
};

enum class RunStatus { Success, ChainExhausted };

/// How outcomes are decided: sampled with a seed, or forced from a list
/// (shorter lists are padded by sampling from the entry seed).
struct OutcomePolicy {
    std::optional<std::vector<int>> forced;
    uint64_t seed = 0;

    static OutcomePolicy sample(uint64_t seed);
    static OutcomePolicy force(std::vector<int> outcomes);
};

/// Strategy I measurement basis for gate angle xi:
///   { (S^dag)^{-1} Rz(-xi) H |0>,  S Rz(-xi) H |1> },
/// normalized. Outcome 0 teleports H Rz(xi); outcome 1 teleports
/// Rx(mu') H Rz(xi).
MeasurementBasis strategy1_basis(const SloccOp &op, double xi);

/// Strategy II basis { U U' |0>, U U' |1> } with U' = Rz(pi/2 - beta') Rx(pi/2)
/// in this codebase's rotation convention, chosen so outcome m teleports
/// X^m H Rz(beta' + i ln cot theta) exactly.
MeasurementBasis strategy2_basis(const BTypeCanon &b, double beta_prime);

/// Error angle for an outcome-1 Strategy I measurement in the repeat-until-
/// success chain, net of the standard Pauli-X byproduct:
///   epsilon = 2 atan2(cos 2theta cos xi1, 1 - cos 2theta sin xi1),
/// so the teleported gate is X Rx(epsilon) H Rz(xi1) up to phase and
/// epsilon(pi/4, .) = 0.
double epsilon_angle(double theta, double xi1);

/// One wire site: local operator plus role.
struct WireSite {
    Mat2 op = Mat2::identity();
    bool is_attempt_site = false;  // odd sites carrying N- or B-type operators
};

struct WireSpec {
    std::vector<WireSite> sites;  // index 0 = site 1

    // N-U-N chain: N = D(theta) H Rz(gamma) on odd sites, unitaries on even.
    static WireSpec nun_chain(int max_sites,
                              const std::vector<std::pair<double, double>> &odd_theta_gamma,
                              const std::vector<Mat2> &even_unitaries = {});
    // B-U-B chain: B = D(theta) Rz(gamma) on odd sites.
    static WireSpec bub_chain(int max_sites,
                              const std::vector<std::pair<double, double>> &odd_theta_gamma,
                              const std::vector<Mat2> &even_unitaries = {});
};

struct WireRunResult {
    MeasurementRecord record;
    RunStatus status = RunStatus::ChainExhausted;
    bool success = false;
    int sites_used = 0;
    Vec2 final_state;                 // normalized carrier after the last measurement
    std::vector<double> walker_trace; // |Im| of the pending angle after even sites
    double target_fidelity = 0.0;     // vs (Pauli word) * target * psi
};

/// Repeat-until-success single-qubit rotation on an N-U-N wire. Exact Born
/// probabilities are used at every step (the full chain, including the
/// unmeasured tail, enters through a Gram recursion).
WireRunResult nun_rotate(const WireSpec &chain, const RotationTarget &target, const Vec2 &psi,
                         const OutcomePolicy &policy);

/// Probabilistic rotation on a B-U-B wire; the pending imaginary rotation
/// component performs the random walk recorded in walker_trace. Aborts with
/// ChainExhausted when the chain runs out (no retry loop).
WireRunResult bub_rotate(const WireSpec &chain, const RotationTarget &target, const Vec2 &psi,
                         const OutcomePolicy &policy);

struct DecoupleResult {
    int outcome = 0;
    double prob = 0.0;
    PureState post;
    bool z_byproduct_on_neighbors = false;
};

/// Measures a U-transformed link qubit in the computational basis (rotated
/// by u), severing the link; outcome 1 leaves a Z byproduct on both wire
/// neighbors.
DecoupleResult nun_decouple(const PureState &state, int link_site, const Mat2 &u,
                            std::optional<int> forced, Rng *rng);

/// Vertical entangling-link fragment of the 2D lattice: wire qubits 1 and 3
/// (N-transformed, carrying the logical pair), link qubit 2 (U-transformed),
/// outputs on wire qubits 4 and 5.
struct EntangleFragment {
    SloccOp n1;
    SloccOp n3;
    Mat2 u2 = Mat2::identity();
};

/// Extracted two-qubit teleported operator for outcomes (m1, m2, m3); wire
/// measurements use Strategy I bases with xi = 0 and the link qubit the
/// u2-rotated Pauli-Y eigenbasis.
Mat4 nun_entangle(const EntangleFragment &frag, int m1, int m2, int m3);

/// Closed-form prediction
///   (Rx(mu1)^м1 X^{m1+m2} H) (x) (Rx(mu3)^m3 X^{m2+m3} H) . M13,
/// with M13 = diag(1, i, i, 1) and mu_i the Strategy I byproduct angles at
/// xi = 0.
Mat4 nun_entangle_expected(const EntangleFragment &frag, int m1, int m2, int m3);

/// diag(1, i, i, 1); related to CZ via X(x)X Rz(pi/2)(x)Rz(pi/2) M13 X(x)X.
Mat4 entangle_m13();

/// Position-dependent step probabilities of the vertical-chain walk:
///   p0 = (1 + lambda^{2k+2}) / ((1 + lambda^2)(1 + lambda^{2k})),
/// p1 = 1 - p0; outcome 1 moves the walker toward the origin.
std::pair<double, double> bundo_step_probs(double lambda, int k);

struct BundoResult {
    bool success = false;
    int steps_used = 0;             // even-site measurements consumed
    std::vector<int> walker_path;   // positions after each step, starting at 1
    MeasurementRecord record;
    double max_formula_deviation = 0.0;  // statevec mode only
};

/// Samples the walk using the closed-form step probabilities.
BundoResult bundo_vertical(double lambda, int max_even_measurements, uint64_t seed);

/// Same walk, but every step is simulated on the dense four-qubit fragment
/// state; records the worst |Born - formula| deviation seen.
BundoResult bundo_vertical_statevec(double lambda, int max_even_measurements,
                                    const OutcomePolicy &policy);

/// Born probability of outcome m on the even qubit of the fragment with the
/// root at walker position k (dense simulation; oracle for
/// bundo_step_probs).
double bundo_fragment_prob(double lambda, int k, int outcome);

/// Turnaround condition of the two-site walk analysis: both candidate moves
/// from ln tan(theta1) by +-ln tan(theta3) increase the distance from the
/// origin, i.e. |ln tan theta3| > 2 |ln tan theta1|. Over uniformly random
/// (theta1, theta3) this holds with probability ~0.315.
bool walk_turnaround_condition(double theta1, double theta3);

}  // namespace sloccsim

#endif
