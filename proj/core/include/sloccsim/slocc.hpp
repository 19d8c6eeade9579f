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
// Classification of invertible local (SLOCC) operators into N-type
// (norm-preserving on the computational basis: <0|S+S|0> = <1|S+S|1>) and
// B-type (orthogonality-preserving: S+S diagonal), together with the closed
// forms attached to the two gate-teleportation strategies.

#ifndef SLOCCSIM_SLOCC_HPP
#define SLOCCSIM_SLOCC_HPP

#include "sloccsim/qmath.hpp"

namespace sloccsim {

inline constexpr double kTolClassify = 1e-10;

struct SloccOp {
    Mat2 matrix;
    Svd2 svd;          // cached decomposition of `matrix`
    double theta = 0.0;  // svd.theta, in (0, pi/4]
    bool is_n_type = false;
    bool is_b_type = false;
    bool is_unitary = false;
};

/// Computes the class flags from S+S on the Frobenius-normalized operator so
/// the decision is scale-free. Throws SingularInput.
SloccOp classify(const Mat2 &s);

SloccOp identity_op();

/// N-type operator for a (theta, gamma) assignment: D(theta) H Rz(gamma - pi/2).
/// gamma is measured so that a single transformed site on a ring yields the
/// second-neighbour correlator C_{i-1,i+1}(Z,Z) = cos 2theta sin gamma.
Mat2 n_type_matrix(double theta, double gamma);

/// B-type operator for a (theta, gamma) assignment: D(theta) Rz(gamma).
Mat2 b_type_matrix(double theta, double gamma);

/// Canonical form S ~ u * D(theta) * H * Rz(gamma), u unitary, up to a
/// complex scale. For operators proportional to a unitary, gamma = 0 by
/// convention and u absorbs everything.
struct NTypeCanon {
    Mat2 u;
    double theta = 0.0;
    double gamma = 0.0;

    Mat2 reconstruct() const;  // u * D(theta) * H * Rz(gamma), unit kappa
};

/// Canonical form S ~ u * D(theta), equivalently u * Rz(i ln cot theta) up
/// to scale; eps_im = ln cot theta is the imaginary rotation angle. theta is
/// read from the polar factor in the original basis order, so it covers
/// (0, pi/2) and eps_im is negative past pi/4.
struct BTypeCanon {
    Mat2 u;
    double theta = 0.0;
    double eps_im = 0.0;

    Mat2 reconstruct() const;  // u * D(theta), unit kappa
};

NTypeCanon n_canon(const SloccOp &op);  // throws NotNType
BTypeCanon b_canon(const SloccOp &op);  // throws NotBType

/// Byproduct angle mu' for Strategy I, outcome 1:
///   tan(mu'/2) = (1 - cos 2theta cos(gamma - xi)) / (cos 2theta sin(gamma - xi)),
/// branch fixed so the teleported operator equals Rx(mu') H Rz(xi). The
/// unitary limit theta = pi/4 returns pi (a plain Pauli X byproduct).
double strategy1_byproduct_angle(double theta, double gamma, double xi);

/// Outcome probabilities (p0, p1) for a Strategy I measurement whose basis
/// ray sits at polar angle 2*xi in the frame where the measured qubit's
/// reduced density matrix is diagonal:
///   p0 = (1 + cos 2theta cos 2xi) / 2.
/// See strategy1_basis_polar_xi for the conversion from the gate angle.
std::pair<double, double> strategy1_probs(double theta, double xi);

/// Polar half-angle of the Strategy I basis ray for gate angle xi, i.e. the
/// value to feed strategy1_probs so it returns the Born probabilities of the
/// basis that teleports H Rz(xi):
///   cos(2 xi_polar) = (cos(gamma - xi) - cos 2theta) / (1 - cos(gamma - xi) cos 2theta).
double strategy1_basis_polar_xi(double theta, double gamma, double xi);

/// Born probabilities of the Strategy I basis in the gate parametrization:
///   p0 = sin^2 2theta / (2 (1 - cos 2theta cos(gamma - xi))).
std::pair<double, double> strategy1_probs_gate(double theta, double gamma, double xi);

/// Strategy II teleported gate descriptor: M = X^m H Rz(beta' + i ln cot theta).
struct Strategy2Gate {
    cplx rz_angle;       // beta' + i ln cot(theta)
    bool x_byproduct;    // true when m = 1

    Mat2 matrix() const;  // X^m * H * Rz(rz_angle)
};

Strategy2Gate strategy2_gate(double theta, double beta_prime, int m);

}  // namespace sloccsim

#endif
