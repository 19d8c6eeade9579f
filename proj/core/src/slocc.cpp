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

#include "sloccsim/slocc.hpp"

#include <cmath>

namespace sloccsim {

namespace {
const cplx kI{0.0, 1.0};
}

SloccOp classify(const Mat2 &s) {
    if (!s.is_finite()) {
        throw SingularInput("classify: non-finite entries");
    }
    double fn = s.frobenius_norm();
    if (fn == 0.0 || std::abs(s.det()) <= 1e-12 * fn * fn) {
        throw SingularInput("classify: operator not invertible");
    }
    SloccOp op;
    op.matrix = s;
    op.svd = svd2(s);
    op.theta = op.svd.theta;

    Mat2 norm = s * (1.0 / fn);
    Mat2 t = norm.adjoint() * norm;  // Hermitian, trace 1
    op.is_n_type = std::abs(t(0, 0) - t(1, 1)) <= kTolClassify;
    op.is_b_type = std::abs(t(0, 1)) <= kTolClassify;
    op.is_unitary = std::abs(op.theta - M_PI / 4.0) <= kTolClassify;
    return op;
}

SloccOp identity_op() { return classify(Mat2::identity()); }

Mat2 n_type_matrix(double theta, double gamma) {
    return Mat2::diag(std::cos(theta), std::sin(theta)) * hadamard() * rz(gamma - M_PI / 2.0);
}

Mat2 b_type_matrix(double theta, double gamma) {
    return Mat2::diag(std::cos(theta), std::sin(theta)) * rz(gamma);
}

Mat2 NTypeCanon::reconstruct() const {
    return u * Mat2::diag(std::cos(theta), std::sin(theta)) * hadamard() * rz(gamma);
}

Mat2 BTypeCanon::reconstruct() const {
    return u * Mat2::diag(std::cos(theta), std::sin(theta));
}

NTypeCanon n_canon(const SloccOp &op) {
    if (!op.is_n_type) {
        throw NotNType("n_canon: operator is not N-type");
    }
    NTypeCanon out;
    out.theta = op.theta;
    const Mat2 &v = op.svd.v;

    if (op.is_unitary) {
        // Proportional-to-unitary branch of the dichotomy: gamma is a free
        // convention, fixed to 0; u absorbs the whole operator.
        out.theta = M_PI / 4.0;
        out.gamma = 0.0;
        Mat2 d_inv = Mat2::diag(std::sqrt(2.0), std::sqrt(2.0));
        out.u = op.matrix * (1.0 / op.svd.kappa) * rz(-out.gamma) * hadamard() * d_inv;
        return out;
    }

    // Non-unitary N-type: v must equal diag-phases * H * Rz(gamma), which
    // forces all |v_ij| = 1/sqrt(2). gamma is read from the first row and
    // the residual phases are folded into u.
    double g = std::arg(v(0, 1)) - std::arg(v(0, 0));
    out.gamma = g < 0.0 ? g + 2.0 * M_PI : g;
    Mat2 d_inv = Mat2::diag(1.0 / std::cos(out.theta), 1.0 / std::sin(out.theta));
    out.u = op.matrix * (1.0 / op.svd.kappa) * rz(-out.gamma) * hadamard() * d_inv;
    if (!is_unitary(out.u, 1e-8)) {
        throw NotNType("n_canon: residual factor is not unitary");
    }
    return out;
}

BTypeCanon b_canon(const SloccOp &op) {
    if (!op.is_b_type) {
        throw NotBType("b_canon: operator is not B-type");
    }
    // Polar decomposition in the original basis order: S^dag S is diagonal
    // for a B-type operator, so |S| = sqrt(diag(S^dag S)) and u = S |S|^{-1}.
    // theta can land anywhere in (0, pi/2); eps_im is negative past pi/4.
    Mat2 t = op.matrix.adjoint() * op.matrix;
    double d0 = std::sqrt(t(0, 0).real());
    double d1 = std::sqrt(t(1, 1).real());
    BTypeCanon out;
    out.theta = std::atan2(d1, d0);
    out.eps_im = std::log(d0 / d1);
    double kappa = std::hypot(d0, d1);
    Mat2 d_inv = Mat2::diag(kappa / d0, kappa / d1);
    out.u = op.matrix * (1.0 / kappa) * d_inv;
    if (!is_unitary(out.u, 1e-8)) {
        throw NotBType("b_canon: residual factor is not unitary");
    }
    return out;
}

double strategy1_byproduct_angle(double theta, double gamma, double xi) {
    double c = std::cos(2.0 * theta);
    double num = 1.0 - c * std::cos(gamma - xi);
    double den = c * std::sin(gamma - xi);
    return 2.0 * std::atan2(num, den);
}

std::pair<double, double> strategy1_probs(double theta, double xi) {
    double p0 = 0.5 * (1.0 + std::cos(2.0 * theta) * std::cos(2.0 * xi));
    return {p0, 1.0 - p0};
}

double strategy1_basis_polar_xi(double theta, double gamma, double xi) {
    double c = std::cos(2.0 * theta);
    double cg = std::cos(gamma - xi);
    double cos2x = (cg - c) / (1.0 - cg * c);
    cos2x = std::clamp(cos2x, -1.0, 1.0);
    return 0.5 * std::acos(cos2x);
}

std::pair<double, double> strategy1_probs_gate(double theta, double gamma, double xi) {
    double c = std::cos(2.0 * theta);
    double s2 = std::sin(2.0 * theta);
    double p0 = s2 * s2 / (2.0 * (1.0 - c * std::cos(gamma - xi)));
    return {p0, 1.0 - p0};
}

Mat2 Strategy2Gate::matrix() const {
    Mat2 m = hadamard() * rz(rz_angle);
    return x_byproduct ? pauli_x() * m : m;
}

Strategy2Gate strategy2_gate(double theta, double beta_prime, int m) {
    Strategy2Gate g;
    g.rz_angle = cplx{beta_prime, 0.0} + kI * std::log(1.0 / std::tan(theta));
    g.x_byproduct = (m == 1);
    return g;
}

}  // namespace sloccsim
