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

#include "sloccsim/qmath.hpp"

#include <cmath>

namespace sloccsim {

namespace {
const cplx kI{0.0, 1.0};
}

Vec2 Vec2::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw SingularInput("cannot normalize a zero vector");
    }
    return {x / n, y / n};
}

cplx Vec2::dot(const Vec2 &other) const {
    return std::conj(x) * other.x + std::conj(y) * other.y;
}

Vec2 operator*(cplx s, const Vec2 &v) { return {s * v.x, s * v.y}; }
Vec2 operator+(const Vec2 &a, const Vec2 &b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2 &a, const Vec2 &b) { return {a.x - b.x, a.y - b.y}; }

Mat2 Mat2::outer(const Vec2 &u, const Vec2 &v) {
    return {u.x * std::conj(v.x), u.x * std::conj(v.y), u.y * std::conj(v.x),
            u.y * std::conj(v.y)};
}

Mat2 Mat2::adjoint() const {
    return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
}

Mat2 Mat2::conjugate() const {
    return {std::conj(e[0]), std::conj(e[1]), std::conj(e[2]), std::conj(e[3])};
}

double Mat2::frobenius_norm() const {
    return std::sqrt(std::norm(e[0]) + std::norm(e[1]) + std::norm(e[2]) + std::norm(e[3]));
}

Mat2 Mat2::inverse() const {
    cplx d = det();
    double scale = frobenius_norm();
    if (std::abs(d) <= 1e-12 * scale * scale) {
        throw SingularInput("matrix is singular to working precision");
    }
    return {e[3] / d, -e[1] / d, -e[2] / d, e[0] / d};
}

bool Mat2::is_finite() const {
    for (const auto &z : e) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

Mat2 Mat2::operator*(const Mat2 &r) const {
    return {e[0] * r.e[0] + e[1] * r.e[2], e[0] * r.e[1] + e[1] * r.e[3],
            e[2] * r.e[0] + e[3] * r.e[2], e[2] * r.e[1] + e[3] * r.e[3]};
}

Vec2 Mat2::operator*(const Vec2 &v) const {
    return {e[0] * v.x + e[1] * v.y, e[2] * v.x + e[3] * v.y};
}

Mat2 Mat2::operator+(const Mat2 &r) const {
    return {e[0] + r.e[0], e[1] + r.e[1], e[2] + r.e[2], e[3] + r.e[3]};
}

Mat2 Mat2::operator-(const Mat2 &r) const {
    return {e[0] - r.e[0], e[1] - r.e[1], e[2] - r.e[2], e[3] - r.e[3]};
}

Mat2 Mat2::operator*(cplx s) const { return {e[0] * s, e[1] * s, e[2] * s, e[3] * s}; }

Mat2 operator*(cplx s, const Mat2 &m) { return m * s; }

Eigen::Matrix2cd Mat2::as_eigen() const {
    Eigen::Matrix2cd m;
    m << e[0], e[1], e[2], e[3];
    return m;
}

Mat2 Mat2::from_eigen(const Eigen::Matrix2cd &m) {
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

bool approx_equal(const Mat2 &a, const Mat2 &b, double tol) {
    for (int i = 0; i < 4; ++i) {
        if (std::abs(a.e[i] - b.e[i]) > tol) {
            return false;
        }
    }
    return true;
}

bool is_unitary(const Mat2 &m, double tol) {
    return approx_equal(m.adjoint() * m, Mat2::identity(), tol);
}

double distance_up_to_scale(const Mat2 &a, const Mat2 &b) {
    // Least-squares optimal scale c = <b, a> / <b, b>.
    cplx num{0.0, 0.0};
    double den = 0.0;
    for (int i = 0; i < 4; ++i) {
        num += std::conj(b.e[i]) * a.e[i];
        den += std::norm(b.e[i]);
    }
    if (den == 0.0) {
        return a.frobenius_norm();
    }
    cplx c = num / den;
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(a.e[i] - c * b.e[i]));
    }
    // Normalize so the distance is scale-free in a.
    double ref = a.frobenius_norm();
    return ref > 0.0 ? worst / ref : worst;
}

double distance_up_to_scale(const Mat4 &a, const Mat4 &b) {
    cplx num = (b.conjugate().cwiseProduct(a)).sum();
    double den = b.squaredNorm();
    if (den == 0.0) {
        return a.norm();
    }
    cplx c = num / den;
    double worst = (a - c * b).cwiseAbs().maxCoeff();
    double ref = a.norm();
    return ref > 0.0 ? worst / ref : worst;
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 hadamard() {
    double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

Mat2 rz(cplx xi) {
    return Mat2::diag(std::exp(-kI * xi / 2.0), std::exp(kI * xi / 2.0));
}

Mat2 rx(cplx xi) { return hadamard() * rz(xi) * hadamard(); }

Mat4 cz_gate() { return cp_gate(M_PI); }

Mat4 cp_gate(double phi) {
    Mat4 m = Mat4::Identity();
    // Exact -1 for the CZ special case.
    m(3, 3) = (phi == M_PI) ? cplx{-1.0, 0.0} : std::exp(kI * phi);
    return m;
}

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return Mat2::identity();
        case Pauli::X:
            return pauli_x();
        case Pauli::Y:
            return pauli_y();
        case Pauli::Z:
            return pauli_z();
    }
    return Mat2::identity();
}

GateMatrix gate_matrix(const Gate &g) {
    switch (g.kind) {
        case Gate::Kind::X:
            return pauli_x();
        case Gate::Kind::Z:
            return pauli_z();
        case Gate::Kind::H:
            return hadamard();
        case Gate::Kind::Rz:
            return rz(g.angle);
        case Gate::Kind::Rx:
            return rx(g.angle);
        case Gate::Kind::CZ:
            return cz_gate();
        case Gate::Kind::CP:
            return cp_gate(g.angle.real());
    }
    return Mat2::identity();
}

Svd2 svd2(const Mat2 &m) {
    if (!m.is_finite()) {
        throw SingularInput("svd2: non-finite entries");
    }
    double scale = m.frobenius_norm();
    if (std::abs(m.det()) <= 1e-12 * scale * scale) {
        throw SingularInput("svd2: input not invertible to working precision");
    }

    // Eigendecomposition of the Hermitian PSD matrix T = m^dag m.
    Mat2 t = m.adjoint() * m;
    double p = t(0, 0).real();
    double r = t(1, 1).real();
    cplx q = t(0, 1);
    double mid = 0.5 * (p + r);
    double rad = std::hypot(0.5 * (p - r), std::abs(q));
    double lam_hi = mid + rad;
    double lam_lo = mid - rad;
    // PSD guard against cancellation.
    lam_lo = std::max(lam_lo, 0.0);

    double s1 = std::sqrt(lam_hi);
    double s2 = std::sqrt(lam_lo);

    Vec2 w1, w2;
    if (rad <= kTolAlgebra * mid) {
        // Equal singular values: any orthonormal pair works.
        w1 = {1.0, 0.0};
        w2 = {0.0, 1.0};
    } else if (std::abs(q) > 1e-300) {
        w1 = Vec2{q, cplx(lam_hi - p, 0.0)}.normalized();
        w2 = Vec2{-std::conj(w1.y), std::conj(w1.x)};
    } else if (p >= r) {
        w1 = {1.0, 0.0};
        w2 = {0.0, 1.0};
    } else {
        w1 = {0.0, 1.0};
        w2 = {1.0, 0.0};
    }

    Vec2 u1 = (1.0 / s1) * (m * w1);
    Vec2 u2 = (1.0 / s2) * (m * w2);
    // Re-orthonormalize u2 against u1; protects the near-degenerate case.
    u2 = u2 - u1.dot(u2) * u1;
    u2 = u2.normalized();

    Svd2 out;
    out.u = Mat2{u1.x, u2.x, u1.y, u2.y};
    // v rows are the adjoints of the right-singular vectors.
    out.v = Mat2{std::conj(w1.x), std::conj(w1.y), std::conj(w2.x), std::conj(w2.y)};
    out.kappa = std::hypot(s1, s2);
    out.theta = std::atan2(s2, s1);
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) {
        a -= 2.0 * M_PI;
    }
    if (a <= -M_PI) {
        a += 2.0 * M_PI;
    }
    return a;
}

}  // namespace sloccsim
