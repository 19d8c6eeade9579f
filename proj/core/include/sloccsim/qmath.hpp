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

#ifndef SLOCCSIM_QMATH_HPP
#define SLOCCSIM_QMATH_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <variant>

#include "sloccsim/errors.hpp"

namespace sloccsim {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kTolAlgebra = 1e-12;

/// Single-qubit amplitude pair.
struct Vec2 {
    cplx x{0.0, 0.0};
    cplx y{0.0, 0.0};

    double norm_sq() const { return std::norm(x) + std::norm(y); }
    double norm() const { return std::sqrt(norm_sq()); }
    Vec2 normalized() const;
    cplx dot(const Vec2 &other) const;  // <this|other>, conjugates *this
};

Vec2 operator*(cplx s, const Vec2 &v);
Vec2 operator+(const Vec2 &a, const Vec2 &b);
Vec2 operator-(const Vec2 &a, const Vec2 &b);

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cplx, 4> e{};  // e[0]=a00, e[1]=a01, e[2]=a10, e[3]=a11

    Mat2() = default;
    Mat2(cplx a00, cplx a01, cplx a10, cplx a11) : e{a00, a01, a10, a11} {}

    cplx &operator()(int r, int c) { return e[2 * r + c]; }
    const cplx &operator()(int r, int c) const { return e[2 * r + c]; }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static Mat2 diag(cplx d0, cplx d1) { return {d0, 0.0, 0.0, d1}; }
    static Mat2 outer(const Vec2 &u, const Vec2 &v);  // |u><v|

    Mat2 adjoint() const;
    Mat2 transpose() const { return {e[0], e[2], e[1], e[3]}; }
    Mat2 conjugate() const;
    cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
    cplx trace() const { return e[0] + e[3]; }
    double frobenius_norm() const;
    Mat2 inverse() const;  // throws SingularInput
    bool is_finite() const;

    Mat2 operator*(const Mat2 &rhs) const;
    Vec2 operator*(const Vec2 &v) const;
    Mat2 operator+(const Mat2 &rhs) const;
    Mat2 operator-(const Mat2 &rhs) const;
    Mat2 operator*(cplx s) const;

    Eigen::Matrix2cd as_eigen() const;
    static Mat2 from_eigen(const Eigen::Matrix2cd &m);
};

Mat2 operator*(cplx s, const Mat2 &m);

bool approx_equal(const Mat2 &a, const Mat2 &b, double tol = kTolAlgebra);
bool is_unitary(const Mat2 &m, double tol = kTolAlgebra);

/// max_ij |a_ij - c*b_ij| minimized over a single complex scale c; the
/// comparison used throughout for operators that are only defined up to
/// scale and phase.
double distance_up_to_scale(const Mat2 &a, const Mat2 &b);
double distance_up_to_scale(const Mat4 &a, const Mat4 &b);

// Standard gates. rz/rx accept complex angles; with a nonzero imaginary part
// the result is intentionally non-unitary and is never renormalized here.
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 rz(cplx xi);  // diag(e^{-i xi/2}, e^{+i xi/2})
Mat2 rx(cplx xi);  // H rz(xi) H
Mat4 cz_gate();
Mat4 cp_gate(double phi);  // diag(1,1,1,e^{i phi})

enum class Pauli { I, X, Y, Z };
Mat2 pauli_matrix(Pauli p);

struct Gate {
    enum class Kind { X, Z, H, Rz, Rx, CZ, CP };
    Kind kind;
    cplx angle{0.0, 0.0};  // Rz/Rx angle or CP phase (real part)

    static Gate x() { return {Kind::X}; }
    static Gate z() { return {Kind::Z}; }
    static Gate h() { return {Kind::H}; }
    static Gate rz(cplx a) { return {Kind::Rz, a}; }
    static Gate rx(cplx a) { return {Kind::Rx, a}; }
    static Gate cz() { return {Kind::CZ}; }
    static Gate cp(double phi) { return {Kind::CP, phi}; }
};

using GateMatrix = std::variant<Mat2, Mat4>;
GateMatrix gate_matrix(const Gate &g);

/// Singular value decomposition m = u * D(theta, kappa) * v with
/// D = kappa * diag(cos theta, sin theta), u and v unitary, theta in
/// (0, pi/4] (singular values in descending order) and kappa > 0.
struct Svd2 {
    Mat2 u;
    double theta = 0.0;
    double kappa = 0.0;
    Mat2 v;

    Mat2 d() const { return Mat2::diag(kappa * std::cos(theta), kappa * std::sin(theta)); }
    Mat2 reconstruct() const { return u * d() * v; }
};

/// Throws SingularInput when |det m| <= 1e-12 * ||m||_F^2.
Svd2 svd2(const Mat2 &m);

/// Kronecker product, row-major block convention: (a ⊗ b).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace sloccsim

#endif
