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

#include <gtest/gtest.h>

#include "sloccsim/rng.hpp"

using namespace sloccsim;

namespace {

Mat2 random_invertible(Rng &rng) {
    while (true) {
        Mat2 m{cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}};
        double fn = m.frobenius_norm();
        if (std::abs(m.det()) > 1e-3 * fn * fn) {
            return m;
        }
    }
}

}  // namespace

TEST(Svd2, IdentityHasEqualSingularValues) {
    Svd2 s = svd2(Mat2::identity());
    EXPECT_NEAR(s.theta, M_PI / 4.0, 1e-14);
    EXPECT_NEAR(s.kappa, std::sqrt(2.0), 1e-14);
    EXPECT_TRUE(approx_equal(s.reconstruct(), Mat2::identity(), 1e-13));
}

TEST(Svd2, DiagonalInput) {
    Svd2 s = svd2(Mat2::diag(2.0, 1.0));
    EXPECT_NEAR(s.theta, std::atan(0.5), 1e-13);
    EXPECT_NEAR(s.kappa, std::sqrt(5.0), 1e-13);
    // u and v reduce to diagonal phases for a diagonal input.
    EXPECT_LT(std::abs(s.u(0, 1)), 1e-12);
    EXPECT_LT(std::abs(s.u(1, 0)), 1e-12);
    EXPECT_LT(std::abs(s.v(0, 1)), 1e-12);
    EXPECT_LT(std::abs(s.v(1, 0)), 1e-12);
}

TEST(Svd2, RandomReconstructionProperty) {
    Rng rng(7202);
    for (int i = 0; i < 500; ++i) {
        Mat2 m = random_invertible(rng);
        Svd2 s = svd2(m);
        EXPECT_TRUE(approx_equal(s.reconstruct(), m, 1e-12));
        EXPECT_TRUE(is_unitary(s.u, 1e-12));
        EXPECT_TRUE(is_unitary(s.v, 1e-12));
        EXPECT_GT(s.theta, 0.0);
        EXPECT_LE(s.theta, M_PI / 4.0 + 1e-15);
        EXPECT_GT(s.kappa, 0.0);
    }
}

TEST(Svd2, NearUnitaryStaysAccurate) {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        // Random unitary perturbed at the 1e-9 level.
        Svd2 base = svd2(random_invertible(rng));
        Mat2 u = base.u;
        Mat2 m = u + 1e-9 * random_invertible(rng);
        Svd2 s = svd2(m);
        EXPECT_TRUE(approx_equal(s.reconstruct(), m, 1e-12));
    }
}

TEST(Svd2, SingularInputThrows) {
    EXPECT_THROW(svd2(Mat2{1.0, 1.0, 1.0, 1.0}), SingularInput);
    EXPECT_THROW(svd2(Mat2::zero()), SingularInput);
}

TEST(Gates, HadamardIsXPlusZOverSqrt2) {
    Mat2 expect = (1.0 / std::sqrt(2.0)) * (pauli_x() + pauli_z());
    EXPECT_TRUE(approx_equal(hadamard(), expect, 1e-15));
}

TEST(Gates, RzPiIsZUpToPhase) {
    EXPECT_LT(distance_up_to_scale(rz(M_PI), pauli_z()), 1e-14);
}

TEST(Gates, ImaginaryRzGivesCotangentScaling) {
    double theta = M_PI / 6.0;
    double cot = 1.0 / std::tan(theta);
    Mat2 m = rz(cplx{0.0, std::log(cot)});
    Mat2 expect = Mat2::diag(std::sqrt(cot), 1.0 / std::sqrt(cot));
    EXPECT_LT(distance_up_to_scale(m, expect), 1e-13);
}

TEST(Gates, XhEqualsHz) {
    EXPECT_TRUE(approx_equal(pauli_x() * hadamard(), hadamard() * pauli_z(), 1e-15));
}

TEST(Gates, RzCommutesThroughXWithFlippedAngle) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        cplx a{rng.uniform(-6, 6), rng.uniform(-2, 2)};
        EXPECT_TRUE(approx_equal(rz(a) * pauli_x(), pauli_x() * rz(-a), 1e-12));
    }
}

TEST(Gates, RotationsWithRealAngleAreUnitary) {
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        double a = rng.uniform(-6, 6);
        EXPECT_TRUE(is_unitary(rz(a)));
        EXPECT_TRUE(is_unitary(rx(a)));
    }
}

TEST(Gates, CpPiEqualsCzExactly) {
    EXPECT_EQ((cp_gate(M_PI) - cz_gate()).norm(), 0.0);
}

TEST(Gates, GateMatrixVariant) {
    EXPECT_TRUE(std::holds_alternative<Mat2>(gate_matrix(Gate::h())));
    EXPECT_TRUE(std::holds_alternative<Mat4>(gate_matrix(Gate::cz())));
    Mat2 m = std::get<Mat2>(gate_matrix(Gate::rz(cplx{1.0, 0.0})));
    EXPECT_TRUE(approx_equal(m, rz(1.0), 1e-15));
}

TEST(Kron, IdentityTensorIdentity) {
    Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
    EXPECT_NEAR((kron(i2, i2) - Eigen::MatrixXcd::Identity(4, 4)).norm(), 0.0, 0.0);
}

TEST(Kron, ZTensorZOnBasis11) {
    Eigen::MatrixXcd z = pauli_z().as_eigen();
    Eigen::MatrixXcd zz = kron(z, z);
    EXPECT_NEAR(zz(3, 3).real(), 1.0, 0.0);
}

TEST(Kron, HTensorHSquaredIsIdentity) {
    Eigen::MatrixXcd h = hadamard().as_eigen();
    Eigen::MatrixXcd hh = kron(h, h);
    EXPECT_LT((hh * hh - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-14);
}

TEST(Mat2, InverseMultipliesBack) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = random_invertible(rng);
        EXPECT_TRUE(approx_equal(m * m.inverse(), Mat2::identity(), 1e-10));
    }
}

TEST(Mat2, DistanceUpToScaleIgnoresPhaseAndScale) {
    Rng rng(12);
    Mat2 m = random_invertible(rng);
    cplx c = 3.7 * std::exp(cplx{0.0, 1.2});
    EXPECT_LT(distance_up_to_scale(c * m, m), 1e-13);
    EXPECT_GT(distance_up_to_scale(m + Mat2::diag(0.5, 0.0), m), 1e-3);
}
