#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "diracspec/spinor_algebra.hpp"

using namespace diracspec;

namespace {

const cplx I{0.0, 1.0};

void expect_matrix(const Mat2& m, const Mat2& want, double tol = 0.0) {
    EXPECT_LE(max_abs(m - want), tol) << m << "\nexpected\n" << want;
}

}  // namespace

TEST(SpinorAlgebra, PauliMatrices) {
    Mat2 s1, s3;
    s1 << 0, 1, 1, 0;
    s3 << 1, 0, 0, -1;
    expect_matrix(pauli(1), s1);
    expect_matrix(pauli(3), s3);
    expect_matrix(commutator(pauli(1), pauli(2)), 2.0 * I * pauli(3));
    EXPECT_THROW(pauli(0), std::out_of_range);
    EXPECT_THROW(pauli(4), std::out_of_range);
}

TEST(SpinorAlgebra, AEtaSpecialAngles) {
    // t = (0, 1) is the tangent i
    BoundaryFrame f;
    f.normal = 1.0;
    f.tangent = I;
    f.eta = 0.0;
    expect_matrix(a_eta(f), pauli(2), 1e-16);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int i = 0; i < 20; ++i) {
        const BoundaryFrame g = frame_from_angle(ang(rng), 1.5707963267948966);
        expect_matrix(a_eta(g), pauli(3), 1e-15);
    }
}

TEST(SpinorAlgebra, AEtaEigenvaluesAgainstClosedForm) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = a_eta(frame_from_angle(ang(rng), ang(rng)));
        // hermitian 2x2: lambda = (tr +- sqrt(tr^2 - 4 det)) / 2
        const cplx tr = a.trace(), det = a.determinant();
        const cplx disc = std::sqrt(tr * tr - 4.0 * det);
        const double l1 = ((tr + disc) / 2.0).real(), l2 = ((tr - disc) / 2.0).real();
        EXPECT_NEAR(std::max(l1, l2), 1.0, 1e-14);
        EXPECT_NEAR(std::min(l1, l2), -1.0, 1e-14);
        Eigen::SelfAdjointEigenSolver<Mat2> es(a);
        EXPECT_NEAR(es.eigenvalues()(0), -1.0, 1e-14);
        EXPECT_NEAR(es.eigenvalues()(1), 1.0, 1e-14);
    }
}

TEST(SpinorAlgebra, ProjectorAtZigzagAngle) {
    Mat2 want;
    want << 1, 0, 0, 0;
    expect_matrix(proj_pm(frame_from_angle(0.3, 1.5707963267948966), +1), want, 1e-16);
    EXPECT_THROW(proj_pm(frame_from_angle(0.0, 0.0), 0), std::invalid_argument);
}

TEST(SpinorAlgebra, ProjectorIdentitiesAtRandomFrames) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    for (int i = 0; i < 500; ++i) {
        const BoundaryFrame f = frame_from_angle(ang(rng), ang(rng));
        const Mat2 p = proj_pm(f, +1), m = proj_pm(f, -1);
        EXPECT_LE(max_abs(p * p - p), 1e-15);
        EXPECT_NEAR(p.trace().real(), 1.0, 1e-15);
        EXPECT_NEAR(p.trace().imag(), 0.0, 1e-15);
        EXPECT_LE(max_abs(p * m), 1e-15);
        const Mat2 sn = sigma_dot_n(f);
        EXPECT_LE(max_abs(anticommutator(a_eta(f), sn)), 1e-15);
        EXPECT_LE(max_abs(p * sn - sn * m), 1e-15);
    }
}

TEST(SpinorAlgebra, SigmaDotN) {
    expect_matrix(sigma_dot_n(cplx{1.0, 0.0}), pauli(1));
    expect_matrix(sigma_dot_n(I), pauli(2));
}
