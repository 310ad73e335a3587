#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <Eigen/SVD>

#include "diracspec/disc_solver.hpp"
#include "diracspec/errors.hpp"

using namespace diracspec;

namespace {

double oracle_root(double lo, double hi, double b) {
    auto f = [b](double k) { return boost::math::cyl_bessel_j(1, k) - b * boost::math::cyl_bessel_j(0, k); };
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double relative_sigma_min(const Eigen::MatrixXcd& m) {
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto s = svd.singularValues();
    return s(s.size() - 1) / s(0);
}

}  // namespace

TEST(DiscSolver, SecularRootOfGroundMode) {
    // eta = 0, sgn = +1, m = 0: J_1(k) = J_0(k)
    const double k = oracle_root(0.5, 2.0, 1.0);
    const auto roots = secular_roots(0.0, 1, 3.0);
    bool found = false;
    for (const auto& r : roots)
        if (r.m == 0 && std::abs(r.k - k) < 1e-11) found = true;
    EXPECT_TRUE(found);
    EXPECT_NEAR(roots.front().k, k, 1e-11);
}

TEST(DiscSolver, ZigzagIsRefused) {
    EXPECT_THROW(secular_roots(1.5707963267948966, 1, 5.0), ZigzagError);
    const BoundarySpec z = BoundarySpec::unit_circle(EtaProfile::constant(1.5707963267948966));
    EXPECT_THROW(scan_spectrum(z, 1, ScanOptions{}), ZigzagError);
}

TEST(DiscSolver, ConstantEtaMatrixIsDiagonal) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.4));
    const Eigen::MatrixXcd m = assemble_boundary_matrix(3.7, 1, c, 30);
    Eigen::MatrixXcd off = m;
    off.diagonal().setZero();
    EXPECT_EQ(off.cwiseAbs().maxCoeff(), 0.0);
    // diagonal entry n, before column scaling: sgn J_{n+1} - B J_n
    const double b = b_of(c, 0.0);
    const BoundarySystem sys = boundary_system(3.7, 1, b_coefficients(c, 60), 30);
    for (int n = -30; n <= 30; ++n) {
        const double want = boost::math::cyl_bessel_j(n + 1, 3.7) - b * boost::math::cyl_bessel_j(n, 3.7);
        EXPECT_NEAR(sys.matrix(n + 30, n + 30).real() / sys.column_scale(n + 30), want, 1e-13);
    }
}

TEST(DiscSolver, VariableEtaMatrixIsNotHermitian) {
    const BoundarySpec v = BoundarySpec::unit_circle(EtaProfile::fourier(0.0, {0.2}, {}));
    const Eigen::MatrixXcd m = assemble_boundary_matrix(2.0, 1, v, 24);
    EXPECT_GT(std::abs(m(24, 25)), 1e-6);
    EXPECT_GT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(DiscSolver, SingularAtSecularRoot) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    const double k = oracle_root(0.5, 2.0, 1.0);
    EXPECT_LE(relative_sigma_min(assemble_boundary_matrix(k, 1, c, 24)), 1e-10);
    EXPECT_GT(relative_sigma_min(assemble_boundary_matrix(k + 0.1, 1, c, 24)), 1e-4);
    EXPECT_THROW(assemble_boundary_matrix(10.0, 1, c, 25), std::invalid_argument);
}

TEST(DiscSolver, ScanMatchesSecularOracleBothSigns) {
    const double eta = 0.4;
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(eta));
    for (int sgn : {1, -1}) {
        ScanOptions opt;
        opt.k_max = 6.0;
        const SpectralResult res = scan_spectrum(c, sgn, opt);
        const auto roots = secular_roots(eta, sgn, 6.0);
        int total = 0;
        for (const auto& p : res.pairs) {
            total += p.multiplicity;
            EXPECT_EQ(p.sgn, sgn);
            EXPECT_NEAR(p.energy, sgn * p.k, 0.0);
            double err = 1e300;
            for (const auto& r : roots) err = std::min(err, std::abs(r.k - p.k));
            EXPECT_LE(err, 1e-8);
            EXPECT_LE(p.boundary_residual, 1e-6);
            EXPECT_LE(p.interior_residual, 1e-8);
        }
        EXPECT_EQ(total, static_cast<int>(roots.size()));
        EXPECT_TRUE(res.rejected.empty());
    }
}

TEST(DiscSolver, VariableProfileResiduals) {
    const BoundarySpec v = BoundarySpec::unit_circle(EtaProfile::fourier(0.0, {}, {0.3}));
    ScanOptions opt;
    opt.k_max = 4.0;
    const SpectralResult res = scan_spectrum(v, 1, opt);
    ASSERT_FALSE(res.pairs.empty());
    for (const auto& p : res.pairs) {
        EXPECT_LE(p.boundary_residual, 1e-6);
        EXPECT_NEAR(boundary_residual(p.field, v, 512), p.boundary_residual, 1e-8);
    }
}

TEST(DiscSolver, SymmetryDefectForConstantSpinor) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    const PolynomialSpinor one = PolynomialSpinor::constant(1.0, 0.0);
    EXPECT_LE(symmetry_defect(one, one, c, 8, 32).full, 1e-12);
}

TEST(DiscSolver, RegularityOfConstantSpinor) {
    const DiscQuadrature q = disc_quadrature(8, 16);
    EXPECT_NEAR(regularity_ratio(PolynomialSpinor::constant(1.0, 0.5), q), 1.0, 1e-14);
}

TEST(DiscSolver, TraceProfileSaturation) {
    const SpinorTrace band(FourierVector::basis(3, 64), FourierVector::basis(-2, 64));
    const TraceProfile tp = trace_sobolev_profile(band);
    EXPECT_TRUE(tp.saturated);
    EXPECT_EQ(tp.last_increase, 0.0);

    FourierVector h(256);
    for (int n = -256; n <= 256; ++n) h.at(n) = n == 0 ? 1.0 : 1.0 / std::abs(n);
    EXPECT_FALSE(trace_sobolev_profile(SpinorTrace(h, FourierVector(256))).saturated);

    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    ScanOptions opt;
    opt.k_max = 2.0;
    const SpectralResult res = scan_spectrum(c, 1, opt);
    ASSERT_FALSE(res.pairs.empty());
    EXPECT_TRUE(trace_sobolev_profile(res.pairs.front().field.trace()).saturated);
}

TEST(DiscSolver, RefineAtDoubledBandwidth) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    const double k = oracle_root(0.5, 2.0, 1.0);
    const Eigenpair p = refine_eigenpair(c, 1, k + 1e-3, 48);
    EXPECT_NEAR(p.k, k, 1e-10);
    EXPECT_THROW(refine_eigenpair(c, 1, 2.0, 48, 0.01), ConvergenceError);
}
