#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diracspec/boundary_geometry.hpp"
#include "diracspec/errors.hpp"

using namespace diracspec;

namespace {
const cplx I{0.0, 1.0};
constexpr double kHalfPi = 1.5707963267948966;
}  // namespace

TEST(BoundaryGeometry, UnitCircleFrame) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    const BoundaryFrame f = frame_at(c, 0.0);
    EXPECT_NEAR(std::abs(f.normal - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.tangent - I), 0.0, 1e-15);
    for (double th : uniform_angles(37)) {
        const BoundaryFrame g = frame_at(c, th);
        EXPECT_NEAR(std::abs(g.tangent * std::conj(g.normal) - I), 0.0, 1e-15);
    }
}

TEST(BoundaryGeometry, TangentDiscFrameAtCorner) {
    const BoundarySpec d = BoundarySpec::tangent_disc();
    EXPECT_NEAR(std::abs(d.point(0.0)), 0.0, 1e-15);
    const BoundaryFrame f = frame_at(d, 0.0);
    EXPECT_NEAR(std::abs(f.normal - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.tangent - I), 0.0, 1e-15);
}

TEST(BoundaryGeometry, BoundaryFunctionB) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    EXPECT_NEAR(b_of(c, 1.2), 1.0, 1e-15);

    // Weyl profile: eta = pi/2 - psi^2 for |psi| <= 1/2
    const BoundarySpec w = BoundarySpec::tangent_disc();
    for (double psi : {0.1, 0.2}) {
        const double eta = kHalfPi - psi * psi;
        const double direct = (1.0 - std::sin(eta)) / std::cos(eta);
        EXPECT_NEAR(b_of(w, psi), std::tan(psi * psi / 2.0), 1e-15);
        EXPECT_NEAR(b_of(w, psi), direct, 1e-12);
    }
    EXPECT_NEAR(b_of(w, 0.1), 5.0000417e-3, 1e-10);
    EXPECT_NEAR(b_of(w, 0.2), 0.0200027, 1e-7);
    EXPECT_EQ(b_of(w, 0.0), 0.0);
}

TEST(BoundaryGeometry, DivergentBRejected) {
    const BoundarySpec near = BoundarySpec::unit_circle(EtaProfile::constant(-kHalfPi + 1e-8));
    EXPECT_THROW(b_of(near, 0.0), ZigzagError);
    const BoundarySpec ok = BoundarySpec::unit_circle(EtaProfile::constant(-kHalfPi + 1e-3));
    EXPECT_NEAR(b_of(ok, 0.0), 2.0 / 1e-3, 2.0);
}

TEST(BoundaryGeometry, BetaConventions) {
    const BoundarySpec c = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    EXPECT_NEAR(std::abs(beta_of(c, 0.0, BetaConvention::v2_over_v1) - I), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(beta_of(c, 0.0, BetaConvention::v1_over_v2) + I), 0.0, 1e-15);
    const BoundarySpec v = BoundarySpec::unit_circle(EtaProfile::fourier(0.1, {0.2}, {-0.3}));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> th(0.0, 6.283185307179586);
    for (int i = 0; i < 500; ++i) {
        const double t = th(rng);
        const cplx p = beta_of(v, t, BetaConvention::v2_over_v1) * beta_of(v, t, BetaConvention::v1_over_v2);
        EXPECT_NEAR(std::abs(p - 1.0), 0.0, 1e-13);
    }
}

TEST(BoundaryGeometry, ValidateEta) {
    const auto v0 = validate_eta(BoundarySpec::unit_circle(EtaProfile::constant(0.0)));
    EXPECT_TRUE(v0.ok);
    EXPECT_EQ(v0.min_abs_cos, 1.0);
    const auto vz = validate_eta(BoundarySpec::unit_circle(EtaProfile::constant(kHalfPi)));
    EXPECT_FALSE(vz.ok);
    EXPECT_NEAR(vz.min_abs_cos, 0.0, 1e-15);
    const auto vs = validate_eta(BoundarySpec::unit_circle(EtaProfile::fourier(0.0, {}, {0.3})));
    EXPECT_TRUE(vs.ok);
    EXPECT_NEAR(vs.min_abs_cos, std::cos(0.3), 1e-12);
    EXPECT_NEAR(vs.min_abs_cos, 0.9553365, 1e-7);
}

TEST(BoundaryGeometry, WeylProfileHypotheses) {
    // B / psi^2 -> 1/2 and |dB/dpsi| <= C |psi| by sampled differences
    const BoundarySpec w = BoundarySpec::tangent_disc();
    EXPECT_NEAR(b_of(w, 1e-4) / 1e-8, 0.5, 1e-8);
    double worst = 0.0;
    for (int i = 1; i <= 2000; ++i) {
        const double psi = i / 2000.0, h = 1e-6;
        const double db = (b_of(w, psi + h) - b_of(w, psi - h)) / (2 * h);
        worst = std::max(worst, std::abs(db) / psi);
    }
    // the smooth blend on 1/2 <= psi <= 3/2 lifts the constant slightly above 1
    EXPECT_LE(worst, 1.03);
    EXPECT_GE(worst, 1.0);
}

TEST(BoundaryGeometry, RejectsClockwiseCurve) {
    std::vector<cplx> pts;
    for (double th : uniform_angles(32)) pts.push_back(std::polar(1.0, -th));
    EXPECT_THROW(BoundarySpec::custom_samples(pts, EtaProfile::constant(0.0)), std::invalid_argument);
}
