#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diracspec/conformal_transport.hpp"
#include "diracspec/errors.hpp"

using namespace diracspec;

TEST(ConformalTransport, IdentityMap) {
    const ConformalMap id = ConformalMap::identity();
    const cplx w{0.3, -0.2};
    EXPECT_EQ(id(w), w);
    EXPECT_EQ(id.derivative(w), cplx(1.0));
    const NormMatrix u = u_norm_matrix(id, 0.0, 16);
    EXPECT_NEAR(u.report.condition, 1.0, 1e-12);
}

TEST(ConformalTransport, QuadraticMap) {
    const ConformalMap q = ConformalMap::quadratic(0.3);
    EXPECT_NEAR(q.min_abs_derivative(), 0.4, 1e-12);
    EXPECT_GT(q.injectivity_margin(142), 1e-6);
    EXPECT_THROW(ConformalMap::quadratic(0.5), std::invalid_argument);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int i = 0; i < 50; ++i) {
        const cplx w{u(rng), u(rng)};
        EXPECT_NEAR(std::abs(q.inverse(q(w)) - w), 0.0, 1e-12);
    }
}

TEST(ConformalTransport, TransplantBasics) {
    const auto f = [](cplx z) { return z * z + 1.0; };
    const auto same = transplant(f, ConformalMap::identity());
    EXPECT_EQ(same(cplx{0.1, 0.2}), f(cplx{0.1, 0.2}));
    const auto c = transplant([](cplx) { return cplx{2.0, -1.0}; }, ConformalMap::quadratic(0.3));
    EXPECT_EQ(c(cplx{0.5, 0.1}), cplx(2.0, -1.0));
}

TEST(ConformalTransport, ChainRule) {
    const ConformalMap q = ConformalMap::quadratic(0.3);
    const auto v2 = [](cplx z) { return std::exp(z) * z; };
    const auto dv2 = [](cplx z) { return std::exp(z) * (z + 1.0); };
    const auto u2 = transplant(v2, q);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    const double h = 1e-3;
    for (int i = 0; i < 100; ++i) {
        const cplx w{u(rng), u(rng)};
        auto d = [&](cplx e) { return (-u2(w + 2.0 * e) + 8.0 * u2(w + e) - 8.0 * u2(w - e) + u2(w - 2.0 * e)) / (12.0 * h); };
        const cplx dz = 0.5 * (d(h) - cplx{0, 1} * d(cplx{0, h}));
        EXPECT_NEAR(std::abs(dz - pullback_dz(dv2, q, w)), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(pullback_dz(dv2, q, w) - q.derivative(w) * dv2(q(w))), 0.0, 1e-15);
    }
}

TEST(ConformalTransport, ConditionStabilityAndDuality) {
    const ConformalMap q = ConformalMap::quadratic(0.3);
    const double c64 = u_norm_matrix(q, 0.0, 64).report.condition;
    const double c128 = u_norm_matrix(q, 0.0, 128).report.condition;
    EXPECT_LT(std::abs(c128 - c64) / c64, 0.1);
    const double fwd = u_norm_matrix(q, -1.0, 64).report.condition;
    const double adj = u_adjoint_norm_matrix(q, 1.0, 64).report.condition;
    EXPECT_LT(std::abs(fwd - adj) / fwd, 0.1);
    EXPECT_THROW(u_norm_matrix(q, 1.5, 16), std::invalid_argument);
}

TEST(ConformalTransport, TransportedBoundaryFunction) {
    const ConformalMap id = ConformalMap::identity();
    const TransportedBoundary t = transport_beta(id.boundary(EtaProfile::constant(0.0)), id, 8);
    // beta = conj(t) = -i e^{-i theta} = -i sqrt(2 pi) e_{-1}
    for (int n = -8; n <= 8; ++n)
        EXPECT_NEAR(std::abs(t.beta_circle[n] - (n == -1 ? cplx{0.0, -kSqrtTwoPi} : cplx{})), 0.0, 1e-13) << n;

    const ConformalMap q = ConformalMap::quadratic(0.3);
    const TransportedBoundary b = transport_beta(q.boundary(EtaProfile::constant(0.0)), q, 64);
    EXPECT_NEAR(b.min_abs, 1.0, 1e-10);
    EXPECT_NEAR(b.max_abs, 1.0, 1e-10);
    const TransportedBoundary v = transport_beta(q.boundary(EtaProfile::fourier(0.0, {}, {0.3})), q, 64);
    EXPECT_GT(v.min_abs, 0.0);
    EXPECT_THROW(transport_beta(q.boundary(EtaProfile::constant(1.5707963267948966)), q, 16), ZigzagError);
}

TEST(ConformalTransport, Inversion) {
    const InversionResult r = inversion_map(0.0, {{cplx{2.0, 0.0}}}, 0, 1.0);
    EXPECT_EQ(r.images[0][0], cplx(0.5));
    EXPECT_EQ(r.derivative_moduli[0][0], 0.25);
    std::vector<cplx> inner, outer;
    for (double th : uniform_angles(128)) {
        inner.push_back(std::polar(1.0, th));
        outer.push_back(std::polar(2.0, th));
    }
    const InversionResult a = inversion_map(0.0, {inner, outer}, 0, 1.0 - 1e-12);
    EXPECT_NEAR(a.sup_derivative, 1.0, 1e-12);
    EXPECT_TRUE(a.exterior_ok);
    EXPECT_THROW(inversion_map(cplx{0.9, 0.0}, {inner}, 0, 0.5), std::invalid_argument);
    const cplx z{1.3, -0.4};
    EXPECT_NEAR(std::abs(1.0 / (1.0 / z) - z), 0.0, 1e-14);
}
