#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diracspec/cauchy_calderon.hpp"

using namespace diracspec;

namespace {

FourierVector random_vector(std::mt19937_64& rng, int bw) {
    std::normal_distribution<double> g;
    FourierVector f(bw);
    for (int n = -bw; n <= bw; ++n) f.at(n) = {g(rng), g(rng)};
    return f;
}

bool only_coefficient(const HolomorphicDiscFunction& h, std::size_t k, cplx v) {
    for (std::size_t j = 0; j < h.taylor.size(); ++j)
        if (std::abs(h.taylor[j] - (j == k ? v : cplx{})) > 0.0) return false;
    return h.taylor.size() > k;
}

}  // namespace

TEST(CauchyCalderon, KOnMonomials) {
    const auto k3 = apply_K(FourierVector::basis(3, 3));
    EXPECT_FALSE(k3.antiholomorphic);
    EXPECT_TRUE(only_coefficient(k3, 3, kInvSqrtTwoPi));
    const cplx z{0.3, -0.4};
    EXPECT_NEAR(std::abs(k3.value(z) - kInvSqrtTwoPi * z * z * z), 0.0, 1e-16);
    EXPECT_TRUE(apply_K(FourierVector::basis(-2, 2)).is_zero());
}

TEST(CauchyCalderon, KbarOnMonomials) {
    const auto kb = apply_Kbar(FourierVector::basis(-2, 2));
    EXPECT_TRUE(kb.antiholomorphic);
    const cplx z{0.3, -0.4};
    EXPECT_NEAR(std::abs(kb.value(z) - kInvSqrtTwoPi * std::conj(z) * std::conj(z)), 0.0, 1e-16);
    EXPECT_TRUE(apply_Kbar(FourierVector::basis(1, 1)).is_zero());
    EXPECT_TRUE(only_coefficient(apply_Kbar(FourierVector::basis(0, 1)), 0, kInvSqrtTwoPi));
}

TEST(CauchyCalderon, HardyProjections) {
    EXPECT_EQ(max_abs_diff(trace_K(FourierVector::basis(4, 4)), FourierVector::basis(4, 4)), 0.0);
    EXPECT_EQ(max_abs_diff(trace_K(FourierVector::basis(-4, 4)), FourierVector(4)), 0.0);
    std::mt19937_64 rng(1);
    const FourierVector f = random_vector(rng, 10);
    const FourierVector lhs = trace_K(f) + trace_Kbar(f);
    const FourierVector rhs = f + f[0] * FourierVector::basis(0, 10);
    EXPECT_EQ(max_abs_diff(lhs, rhs), 0.0);
}

TEST(CauchyCalderon, SpinorExtension) {
    const auto [u1, u2] = apply_S(SpinorTrace(FourierVector::basis(1, 1), FourierVector::basis(-1, 1)));
    const cplx z{0.2, 0.5};
    EXPECT_NEAR(std::abs(u1.value(z) - kInvSqrtTwoPi * z), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(u2.value(z) - kInvSqrtTwoPi * std::conj(z)), 0.0, 1e-16);
    const auto [v1, v2] = apply_S(SpinorTrace(FourierVector::basis(-1, 1), FourierVector::basis(1, 1)));
    EXPECT_TRUE(v1.is_zero());
    EXPECT_TRUE(v2.is_zero());
}

TEST(CauchyCalderon, InteriorAnnihilationByFiniteDifferences) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    const double h = 1e-4;
    for (int c = 0; c < 5; ++c) {
        FourierVector f = random_vector(rng, 16);
        const auto kf = apply_K(f);
        const auto kbf = apply_Kbar(f);
        for (int i = 0; i < 10; ++i) {
            const cplx z{u(rng), u(rng)};
            // fourth-order centred differences
            auto dx = [&](const HolomorphicDiscFunction& g, cplx d) {
                return (-g.value(z + 2.0 * d) + 8.0 * g.value(z + d) - 8.0 * g.value(z - d) + g.value(z - 2.0 * d)) /
                       (12.0 * h);
            };
            const cplx gx = dx(kf, h), gy = dx(kf, cplx{0, h});
            const cplx bx = dx(kbf, h), by = dx(kbf, cplx{0, h});
            EXPECT_LE(std::abs(0.5 * (gx + cplx{0, 1} * gy)), 1e-8);
            EXPECT_LE(std::abs(0.5 * (bx - cplx{0, 1} * by)), 1e-8);
            EXPECT_NEAR(std::abs(kf.dzbar(z)), 0.0, 0.0);
        }
    }
}

TEST(CauchyCalderon, CalderonRoutesAgree) {
    const BoundarySpec circle = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    const Eigen::MatrixXcd a = calderon_matrix_shift(12);
    const Eigen::MatrixXcd b = calderon_matrix_quadrature(12, circle);
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((a * a - a).cwiseAbs().maxCoeff(), 1e-14);
    // (e_0, 0) lies in the range of the projector
    const SpinorTrace t(FourierVector::basis(0, 4), FourierVector(4));
    const SpinorTrace r = calderon(t, circle);
    EXPECT_LE(max_abs_diff(r.first, t.first), 1e-15);
    EXPECT_LE(max_abs_diff(r.second, t.second), 1e-15);
}

TEST(CauchyCalderon, CommutatorExamples) {
    FourierVector c(0);
    c.at(0) = 2.5;
    std::mt19937_64 rng(8);
    const FourierVector f = random_vector(rng, 8);
    EXPECT_LE(max_abs_diff(commutator_apply(c, f), FourierVector(8)), 1e-15);

    // beta gamma K e_{-1} = 0 and gamma K(e_1 e_{-1}) = (2 pi)^{-1/2} e_0
    const FourierVector out = commutator_apply(FourierVector::basis(1, 1), FourierVector::basis(-1, 1));
    for (int n = -out.bandwidth(); n <= out.bandwidth(); ++n)
        EXPECT_NEAR(std::abs(out[n] - (n == 0 ? -kInvSqrtTwoPi : 0.0)), 0.0, 1e-16) << n;

    for (int i = 0; i < 20; ++i) {
        const FourierVector b = random_vector(rng, 5), g = random_vector(rng, 30);
        EXPECT_LE(max_abs_diff(commutator_apply(b, g), commutator_compose(b, g)), 1e-12);
    }
}

TEST(CauchyCalderon, SmoothingRatio) {
    EXPECT_NEAR(smoothing_ratio(FourierVector::basis(1, 1), FourierVector::basis(-1, 1), 0.0), kInvSqrtTwoPi / 2.0,
                1e-16);
    FourierVector c(0);
    c.at(0) = 1.0;
    EXPECT_EQ(smoothing_ratio(c, FourierVector::basis(3, 3), -0.5), 0.0);
    EXPECT_THROW(smoothing_ratio(FourierVector(2), FourierVector::basis(1, 1), 0.0), std::invalid_argument);
}

TEST(CauchyCalderon, ExtensionNorm) {
    EXPECT_NEAR(cauchy_extension_norm(32, ExtensionPart::K), std::sqrt(0.5), 1e-14);
    EXPECT_LE(cauchy_extension_norm(32, ExtensionPart::both), 1.0);
}

TEST(CauchyCalderon, BootstrapSplit) {
    std::mt19937_64 rng(12);
    FourierVector c(0);
    c.at(0) = 3.0;
    const FourierVector f = random_vector(rng, 10);
    const BootstrapSplit s = bootstrap_split(c, f);
    EXPECT_LE(max_abs_diff(s.commutator_part, FourierVector(0)), 1e-15);
    EXPECT_LE(max_abs_diff(s.smooth_part, multiply(c, trace_K(f))), 1e-15);

    const FourierVector b = random_vector(rng, 6);
    const BootstrapSplit r = bootstrap_split(b, f);
    EXPECT_LE(max_abs_diff(trace_K(multiply(b, f)), r.smooth_part - r.commutator_part), 1e-12);

    FourierVector neg(10);
    for (int n = -10; n < 0; ++n) neg.at(n) = f[n];
    const BootstrapSplit z = bootstrap_split(b, neg);
    EXPECT_LE(max_abs_diff(z.smooth_part, FourierVector(0)), 0.0);
    EXPECT_LE(max_abs_diff(trace_K(multiply(b, neg)), -1.0 * z.commutator_part), 1e-12);
}
