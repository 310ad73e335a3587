#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/bessel.hpp>

#include "diracspec/bessel.hpp"

using namespace diracspec;

namespace {

// Power series of J_0, the independent oracle for its first root.
double j0_series(double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= -(x * x / 4.0) / (k * k);
        sum += term;
    }
    return sum;
}

}  // namespace

TEST(Bessel, ValuesAtZero) {
    EXPECT_EQ(bessel_j(0, 0.0), 1.0);
    EXPECT_EQ(bessel_j(1, 0.0), 0.0);
}

TEST(Bessel, FirstRootOfJ0) {
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (j0_series(lo) * j0_series(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double root = 0.5 * (lo + hi);
    EXPECT_NEAR(root, 2.404825557695773, 1e-13);
    EXPECT_NEAR(bessel_j(0, root), 0.0, 1e-14);
}

TEST(Bessel, AgreesWithBoost) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> order(-60, 60);
    std::uniform_real_distribution<double> arg(0.0, 40.0);
    for (int i = 0; i < 2000; ++i) {
        const int m = order(rng);
        const double x = arg(rng);
        const double want = boost::math::cyl_bessel_j(m, x);
        EXPECT_NEAR(bessel_j(m, x), want, 1e-13 * std::max(1.0, std::abs(want))) << "m=" << m << " x=" << x;
    }
}

TEST(Bessel, DerivativeRecurrence) {
    for (double x : {0.5, 3.0, 12.0})
        EXPECT_NEAR(bessel_j_derivative(0, x), -boost::math::cyl_bessel_j(1, x), 1e-14);
}

TEST(Bessel, TableMatchesPointValues) {
    const BesselTable t(-10, 25, 7.3);
    for (int m = -10; m <= 25; ++m) EXPECT_NEAR(t(m), bessel_j(m, 7.3), 1e-15);
}

TEST(Bessel, RejectsOutOfRange) {
    EXPECT_THROW(bessel_j(301, 1.0), std::domain_error);
    EXPECT_THROW(bessel_j(0, -1.0), std::domain_error);
}
