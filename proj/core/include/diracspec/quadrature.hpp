#pragma once

#include <complex>
#include <vector>

namespace diracspec {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n - 1.
QuadratureRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite rule: `nodes_per_panel` Gauss points on each [breaks[i], breaks[i+1]].
QuadratureRule composite_gauss(const std::vector<double>& breaks, int nodes_per_panel);

/// Points and weights on the closed unit disc: Gauss-Legendre in r (weight r
/// folded in) times the trapezoid rule in theta.
struct DiscQuadrature {
    std::vector<std::complex<double>> points;
    std::vector<double> weights;
};

DiscQuadrature disc_quadrature(int radial, int angular);

}  // namespace diracspec
