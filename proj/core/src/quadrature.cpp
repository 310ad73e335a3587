#include "diracspec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "diracspec/circle_analysis.hpp"

namespace diracspec {

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    QuadratureRule q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        q.nodes[lo] = -x;
        q.nodes[hi] = x;
        q.weights[lo] = w;
        q.weights[hi] = w;
    }
    if (n % 2 == 1) q.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return q;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    QuadratureRule q = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        q.nodes[i] = mid + half * q.nodes[i];
        q.weights[i] *= half;
    }
    return q;
}

QuadratureRule composite_gauss(const std::vector<double>& breaks, int nodes_per_panel) {
    if (breaks.size() < 2) throw std::invalid_argument("composite_gauss: need at least one panel");
    const QuadratureRule ref = gauss_legendre(nodes_per_panel);
    QuadratureRule q;
    q.nodes.reserve((breaks.size() - 1) * ref.nodes.size());
    q.weights.reserve(q.nodes.capacity());
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double half = 0.5 * (breaks[p + 1] - breaks[p]);
        const double mid = 0.5 * (breaks[p + 1] + breaks[p]);
        for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
            q.nodes.push_back(mid + half * ref.nodes[i]);
            q.weights.push_back(half * ref.weights[i]);
        }
    }
    return q;
}

DiscQuadrature disc_quadrature(int radial, int angular) {
    if (angular < 1) throw std::invalid_argument("disc_quadrature: need at least one angle");
    const QuadratureRule r = gauss_legendre(radial, 0.0, 1.0);
    DiscQuadrature q;
    q.points.reserve(static_cast<std::size_t>(radial * angular));
    q.weights.reserve(q.points.capacity());
    const double dtheta = kTwoPi / angular;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        for (int j = 0; j < angular; ++j) {
            q.points.push_back(std::polar(r.nodes[i], j * dtheta));
            q.weights.push_back(r.weights[i] * r.nodes[i] * dtheta);
        }
    }
    return q;
}

}  // namespace diracspec
