#include "diracspec/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace diracspec {

namespace {

constexpr int kMaxOrder = 300;
constexpr double kMaxArgument = 200.0;
constexpr double kRescale = 1e250;

}  // namespace

std::vector<double> bessel_j_sequence(int max_order, double x) {
    if (max_order < 0) throw std::invalid_argument("bessel_j_sequence: negative order");
    if (!(x >= 0.0)) throw std::domain_error("bessel_j_sequence: negative or NaN argument");
    std::vector<double> j(static_cast<std::size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        j[0] = 1.0;
        return j;
    }

    // Start well above both the requested order and the turning point m ~ x.
    const int top = std::max(max_order, static_cast<int>(x));
    int start = top + 20 + static_cast<int>(std::sqrt(60.0 * top));
    if (start % 2 == 1) ++start;

    double next = 0.0;   // J_{k+1}
    double cur = 1e-300;  // J_k
    double norm = 0.0;
    for (int k = start; k > 0; --k) {
        const double prev = 2.0 * k / x * cur - next;  // J_{k-1}
        next = cur;
        cur = prev;
        if (k - 1 <= max_order) j[static_cast<std::size_t>(k - 1)] = cur;
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
        if (std::abs(cur) > kRescale) {
            cur /= kRescale;
            next /= kRescale;
            norm /= kRescale;
            for (int i = k - 1; i <= max_order; ++i) j[static_cast<std::size_t>(i)] /= kRescale;
        }
    }
    norm += cur;  // J_0 term
    for (auto& v : j) v /= norm;
    return j;
}

double bessel_j(int m, double x) {
    if (std::abs(m) > kMaxOrder || x < 0.0 || x > kMaxArgument)
        throw std::domain_error("bessel_j: (m, x) = (" + std::to_string(m) + ", " + std::to_string(x) +
                                ") outside |m| <= 300, 0 <= x <= 200");
    const int a = std::abs(m);
    const double v = bessel_j_sequence(a, x)[static_cast<std::size_t>(a)];
    return (m < 0 && a % 2 == 1) ? -v : v;
}

double bessel_j_derivative(int m, double x) { return 0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x)); }

BesselTable::BesselTable(int lo, int hi, double x)
    : lo_(lo), hi_(hi), pos_(bessel_j_sequence(std::max(std::abs(lo), std::abs(hi)), x)) {
    if (lo > hi) throw std::invalid_argument("BesselTable: empty order range");
}

double BesselTable::operator()(int m) const {
    if (m < lo_ || m > hi_) throw std::out_of_range("BesselTable: order " + std::to_string(m) + " not tabulated");
    const int a = std::abs(m);
    const double v = pos_[static_cast<std::size_t>(a)];
    return (m < 0 && a % 2 == 1) ? -v : v;
}

}  // namespace diracspec
