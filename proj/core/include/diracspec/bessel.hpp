#pragma once

#include <vector>

namespace diracspec {

/// J_0(x), ..., J_{max_order}(x) for x >= 0 by Miller's backward recurrence,
/// normalised with J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_j_sequence(int max_order, double x);

/// J_m(x) for |m| <= 300, 0 <= x <= 200; negative orders use J_{-m} = (-1)^m J_m.
/// Throws std::domain_error outside that range.
double bessel_j(int m, double x);

/// d/dx J_m(x) = (J_{m-1}(x) - J_{m+1}(x)) / 2.
double bessel_j_derivative(int m, double x);

/// Table of J_m(x) for m in [lo, hi] (lo may be negative).
class BesselTable {
public:
    BesselTable(int lo, int hi, double x);
    double operator()(int m) const;
    int lo() const { return lo_; }
    int hi() const { return hi_; }

private:
    int lo_, hi_;
    std::vector<double> pos_;  // J_0 .. J_{max(|lo|, |hi|)}
};

}  // namespace diracspec
