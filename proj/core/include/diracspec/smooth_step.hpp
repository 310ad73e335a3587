#pragma once

#include <cmath>

namespace diracspec {

/// C-infinity step rising from 0 (u <= 0) to 1 (u >= 1),
/// S(u) = 1 / (1 + exp(a (1/u - 1/(1-u)))). All derivatives vanish at both ends.
/// The steepness a = 0.6 keeps max |S'| just under 1.5.
struct SmoothStep {
    double steepness = 0.6;

    double operator()(double u) const {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        const double e = steepness * (1.0 / u - 1.0 / (1.0 - u));
        if (e > 700.0) return 0.0;
        if (e < -700.0) return 1.0;
        return 1.0 / (1.0 + std::exp(e));
    }

    double derivative(double u) const {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        const double s = (*this)(u);
        return steepness * (1.0 / (u * u) + 1.0 / ((1.0 - u) * (1.0 - u))) * s * (1.0 - s);
    }
};

}  // namespace diracspec
