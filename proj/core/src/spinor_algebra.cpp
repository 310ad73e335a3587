#include "diracspec/spinor_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diracspec {

namespace {
constexpr cplx I{0.0, 1.0};
}

Mat2 pauli(int j) {
    Mat2 m;
    switch (j) {
        case 1: m << 0.0, 1.0, 1.0, 0.0; break;
        case 2: m << 0.0, -I, I, 0.0; break;
        case 3: m << 1.0, 0.0, 0.0, -1.0; break;
        default: throw std::out_of_range("pauli: index must be 1, 2 or 3, got " + std::to_string(j));
    }
    return m;
}

Mat2 a_eta(const BoundaryFrame& frame) {
    const double c = std::cos(frame.eta);
    const double s = std::sin(frame.eta);
    const cplx t = frame.tangent;
    // t1 sigma_1 + t2 sigma_2 = [[0, conj t], [t, 0]]
    Mat2 m;
    m << s, c * std::conj(t), c * t, -s;
    return m;
}

Mat2 proj_pm(const BoundaryFrame& frame, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("proj_pm: sign must be +1 or -1");
    return 0.5 * (Mat2::Identity() + static_cast<double>(sign) * a_eta(frame));
}

Mat2 sigma_dot_n(cplx normal) {
    Mat2 m;
    m << 0.0, std::conj(normal), normal, 0.0;
    return m;
}

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

BoundaryFrame frame_from_angle(double phi, double eta) {
    BoundaryFrame f;
    f.normal = std::polar(1.0, phi);
    f.tangent = I * f.normal;
    f.point = f.normal;
    f.eta = eta;
    return f;
}

}  // namespace diracspec
