#pragma once

#include <complex>

#include <Eigen/Dense>

namespace diracspec {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Geometric data of one boundary point. Directions are stored as unit
/// complex numbers, so the tangent (t1, t2) is t = t1 + i t2 and the frame is
/// positively oriented when t = i n.
struct BoundaryFrame {
    cplx point{0.0, 0.0};
    cplx normal{1.0, 0.0};
    cplx tangent{0.0, 1.0};
    double eta = 0.0;
};

/// Pauli matrix sigma_j, j in {1, 2, 3}. Throws std::out_of_range otherwise.
Mat2 pauli(int j);

/// A_eta = cos(eta) sigma.t + sin(eta) sigma_3. Hermitian and squares to I.
Mat2 a_eta(const BoundaryFrame& frame);

/// Boundary projection P_{+-} = (I +- A_eta)/2; sign must be +1 or -1.
Mat2 proj_pm(const BoundaryFrame& frame, int sign);

/// sigma.n = [[0, conj(n)], [n, 0]].
Mat2 sigma_dot_n(cplx normal);
inline Mat2 sigma_dot_n(const BoundaryFrame& frame) { return sigma_dot_n(frame.normal); }

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }
inline Mat2 anticommutator(const Mat2& a, const Mat2& b) { return a * b + b * a; }

/// Largest entry modulus.
double max_abs(const Mat2& m);

/// Frame with unit normal e^{i phi}, tangent i e^{i phi} and the given eta.
BoundaryFrame frame_from_angle(double phi, double eta);

}  // namespace diracspec
