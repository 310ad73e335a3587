#pragma once

#include <array>
#include <complex>
#include <vector>

namespace diracspec {

using cplx = std::complex<double>;

/// Values and Wirtinger derivatives of a two-component spinor at one point.
struct SpinorJet {
    std::array<cplx, 2> u{};
    std::array<cplx, 2> dz{};
    std::array<cplx, 2> dzbar{};
};

/// Tu = -2i (d_z u_2, d_zbar u_1).
inline std::array<cplx, 2> apply_dirac(const SpinorJet& j) {
    const cplx m2i{0.0, -2.0};
    return {m2i * j.dz[1], m2i * j.dzbar[0]};
}

/// |grad u|^2 = 2 sum_c (|d_z u_c|^2 + |d_zbar u_c|^2).
inline double gradient_norm_sq(const SpinorJet& j) {
    return 2.0 * (std::norm(j.dz[0]) + std::norm(j.dz[1]) + std::norm(j.dzbar[0]) + std::norm(j.dzbar[1]));
}

/// Spinor field on a planar domain with analytically available derivatives.
class SpinorField {
public:
    virtual ~SpinorField() = default;
    virtual SpinorJet jet(cplx z) const = 0;
};

/// Each component is sum_{j,k} c_{jk} z^j zbar^k.
class PolynomialSpinor : public SpinorField {
public:
    /// coeffs[c][j][k] multiplies z^j zbar^k in component c.
    using Coeffs = std::vector<std::vector<cplx>>;
    PolynomialSpinor(Coeffs first, Coeffs second);

    static PolynomialSpinor constant(cplx a, cplx b);

    SpinorJet jet(cplx z) const override;

private:
    std::array<Coeffs, 2> c_;
};

}  // namespace diracspec
