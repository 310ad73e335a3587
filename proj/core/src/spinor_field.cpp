#include "diracspec/spinor_field.hpp"

#include <algorithm>

namespace diracspec {

namespace {

std::vector<cplx> powers(cplx z, std::size_t n) {
    std::vector<cplx> p(n + 1);
    p[0] = 1.0;
    for (std::size_t i = 1; i <= n; ++i) p[i] = p[i - 1] * z;
    return p;
}

}  // namespace

PolynomialSpinor::PolynomialSpinor(Coeffs first, Coeffs second) : c_{std::move(first), std::move(second)} {}

PolynomialSpinor PolynomialSpinor::constant(cplx a, cplx b) {
    return PolynomialSpinor({{a}}, {{b}});
}

SpinorJet PolynomialSpinor::jet(cplx z) const {
    std::size_t deg = 1;
    for (const auto& c : c_) {
        deg = std::max(deg, c.size());
        for (const auto& row : c) deg = std::max(deg, row.size());
    }
    const auto zp = powers(z, deg);
    const auto wp = powers(std::conj(z), deg);

    SpinorJet out;
    for (std::size_t comp = 0; comp < 2; ++comp) {
        const auto& c = c_[comp];
        for (std::size_t j = 0; j < c.size(); ++j) {
            for (std::size_t k = 0; k < c[j].size(); ++k) {
                const cplx a = c[j][k];
                out.u[comp] += a * zp[j] * wp[k];
                if (j > 0) out.dz[comp] += a * static_cast<double>(j) * zp[j - 1] * wp[k];
                if (k > 0) out.dzbar[comp] += a * static_cast<double>(k) * zp[j] * wp[k - 1];
            }
        }
    }
    return out;
}

}  // namespace diracspec
