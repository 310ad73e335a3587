#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "diracspec/boundary_geometry.hpp"
#include "diracspec/circle_analysis.hpp"

namespace diracspec {

/// f(zeta) = sum_k c_k zeta^k, or sum_k c_k conj(zeta)^k when antiholomorphic.
struct HolomorphicDiscFunction {
    std::vector<cplx> taylor;
    bool antiholomorphic = false;

    cplx value(cplx z) const;
    /// d/dz and d/dzbar, from the series.
    cplx dz(cplx z) const;
    cplx dzbar(cplx z) const;
    /// ||f||^2_{L^2(D)} = sum_k |c_k|^2 pi / (k + 1).
    double l2_norm_sq() const;
    bool is_zero() const;
};

/// Cauchy extension: K e_n = (2 pi)^{-1/2} zeta^n for n >= 0, zero for n < 0.
HolomorphicDiscFunction apply_K(const FourierVector& f);
/// Conjugate extension: Kbar e_n = (2 pi)^{-1/2} conj(zeta)^{|n|} for n <= 0, zero for n > 0.
HolomorphicDiscFunction apply_Kbar(const FourierVector& f);

/// Boundary values of K f: keeps n >= 0.
FourierVector trace_K(const FourierVector& f);
/// Boundary values of Kbar f: keeps n <= 0.
FourierVector trace_Kbar(const FourierVector& f);

/// Componentwise (K, Kbar) extension of a boundary spinor.
std::pair<HolomorphicDiscFunction, HolomorphicDiscFunction> apply_S(const SpinorTrace& trace);

/// Projector onto boundary values of solutions of Tu = 0 in the disc, written
/// as the single-layer Green representation u = S_G(sigma.n gamma u) with
/// S_G w = (K(conj(n) w_2), Kbar(n w_1)). On the circle n = e^{i theta}, so the
/// result is (gamma K u_1, gamma Kbar u_2). Requires a unit-circle spec.
SpinorTrace calderon(const SpinorTrace& trace, const BoundarySpec& spec);

/// Dense matrix of `calderon` on the bandwidth-N truncation, ordered
/// (first component n = -N..N, second component n = -N..N). Built from the
/// index shifts of sigma.n followed by the Hardy projections.
Eigen::MatrixXcd calderon_matrix_shift(int bandwidth);

/// Same operator assembled by evaluating the Green integrals
/// (1/2pi) \oint w_2 / (zeta - z) ds and (1/2pi) \oint w_1 / conj(zeta - z) ds
/// with `samples` trapezoid nodes on the circle, at |z| = radius, then
/// removing radius^{|n|} from the interior coefficients.
Eigen::MatrixXcd calderon_matrix_quadrature(int bandwidth, const BoundarySpec& spec, std::size_t samples = 512,
                                            double radius = 0.9);

/// [beta, gamma K] f by the two-branch coefficient formula
///   n >= 0: -(2pi)^{-1/2} sum_{k<0} beta(n-k) f(k),
///   n <  0: +(2pi)^{-1/2} sum_{k>=0} beta(n-k) f(k).
FourierVector commutator_apply(const FourierVector& beta, const FourierVector& f);

/// The same commutator as multiply(beta, trace_K f) - trace_K(multiply(beta, f)).
FourierVector commutator_compose(const FourierVector& beta, const FourierVector& f);

/// ||[beta, gamma K] f||_{H^{s+1/2}} / (||beta||_{H^1} ||f||_{H^s}).
/// Throws std::invalid_argument on a zero denominator.
double smoothing_ratio(const FourierVector& beta, const FourierVector& f, double s);

enum class ExtensionPart { K, Kbar, both };

/// Operator norm of the extension H^{-1/2}(S) -> L^2(D) on the bandwidth-N
/// truncation, from the Gram matrix of the extended basis functions.
double cauchy_extension_norm(int bandwidth, ExtensionPart part = ExtensionPart::both);

struct BootstrapSplit {
    FourierVector smooth_part;      // beta gamma K f
    FourierVector commutator_part;  // [beta, gamma K] f
};

/// gamma K (beta f) = smooth_part - commutator_part.
BootstrapSplit bootstrap_split(const FourierVector& beta, const FourierVector& f);

}  // namespace diracspec
