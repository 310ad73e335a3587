#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "diracspec/boundary_geometry.hpp"
#include "diracspec/circle_analysis.hpp"
#include "diracspec/quadrature.hpp"
#include "diracspec/spinor_field.hpp"

namespace diracspec {

/// Root k of sgn J_{m+1}(k) = B J_m(k) for one angular mode m.
struct SecularRoot {
    int m = 0;
    double k = 0.0;
};

/// All roots in (0, k_max] of the per-mode equations for constant eta, by a
/// sign-change scan (step `scan_step`) plus bisection to `tol`. Sorted by k.
/// Throws ZigzagError when |cos eta| < eps_eta.
std::vector<SecularRoot> secular_roots(double eta, int sgn, double k_max, double tol = 1e-12,
                                       double scan_step = 0.01, double eps_eta = kDefaultEpsEta);

/// u = sum_m a_m (J_m(kr) e^{i m theta}, i sgn J_{m+1}(kr) e^{i(m+1) theta}),
/// which solves Tu = sgn k u in the plane.
class FourierBesselSpinor : public SpinorField {
public:
    FourierBesselSpinor(double k, int sgn, FourierVector coeffs);

    SpinorJet jet(cplx z) const override;
    /// Boundary values on the unit circle as Fourier coefficients.
    SpinorTrace trace() const;

    double k() const { return k_; }
    int sgn() const { return sgn_; }
    double energy() const { return sgn_ * k_; }
    const FourierVector& coeffs() const { return a_; }
    void scale(cplx c) { a_ *= c; }

private:
    double k_;
    int sgn_;
    FourierVector a_;
};

/// Fourier coefficients of B on the unit circle, bandwidth `bandwidth`.
FourierVector b_coefficients(const BoundarySpec& spec, int bandwidth, double eps_eta = kDefaultEpsEta);

struct BoundarySystem {
    Eigen::MatrixXcd matrix;      // column-normalised M(k)
    Eigen::MatrixXcd derivative;  // d/dk of the column-normalised matrix
    Eigen::VectorXd column_scale; // 1 / max(|J_m|, |J_{m+1}|, 1e-280)
};

/// M_nm = sgn J_{n+1}(k) delta_nm - Bhat(n - m) (2 pi)^{-1/2} J_m(k), n, m in [-N, N].
/// `bhat` must have bandwidth >= 2N.
BoundarySystem boundary_system(double k, int sgn, const FourierVector& bhat, int bandwidth);

/// Column-normalised boundary matrix for a unit-circle spec. Throws
/// std::invalid_argument when bandwidth < k + 20.
Eigen::MatrixXcd assemble_boundary_matrix(double k, int sgn, const BoundarySpec& spec, int bandwidth);

struct Eigenpair {
    double energy = 0.0;
    double k = 0.0;
    int sgn = 1;
    int multiplicity = 1;
    double sigma_min = 0.0;           // relative to sigma_max
    double boundary_residual = 0.0;   // ||gamma u_2 - B t gamma u_1|| / ||gamma u||
    double interior_residual = 0.0;   // ||Tu - E u|| / ||u||
    FourierBesselSpinor field{1.0, 1, FourierVector(0)};  // L^2(D)-normalised
};

struct ScanOptions {
    double k_min = 0.0;
    double k_max = 15.0;
    double grid_step = 0.02;
    int bandwidth = 0;                 // 0: ceil(k_max) + 20
    double singular_threshold = 1e-6;  // sigma_min / sigma_max acceptance
    double golden_width = 1e-12;
    double eps_eta = kDefaultEpsEta;
    bool record_trace = true;
};

struct SpectralResult {
    int sgn = 1;
    int bandwidth = 0;
    std::vector<Eigenpair> pairs;                       // sorted by energy
    std::vector<std::pair<double, double>> sigma_trace; // (k, sigma_min / sigma_max)
    std::vector<std::string> rejected;                  // candidates that failed refinement
};

/// Eigenvalues sgn * k, k in (k_min, k_max], of D_eta on the unit disc.
/// Every grid point contributes Newton predictions along the eigenvalue
/// branches of M(k); predictions are refined by Newton, polished by
/// golden-section on sigma_min, deduplicated and accepted below the singular
/// threshold. Throws ZigzagError if eta violates |cos eta| >= eps_eta.
SpectralResult scan_spectrum(const BoundarySpec& spec, int sgn, const ScanOptions& options);

/// Re-solve one eigenpair near k_guess at another bandwidth. Throws
/// ConvergenceError when no singular point is found within `window`.
Eigenpair refine_eigenpair(const BoundarySpec& spec, int sgn, double k_guess, int bandwidth, double window = 0.05,
                           double eps_eta = kDefaultEpsEta);

/// Tensor quadrature samples of a spinor field on the unit disc.
struct SampledField {
    std::vector<SpinorJet> jets;
};

SampledField sample_field(const SpinorField& u, const DiscQuadrature& q);

/// <u, v>_{L^2(D)} and <Tu, v>_{L^2(D)} from samples.
cplx inner(const SampledField& u, const SampledField& v, const DiscQuadrature& q);
cplx inner_dirac_left(const SampledField& u, const SampledField& v, const DiscQuadrature& q);

struct SymmetryDefect {
    double full = 0.0;               // |<u,Tv> - <Tu,v> + i \oint <u, sigma.n v>|
    double pure = 0.0;               // |<u,Tv> - <Tu,v>|
    double level_disagreement = 0.0; // change of `full` when the grid is doubled
};

/// Integration-by-parts identity on the unit disc, by Gauss-Legendre (radial)
/// x trapezoid (angular) quadrature, repeated on the doubled grid.
SymmetryDefect symmetry_defect(const SpinorField& u, const SpinorField& v, const BoundarySpec& spec, int radial,
                               int angular);

/// ||u||_{H^1} / (||u||_{L^2} + ||Tu||_{L^2}) on the unit disc.
double regularity_ratio(const SpinorField& u, const DiscQuadrature& q);

struct TraceProfile {
    std::vector<std::pair<int, double>> partial_sums;  // (M, sum_{|n|<=M} (|n|+1)|c_n|^2)
    double last_increase = 0.0;                        // relative gain of the last doubling
    bool saturated = false;                            // last_increase < 1%
};

/// H^{1/2} partial sums of both trace components at M = 1, 2, 4, ..., bandwidth.
TraceProfile trace_sobolev_profile(const SpinorTrace& trace);

/// Relative boundary-condition residual of a field on the unit circle.
double boundary_residual(const FourierBesselSpinor& u, const BoundarySpec& spec, std::size_t samples);

}  // namespace diracspec
