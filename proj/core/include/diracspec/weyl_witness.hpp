#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "diracspec/boundary_geometry.hpp"

namespace diracspec {

/// Tangent disc {|z + 1| < 1} with the quadratically degenerate eta profile,
/// plus the sampled constants of the boundary function B.
struct WeylDomain {
    BoundarySpec spec = BoundarySpec::tangent_disc();
    double b_over_psi_sq_max = 0.0;    // sup |B| / psi^2 on 0 < |psi| <= 1
    double b_over_psi_sq_limit = 0.0;  // B / psi^2 at psi = 1e-4 (tends to 1/2)
    double db_over_psi_max = 0.0;      // sup |dB/dpsi| / |psi| on 0 < |psi| <= 1
    double extension_constant = 0.0;   // sup |B~(z)| / |z|^2 over the domain near 0
    bool cone_ok = false;              // no sampled cone point lies in the closed domain
    std::size_t cone_samples = 0;
    cplx tangent_at_zero{};
};

WeylDomain weyl_domain(std::uint64_t seed = 1, std::size_t cone_samples = 100000, double cone_radius = 0.5);

/// chi(x) = 1 for x <= 1/2, 0 for x >= 1, smooth in between with |chi'| < 3.
struct Cutoff {
    double operator()(double x) const;
    double derivative(double x) const;
    /// max |chi'| over `samples` uniform points of [1/2, 1].
    double max_abs_derivative(std::size_t samples = 100000) const;
};

struct WeylConfig {
    int n = 1;
    double radius = 0.8;          // cutoff radius R_n
    double pole = 0.01;           // pole offset s_n > 0
    int nodes_per_panel = 12;     // Gauss points per panel (doubled for the check level)
    double finest_fraction = 0.125;  // smallest panel = finest_fraction * s_n
    double scale = 0.0;           // rescale factor c (magnitudes times c^n); 0 picks 2 s_n
    double delta = 0.05;          // radius for mass_outside
    double convergence_tol = 0.01;
};

struct WeylReport {
    int n = 0;
    double radius = 0.0;
    double pole = 0.0;
    double quotient = 0.0;           // ||T v|| / ||v|| on the base grid
    double quotient_fine = 0.0;      // same on the doubled grid
    double level_disagreement = 0.0; // |fine - base| / fine
    double log_norm_v = 0.0;         // natural log of the unscaled ||v||
    double log_norm_tv = 0.0;
    double cutoff_term = 0.0;        // ||(T chi) u|| / ||v||
    double mass_outside = 0.0;       // share of ||v||^2 outside B(0, delta)
    double delta = 0.0;
    double rule_radius = 0.0;        // radius from the geometric-term rule
    bool meets_bound = false;        // quotient <= 1/n on both grids
    std::vector<std::pair<double, double>> ladder;  // (s_n, quotient) tried
};

/// ||T v_n|| / ||v_n|| for v_n = chi_R (z - s)^{-n} (1, B~ t~) on the tangent
/// disc, by graded Gauss-Legendre panels in (1 - |z + 1|, arg(z + 1)). Runs a
/// second grid with doubled nodes; throws ConvergenceError when the two differ
/// by more than convergence_tol.
WeylReport build_and_measure(const WeylConfig& config);

/// Single-grid quotient, without the convergence check.
double weyl_quotient(const WeylConfig& config);

struct CertifyOptions {
    double max_radius = 0.8;
    int ladder_first = 4;
    int ladder_last = 40;
    int nodes_per_panel = 12;
    double delta = 0.05;
};

/// R_n from C_B C_t (2 + sqrt(2) n) R_n <= 1 / (2n).
double rule_radius(int n, double extension_constant, double tangent_constant = 1.0);

/// For n = 1..n_max: tries R_n = rule radius (capped at max_radius), then
/// max_radius, each with s_n = R_n 2^{-j}, j = ladder_first..ladder_last,
/// accepting the first s_n whose quotient is at most 1/n.
std::vector<WeylReport> certify_sequence(int n_max, const CertifyOptions& options = {});

}  // namespace diracspec
