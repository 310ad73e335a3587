#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "diracspec/boundary_geometry.hpp"
#include "diracspec/circle_analysis.hpp"

namespace diracspec {

enum class MapFamily { identity, quadratic, moebius };

std::string to_string(MapFamily f);

/// Closed-form conformal map G from the closed unit disc onto a domain.
class ConformalMap {
public:
    /// G(w) = w.
    static ConformalMap identity();
    /// G(w) = w + a w^2, |a| <= 0.45.
    static ConformalMap quadratic(cplx a);
    /// G(w) = e^{i phi} (w + b) / (1 + conj(b) w), |b| < 1.
    static ConformalMap moebius(double phi, cplx b);

    MapFamily family() const { return family_; }
    std::string tag() const;
    cplx parameter() const { return p_; }
    double angle() const { return phi_; }

    cplx operator()(cplx w) const;
    cplx derivative(cplx w) const;
    cplx second_derivative(cplx w) const;
    /// F = G^{-1} on the image of the closed disc (closed form, Newton-polished).
    cplx inverse(cplx z) const;

    /// Boundary curve theta -> G(e^{i theta}) with the given eta profile.
    BoundarySpec boundary(EtaProfile eta) const;

    /// min |G'| over `samples` points of the closed disc (polar grid).
    double min_abs_derivative(int samples = 64) const;
    /// Pairwise injectivity of G on `samples` boundary points; returns the
    /// minimum ratio |G(a) - G(b)| / |a - b|.
    double injectivity_margin(int samples = 100) const;

private:
    ConformalMap(MapFamily f, cplx p, double phi) : family_(f), p_(p), phi_(phi) {}
    MapFamily family_;
    cplx p_;
    double phi_;
};

/// (Uv)(w) = v(G(w)).
std::function<cplx(cplx)> transplant(std::function<cplx(cplx)> v, const ConformalMap& map);

/// Boundary pullback theta -> v(G(e^{i theta})) at uniform angles.
std::vector<cplx> transplant_boundary(const std::function<cplx(cplx)>& v, const ConformalMap& map, std::size_t count);

/// Chain rule for the pulled-back spinor components: d_z(U v_2) = G' (d_z v_2) o G,
/// d_zbar(U v_1) = conj(G') (d_zbar v_1) o G.
cplx pullback_dz(const std::function<cplx(cplx)>& dz_v, const ConformalMap& map, cplx w);
cplx pullback_dzbar(const std::function<cplx(cplx)>& dzbar_v, const ConformalMap& map, cplx w);

/// Normalised arclength phi(theta) of theta -> G(e^{i theta}), phi(0) = 0,
/// phi(2 pi) = 2 pi, and its derivative, at `count` uniform angles.
struct ArclengthParam {
    std::vector<double> phi;
    std::vector<double> dphi;
    double length = 0.0;
};

ArclengthParam arclength_parametrisation(const ConformalMap& map, std::size_t count);

struct ConditionReport {
    int bandwidth = 0;
    double s = 0.0;
    int rows = 0;
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    double condition = 0.0;
};

struct NormMatrix {
    Eigen::MatrixXcd matrix;  // H^s-weighted, rows [-R, R], columns [-N, N]
    ConditionReport report;
};

/// Transplantation U f(theta) = f(phi(theta)) from functions of the
/// normalised boundary arclength to functions on the circle, in the Fourier
/// bases of both sides: U_nm = (1/2pi) \int e^{-i n theta} e^{i m phi(theta)} d theta,
/// m in [-N, N], n in [-R, R] with R large enough to hold the image. Weighted
/// as W_s U W_s^{-1} with W_s = diag((|n|+1)^s).
NormMatrix u_norm_matrix(const ConformalMap& map, double s, int bandwidth);

/// Adjoint U^* assembled directly in the arclength variable, weighted as
/// W_s U^* W_s^{-1}.
NormMatrix u_adjoint_norm_matrix(const ConformalMap& map, double s, int bandwidth);

struct TransportedBoundary {
    FourierVector beta_circle;
    double min_abs = 0.0;
    double max_abs = 0.0;
};

/// beta = U(conj(t) cos eta / (1 - sin eta)) on the circle, for a spec whose
/// parameter is the disc angle of `map` (unit circle or conformal image).
/// Throws ZigzagError when validate_eta fails.
TransportedBoundary transport_beta(const BoundarySpec& spec, const ConformalMap& map, int bandwidth,
                                   double eps_eta = kDefaultEpsEta);

struct InversionResult {
    std::vector<std::vector<cplx>> images;
    std::vector<std::vector<double>> derivative_moduli;  // |I'| = |z - z_j|^{-2}
    double sup_derivative = 0.0;
    double bound = 0.0;          // d_min^{-2}
    bool exterior_ok = false;    // image of component j encloses the other images
};

/// I(z) = 1 / (z - z_j) applied to sampled boundary components. Component
/// `j` is the one surrounding z_j. Throws std::invalid_argument if some
/// sample lies closer than d_min to z_j.
InversionResult inversion_map(cplx z_j, const std::vector<std::vector<cplx>>& components, std::size_t j,
                              double d_min);

/// Winding number of a closed polygon around a point.
int winding_number(const std::vector<cplx>& loop, cplx p);

}  // namespace diracspec
