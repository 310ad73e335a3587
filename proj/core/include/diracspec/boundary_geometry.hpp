#pragma once

#include <functional>
#include <string>
#include <vector>

#include "diracspec/circle_analysis.hpp"
#include "diracspec/spinor_algebra.hpp"

namespace diracspec {

inline constexpr double kDefaultEpsEta = 1e-6;

/// Periodic boundary-condition angle eta(theta).
///
/// Besides eta itself every profile reports the complement pi/2 - eta, which
/// the Weyl profile evaluates without cancellation near its zigzag point.
class EtaProfile {
public:
    enum class Kind { constant, fourier, weyl };

    static EtaProfile constant(double value);
    /// eta = a0 + sum_k cos_coeffs[k-1] cos(k theta) + sin_coeffs[k-1] sin(k theta).
    static EtaProfile fourier(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);
    /// eta(psi) = pi/2 - psi^2 w(psi): w = 1 on |psi| <= 1/2, and psi^2 w blends
    /// smoothly to the constant 1/4 on 1/2 <= |psi| <= 3/2. Hence cos(eta) > 0
    /// except at psi = 0, where cos(eta) vanishes quadratically.
    static EtaProfile weyl();

    Kind kind() const { return kind_; }
    double value(double theta) const;
    double derivative(double theta) const;
    /// pi/2 - eta(theta).
    double complement(double theta) const;
    /// d/dtheta of the complement.
    double complement_derivative(double theta) const;

    double constant_value() const { return a0_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }

private:
    Kind kind_ = Kind::constant;
    double a0_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// psi^2 w(psi) of the Weyl profile and its derivative; psi is wrapped to (-pi, pi].
double weyl_depth(double psi);
double weyl_depth_derivative(double psi);

enum class CurveKind { unit_circle, tangent_disc, conformal_image, custom_samples };

std::string to_string(CurveKind kind);

/// C^2 closed curve theta -> z(theta), theta in [0, 2 pi), traversed
/// counterclockwise, together with the eta profile on it.
class BoundarySpec {
public:
    using CurveFn = std::function<cplx(double)>;

    static BoundarySpec unit_circle(EtaProfile eta);
    /// |z + 1| = 1 parametrised as z(psi) = -1 + e^{i psi}; z(0) = 0, t(0) = i.
    static BoundarySpec tangent_disc(EtaProfile eta = EtaProfile::weyl());
    /// Image of the unit circle under an analytic map G, parametrised by the
    /// disc angle: z(theta) = G(e^{i theta}).
    static BoundarySpec conformal_image(std::string tag, std::function<cplx(cplx)> map,
                                        std::function<cplx(cplx)> map_derivative,
                                        std::function<cplx(cplx)> map_second_derivative, EtaProfile eta);
    /// Uniform samples z(theta_j), trigonometrically interpolated.
    static BoundarySpec custom_samples(std::span<const cplx> points, EtaProfile eta);

    CurveKind kind() const { return kind_; }
    const std::string& tag() const { return tag_; }
    const EtaProfile& eta() const { return eta_; }

    cplx point(double theta) const { return z_(theta); }
    cplx velocity(double theta) const { return dz_(theta); }
    cplx acceleration(double theta) const { return d2z_(theta); }

    /// Same curve, different eta.
    BoundarySpec with_eta(EtaProfile eta) const;

    /// Signed area by the trapezoid rule on `samples` points.
    double signed_area(std::size_t samples = 1024) const;

private:
    BoundarySpec(CurveKind kind, std::string tag, CurveFn z, CurveFn dz, CurveFn d2z, EtaProfile eta);
    void validate() const;

    CurveKind kind_;
    std::string tag_;
    CurveFn z_, dz_, d2z_;
    EtaProfile eta_;
};

/// Tangent t = z'/|z'|, outward normal n = -i t. Throws std::domain_error if
/// |z'(theta)| < 1e-12.
BoundaryFrame frame_at(const BoundarySpec& spec, double theta);

/// B = (1 - sin eta)/cos eta, evaluated as tan((pi/2 - eta)/2). Throws
/// ZigzagError when |cos eta| < eps_eta, unless the spec is the tangent disc
/// (Weyl mode) where B extends through the zigzag point by the closed form.
double b_of(const BoundarySpec& spec, double theta, double eps_eta = kDefaultEpsEta);

enum class BetaConvention { v2_over_v1, v1_over_v2 };

/// v2_over_v1: B t (gamma v2 = B t gamma v1). v1_over_v2: conj(t) cos eta / (1 - sin eta).
cplx beta_of(const BoundarySpec& spec, double theta, BetaConvention convention,
             double eps_eta = kDefaultEpsEta);

struct EtaValidation {
    double min_abs_cos = 0.0;
    bool ok = false;
};

/// Minimum of |cos eta| over `samples` uniform parameter values.
EtaValidation validate_eta(const BoundarySpec& spec, double eps_eta = kDefaultEpsEta, std::size_t samples = 4096);

}  // namespace diracspec
