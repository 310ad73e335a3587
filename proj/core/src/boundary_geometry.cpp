#include "diracspec/boundary_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diracspec/errors.hpp"
#include "diracspec/smooth_step.hpp"

namespace diracspec {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kDegenerateSpeed = 1e-12;

// Weyl depth: psi^2 on |psi| <= 1/2, blended to 1/4 over 1/2 <= |psi| <= 3/2.
constexpr double kWeylInner = 0.5;
constexpr double kWeylOuter = 1.5;
constexpr double kWeylPlateau = 0.25;
const SmoothStep kWeylBlend{};

double wrap_pi(double psi) {
    double w = std::remainder(psi, kTwoPi);
    if (w <= -kPi) w += kTwoPi;
    return w;
}

}  // namespace

double weyl_depth(double psi) {
    const double x = std::abs(wrap_pi(psi));
    const double s = kWeylBlend((x - kWeylInner) / (kWeylOuter - kWeylInner));
    return (1.0 - s) * x * x + s * kWeylPlateau;
}

double weyl_depth_derivative(double psi) {
    const double w = wrap_pi(psi);
    const double x = std::abs(w);
    const double u = (x - kWeylInner) / (kWeylOuter - kWeylInner);
    const double s = kWeylBlend(u);
    const double ds = kWeylBlend.derivative(u) / (kWeylOuter - kWeylInner);
    const double dx = 2.0 * x * (1.0 - s) + ds * (kWeylPlateau - x * x);
    return w < 0.0 ? -dx : dx;
}

EtaProfile EtaProfile::constant(double value) {
    EtaProfile p;
    p.kind_ = Kind::constant;
    p.a0_ = value;
    return p;
}

EtaProfile EtaProfile::fourier(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
    EtaProfile p;
    p.kind_ = Kind::fourier;
    p.a0_ = a0;
    p.cos_ = std::move(cos_coeffs);
    p.sin_ = std::move(sin_coeffs);
    return p;
}

EtaProfile EtaProfile::weyl() {
    EtaProfile p;
    p.kind_ = Kind::weyl;
    return p;
}

double EtaProfile::value(double theta) const {
    switch (kind_) {
        case Kind::constant: return a0_;
        case Kind::weyl: return 0.5 * kPi - weyl_depth(theta);
        case Kind::fourier: break;
    }
    double v = a0_;
    for (std::size_t k = 0; k < cos_.size(); ++k) v += cos_[k] * std::cos(static_cast<double>(k + 1) * theta);
    for (std::size_t k = 0; k < sin_.size(); ++k) v += sin_[k] * std::sin(static_cast<double>(k + 1) * theta);
    return v;
}

double EtaProfile::derivative(double theta) const {
    switch (kind_) {
        case Kind::constant: return 0.0;
        case Kind::weyl: return -weyl_depth_derivative(theta);
        case Kind::fourier: break;
    }
    double v = 0.0;
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        const double m = static_cast<double>(k + 1);
        v -= m * cos_[k] * std::sin(m * theta);
    }
    for (std::size_t k = 0; k < sin_.size(); ++k) {
        const double m = static_cast<double>(k + 1);
        v += m * sin_[k] * std::cos(m * theta);
    }
    return v;
}

double EtaProfile::complement(double theta) const {
    if (kind_ == Kind::weyl) return weyl_depth(theta);
    return 0.5 * kPi - value(theta);
}

double EtaProfile::complement_derivative(double theta) const {
    if (kind_ == Kind::weyl) return weyl_depth_derivative(theta);
    return -derivative(theta);
}

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::unit_circle: return "unit_circle";
        case CurveKind::tangent_disc: return "tangent_disc";
        case CurveKind::conformal_image: return "conformal_image";
        case CurveKind::custom_samples: return "custom_samples";
    }
    return "unknown";
}

BoundarySpec::BoundarySpec(CurveKind kind, std::string tag, CurveFn z, CurveFn dz, CurveFn d2z, EtaProfile eta)
    : kind_(kind), tag_(std::move(tag)), z_(std::move(z)), dz_(std::move(dz)), d2z_(std::move(d2z)),
      eta_(std::move(eta)) {
    validate();
}

void BoundarySpec::validate() const {
    constexpr std::size_t probes = 512;
    for (double th : uniform_angles(probes)) {
        if (std::abs(dz_(th)) < kDegenerateSpeed)
            throw std::invalid_argument("BoundarySpec: degenerate parametrisation at theta = " + std::to_string(th));
    }
    if (signed_area(probes) <= 0.0) throw std::invalid_argument("BoundarySpec: curve is not counterclockwise");
}

BoundarySpec BoundarySpec::unit_circle(EtaProfile eta) {
    return BoundarySpec(
        CurveKind::unit_circle, "unit_circle", [](double t) { return std::polar(1.0, t); },
        [](double t) { return I * std::polar(1.0, t); }, [](double t) { return -std::polar(1.0, t); },
        std::move(eta));
}

BoundarySpec BoundarySpec::tangent_disc(EtaProfile eta) {
    return BoundarySpec(
        CurveKind::tangent_disc, "tangent_disc", [](double t) { return -1.0 + std::polar(1.0, t); },
        [](double t) { return I * std::polar(1.0, t); }, [](double t) { return -std::polar(1.0, t); },
        std::move(eta));
}

BoundarySpec BoundarySpec::conformal_image(std::string tag, std::function<cplx(cplx)> map,
                                           std::function<cplx(cplx)> map_derivative,
                                           std::function<cplx(cplx)> map_second_derivative, EtaProfile eta) {
    // z = G(w), w = e^{i theta}: z' = G'(w) i w, z'' = -G''(w) w^2 - G'(w) w.
    auto z = [g = map](double t) { return g(std::polar(1.0, t)); };
    auto dz = [dg = map_derivative](double t) {
        const cplx w = std::polar(1.0, t);
        return dg(w) * I * w;
    };
    auto d2z = [dg = map_derivative, d2g = std::move(map_second_derivative)](double t) {
        const cplx w = std::polar(1.0, t);
        return -d2g(w) * w * w - dg(w) * w;
    };
    return BoundarySpec(CurveKind::conformal_image, std::move(tag), std::move(z), std::move(dz), std::move(d2z),
                        std::move(eta));
}

BoundarySpec BoundarySpec::custom_samples(std::span<const cplx> points, EtaProfile eta) {
    if (points.size() < 16) throw std::invalid_argument("custom_samples: need at least 16 points");
    const int band = static_cast<int>(points.size() / 2) - 1;
    FourierVector c = analyze(points, band);

    // C^2 proxy: the upper half of the band carries a negligible share of the
    // second-derivative energy.
    double total = 0.0;
    double tail = 0.0;
    for (int n = -band; n <= band; ++n) {
        const double w = static_cast<double>(n) * n * std::abs(c[n]);
        total += w;
        if (std::abs(n) > band / 2) tail += w;
    }
    if (total > 0.0 && tail > 1e-6 * total)
        throw std::invalid_argument("custom_samples: interpolation coefficients do not decay (curve not C^2 resolved)");

    FourierVector dc = derivative(c);
    FourierVector d2c = derivative(dc);
    return BoundarySpec(
        CurveKind::custom_samples, "custom_samples", [c](double t) { return evaluate(c, t); },
        [dc](double t) { return evaluate(dc, t); }, [d2c](double t) { return evaluate(d2c, t); }, std::move(eta));
}

BoundarySpec BoundarySpec::with_eta(EtaProfile eta) const {
    BoundarySpec s = *this;
    s.eta_ = std::move(eta);
    return s;
}

double BoundarySpec::signed_area(std::size_t samples) const {
    // A = 1/2 \oint Im(conj(z) dz)
    double acc = 0.0;
    for (double th : uniform_angles(samples)) acc += std::imag(std::conj(z_(th)) * dz_(th));
    return 0.5 * acc * kTwoPi / static_cast<double>(samples);
}

BoundaryFrame frame_at(const BoundarySpec& spec, double theta) {
    const cplx v = spec.velocity(theta);
    const double speed = std::abs(v);
    if (speed < kDegenerateSpeed)
        throw std::domain_error("frame_at: degenerate parametrisation at theta = " + std::to_string(theta));
    BoundaryFrame f;
    f.point = spec.point(theta);
    f.tangent = v / speed;
    f.normal = -I * f.tangent;
    f.eta = spec.eta().value(theta);
    return f;
}

double b_of(const BoundarySpec& spec, double theta, double eps_eta) {
    const double delta = spec.eta().complement(theta);
    const bool weyl_mode = spec.kind() == CurveKind::tangent_disc;
    // cos(eta) = sin(pi/2 - eta)
    if (!weyl_mode && std::abs(std::sin(delta)) < eps_eta) {
        std::ostringstream os;
        os << "zigzag point: |cos eta| = " << std::abs(std::sin(delta)) << " < " << eps_eta
           << " at theta = " << theta;
        throw ZigzagError(os.str());
    }
    const double b = std::tan(0.5 * delta);
    if (!std::isfinite(b) || std::abs(std::cos(0.5 * delta)) < 1e-300)
        throw ZigzagError("b_of: B diverges at theta = " + std::to_string(theta));
    return b;
}

cplx beta_of(const BoundarySpec& spec, double theta, BetaConvention convention, double eps_eta) {
    const double b = b_of(spec, theta, eps_eta);
    const cplx t = frame_at(spec, theta).tangent;
    if (convention == BetaConvention::v2_over_v1) return b * t;
    if (b == 0.0) throw std::domain_error("beta_of: 1 - sin(eta) = 0, conjugate convention undefined");
    return std::conj(t) / b;
}

EtaValidation validate_eta(const BoundarySpec& spec, double eps_eta, std::size_t samples) {
    if (samples < 16) throw std::invalid_argument("validate_eta: need at least 16 samples");
    EtaValidation v;
    v.min_abs_cos = std::numeric_limits<double>::infinity();
    for (double th : uniform_angles(samples))
        v.min_abs_cos = std::min(v.min_abs_cos, std::abs(std::sin(spec.eta().complement(th))));
    v.ok = v.min_abs_cos >= eps_eta;
    return v;
}

}  // namespace diracspec
