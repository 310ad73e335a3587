#include "diracspec/conformal_transport.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "diracspec/errors.hpp"

namespace diracspec {

namespace {

constexpr double kMaxQuadratic = 0.45;

std::size_t pow2_at_least(std::size_t n) {
    std::size_t p = 16;
    while (p < n) p *= 2;
    return p;
}

// Spectral antiderivative data for the boundary speed |G'(e^{i theta})|.
struct SpeedIntegral {
    FourierVector h;  // coefficients of the periodic part of the antiderivative
    double mean = 0.0;  // mean speed
    double length = 0.0;
    double h0 = 0.0;

    double arclength(double theta) const { return mean * theta + std::real(evaluate(h, theta)) - h0; }
};

SpeedIntegral speed_integral(const ConformalMap& map, std::size_t count) {
    std::vector<cplx> speed(count);
    const auto theta = uniform_angles(count);
    for (std::size_t j = 0; j < count; ++j) speed[j] = std::abs(map.derivative(std::polar(1.0, theta[j])));
    const int bw = static_cast<int>(count / 2) - 1;
    const FourierVector g = analyze(speed, bw);
    SpeedIntegral s;
    s.h = FourierVector(bw);
    for (int n = -bw; n <= bw; ++n)
        if (n != 0) s.h.at(n) = g[n] / cplx(0.0, n);
    s.mean = std::real(g[0]) * kInvSqrtTwoPi;
    s.length = kTwoPi * s.mean;
    s.h0 = std::real(evaluate(s.h, 0.0));
    return s;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
}

ConditionReport condition_of(const Eigen::MatrixXcd& m, int bandwidth, double s) {
    const Eigen::VectorXd sv = singular_values(m);
    ConditionReport r;
    r.bandwidth = bandwidth;
    r.s = s;
    r.rows = static_cast<int>(m.rows());
    r.sigma_max = sv(0);
    r.sigma_min = sv(sv.size() - 1);
    r.condition = r.sigma_min > 0.0 ? r.sigma_max / r.sigma_min : std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace

std::string to_string(MapFamily f) {
    switch (f) {
        case MapFamily::identity: return "identity";
        case MapFamily::quadratic: return "quadratic";
        case MapFamily::moebius: return "moebius";
    }
    return "unknown";
}

ConformalMap ConformalMap::identity() { return ConformalMap(MapFamily::identity, 0.0, 0.0); }

ConformalMap ConformalMap::quadratic(cplx a) {
    if (!(std::abs(a) <= kMaxQuadratic))
        throw std::invalid_argument("quadratic map: |a| must not exceed 0.45 (univalence margin)");
    return ConformalMap(MapFamily::quadratic, a, 0.0);
}

ConformalMap ConformalMap::moebius(double phi, cplx b) {
    if (!(std::abs(b) < 1.0)) throw std::invalid_argument("moebius map: |b| must be below 1");
    return ConformalMap(MapFamily::moebius, b, phi);
}

std::string ConformalMap::tag() const {
    std::ostringstream os;
    os << to_string(family_);
    if (family_ == MapFamily::quadratic) os << "(a=" << p_.real() << (p_.imag() < 0 ? "" : "+") << p_.imag() << "i)";
    if (family_ == MapFamily::moebius)
        os << "(phi=" << phi_ << ",b=" << p_.real() << (p_.imag() < 0 ? "" : "+") << p_.imag() << "i)";
    return os.str();
}

cplx ConformalMap::operator()(cplx w) const {
    switch (family_) {
        case MapFamily::identity: return w;
        case MapFamily::quadratic: return w + p_ * w * w;
        case MapFamily::moebius: return std::polar(1.0, phi_) * (w + p_) / (1.0 + std::conj(p_) * w);
    }
    return w;
}

cplx ConformalMap::derivative(cplx w) const {
    switch (family_) {
        case MapFamily::identity: return 1.0;
        case MapFamily::quadratic: return 1.0 + 2.0 * p_ * w;
        case MapFamily::moebius: {
            const cplx d = 1.0 + std::conj(p_) * w;
            return std::polar(1.0, phi_) * (1.0 - std::norm(p_)) / (d * d);
        }
    }
    return 1.0;
}

cplx ConformalMap::second_derivative(cplx w) const {
    switch (family_) {
        case MapFamily::identity: return 0.0;
        case MapFamily::quadratic: return 2.0 * p_;
        case MapFamily::moebius: {
            const cplx d = 1.0 + std::conj(p_) * w;
            return -2.0 * std::conj(p_) * std::polar(1.0, phi_) * (1.0 - std::norm(p_)) / (d * d * d);
        }
    }
    return 0.0;
}

cplx ConformalMap::inverse(cplx z) const {
    cplx w = z;
    switch (family_) {
        case MapFamily::identity: return z;
        case MapFamily::quadratic: {
            if (p_ == cplx{}) return z;
            const cplx root = std::sqrt(1.0 + 4.0 * p_ * z);
            const cplx w1 = (-1.0 + root) / (2.0 * p_);
            const cplx w2 = (-1.0 - root) / (2.0 * p_);
            w = std::abs(w1) <= std::abs(w2) ? w1 : w2;
            break;
        }
        case MapFamily::moebius: {
            const cplx y = std::polar(1.0, -phi_) * z;
            w = (y - p_) / (1.0 - std::conj(p_) * y);
            break;
        }
    }
    for (int it = 0; it < 4; ++it) w -= ((*this)(w) - z) / derivative(w);
    return w;
}

BoundarySpec ConformalMap::boundary(EtaProfile eta) const {
    if (family_ == MapFamily::identity) return BoundarySpec::unit_circle(std::move(eta));
    const ConformalMap self = *this;
    return BoundarySpec::conformal_image(
        tag(), [self](cplx w) { return self(w); }, [self](cplx w) { return self.derivative(w); },
        [self](cplx w) { return self.second_derivative(w); }, std::move(eta));
}

double ConformalMap::min_abs_derivative(int samples) const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double r = static_cast<double>(i) / samples;
        for (double th : uniform_angles(static_cast<std::size_t>(4 * samples)))
            m = std::min(m, std::abs(derivative(std::polar(r, th))));
    }
    return m;
}

double ConformalMap::injectivity_margin(int samples) const {
    const auto theta = uniform_angles(static_cast<std::size_t>(samples));
    std::vector<cplx> w(theta.size()), z(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        w[i] = std::polar(1.0, theta[i]);
        z[i] = (*this)(w[i]);
    }
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) margin = std::min(margin, std::abs(z[i] - z[j]) / std::abs(w[i] - w[j]));
    return margin;
}

std::function<cplx(cplx)> transplant(std::function<cplx(cplx)> v, const ConformalMap& map) {
    return [v = std::move(v), map](cplx w) { return v(map(w)); };
}

std::vector<cplx> transplant_boundary(const std::function<cplx(cplx)>& v, const ConformalMap& map, std::size_t count) {
    std::vector<cplx> out;
    out.reserve(count);
    for (double th : uniform_angles(count)) out.push_back(v(map(std::polar(1.0, th))));
    return out;
}

cplx pullback_dz(const std::function<cplx(cplx)>& dz_v, const ConformalMap& map, cplx w) {
    return map.derivative(w) * dz_v(map(w));
}

cplx pullback_dzbar(const std::function<cplx(cplx)>& dzbar_v, const ConformalMap& map, cplx w) {
    return std::conj(map.derivative(w)) * dzbar_v(map(w));
}

ArclengthParam arclength_parametrisation(const ConformalMap& map, std::size_t count) {
    const SpeedIntegral si = speed_integral(map, count);
    ArclengthParam a;
    a.length = si.length;
    a.phi.resize(count);
    a.dphi.resize(count);
    const auto theta = uniform_angles(count);
    for (std::size_t j = 0; j < count; ++j) {
        a.phi[j] = kTwoPi * si.arclength(theta[j]) / si.length;
        a.dphi[j] = kTwoPi * std::abs(map.derivative(std::polar(1.0, theta[j]))) / si.length;
    }
    return a;
}

NormMatrix u_norm_matrix(const ConformalMap& map, double s, int bandwidth) {
    if (bandwidth < 1 || bandwidth > 256) throw std::invalid_argument("u_norm_matrix: bandwidth must lie in [1, 256]");
    if (s < -1.0 || s > 1.0) throw std::invalid_argument("u_norm_matrix: s must lie in [-1, 1]");
    const ArclengthParam probe = arclength_parametrisation(map, 1024);
    const double b = *std::max_element(probe.dphi.begin(), probe.dphi.end());
    const int rows = static_cast<int>(std::ceil(1.25 * b * bandwidth)) + 8;
    const std::size_t q = pow2_at_least(static_cast<std::size_t>(4 * (2 * rows + 2)));
    const ArclengthParam ap = arclength_parametrisation(map, q);

    const int cols = 2 * bandwidth + 1;
    Eigen::MatrixXcd m(2 * rows + 1, cols);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < cols; ++c) {
        const int mi = c - bandwidth;
        std::vector<cplx> col(q);
        for (std::size_t j = 0; j < q; ++j) col[j] = kInvSqrtTwoPi * std::polar(1.0, mi * ap.phi[j]);
        const FourierVector f = analyze(col, rows);
        const double wc = std::pow(std::abs(mi) + 1.0, -s);
        for (int n = -rows; n <= rows; ++n) m(n + rows, c) = std::pow(std::abs(n) + 1.0, s) * wc * f[n];
    }
    NormMatrix out;
    out.report = condition_of(m, bandwidth, s);
    out.matrix = std::move(m);
    return out;
}

NormMatrix u_adjoint_norm_matrix(const ConformalMap& map, double s, int bandwidth) {
    if (bandwidth < 1 || bandwidth > 256) throw std::invalid_argument("u_adjoint_norm_matrix: bandwidth must lie in [1, 256]");
    if (s < -1.0 || s > 1.0) throw std::invalid_argument("u_adjoint_norm_matrix: s must lie in [-1, 1]");
    const ArclengthParam probe = arclength_parametrisation(map, 1024);
    const double bstar = 1.0 / *std::min_element(probe.dphi.begin(), probe.dphi.end());
    const int rows = static_cast<int>(std::ceil(1.25 * bstar * bandwidth)) + 8;
    const std::size_t q = pow2_at_least(static_cast<std::size_t>(4 * (2 * rows + 2)));
    const SpeedIntegral si = speed_integral(map, q);

    // theta(phi) at uniform phi by Newton on the spectral arclength.
    const auto phi = uniform_angles(q);
    std::vector<double> theta(q), dtheta(q);
    for (std::size_t j = 0; j < q; ++j) {
        double t = phi[j];
        for (int it = 0; it < 50; ++it) {
            const double speed = std::abs(map.derivative(std::polar(1.0, t)));
            const double f = kTwoPi * si.arclength(t) / si.length - phi[j];
            const double dt = f / (kTwoPi * speed / si.length);
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        theta[j] = t;
        dtheta[j] = si.length / (kTwoPi * std::abs(map.derivative(std::polar(1.0, t))));
    }

    const int cols = 2 * bandwidth + 1;
    Eigen::MatrixXcd m(2 * rows + 1, cols);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < cols; ++c) {
        const int ni = c - bandwidth;
        std::vector<cplx> col(q);
        for (std::size_t j = 0; j < q; ++j) col[j] = kInvSqrtTwoPi * std::polar(dtheta[j], ni * theta[j]);
        const FourierVector f = analyze(col, rows);
        const double wc = std::pow(std::abs(ni) + 1.0, -s);
        for (int mi = -rows; mi <= rows; ++mi) m(mi + rows, c) = std::pow(std::abs(mi) + 1.0, s) * wc * f[mi];
    }
    NormMatrix out;
    out.report = condition_of(m, bandwidth, s);
    out.matrix = std::move(m);
    return out;
}

TransportedBoundary transport_beta(const BoundarySpec& spec, const ConformalMap& map, int bandwidth, double eps_eta) {
    for (double th : uniform_angles(8)) {
        if (std::abs(spec.point(th) - map(std::polar(1.0, th))) > 1e-9)
            throw std::invalid_argument("transport_beta: the boundary is not parametrised by the disc angle of the map");
    }
    const EtaValidation ev = validate_eta(spec, eps_eta);
    if (!ev.ok) {
        std::ostringstream os;
        os << "transport_beta: min |cos eta| = " << ev.min_abs_cos << " below eps_eta";
        throw ZigzagError(os.str());
    }
    const std::size_t count = pow2_at_least(std::max<std::size_t>(4096, static_cast<std::size_t>(4 * bandwidth + 4)));
    std::vector<cplx> values(count);
    TransportedBoundary tb;
    tb.min_abs = std::numeric_limits<double>::infinity();
    const auto theta = uniform_angles(count);
    for (std::size_t j = 0; j < count; ++j) {
        values[j] = beta_of(spec, theta[j], BetaConvention::v1_over_v2, eps_eta);
        tb.min_abs = std::min(tb.min_abs, std::abs(values[j]));
        tb.max_abs = std::max(tb.max_abs, std::abs(values[j]));
    }
    tb.beta_circle = analyze(values, bandwidth);
    return tb;
}

int winding_number(const std::vector<cplx>& loop, cplx p) {
    double total = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const cplx a = loop[i] - p;
        const cplx b = loop[(i + 1) % loop.size()] - p;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

InversionResult inversion_map(cplx z_j, const std::vector<std::vector<cplx>>& components, std::size_t j, double d_min) {
    if (j >= components.size()) throw std::invalid_argument("inversion_map: component index out of range");
    if (!(d_min > 0.0)) throw std::invalid_argument("inversion_map: d_min must be positive");
    InversionResult r;
    r.bound = 1.0 / (d_min * d_min);
    for (const auto& comp : components) {
        std::vector<cplx> img;
        std::vector<double> der;
        img.reserve(comp.size());
        der.reserve(comp.size());
        for (cplx z : comp) {
            const double d = std::abs(z - z_j);
            if (d < d_min) {
                std::ostringstream os;
                os << "inversion_map: sample " << z << " lies within " << d << " < d_min of the centre";
                throw std::invalid_argument(os.str());
            }
            img.push_back(1.0 / (z - z_j));
            der.push_back(1.0 / (d * d));
            r.sup_derivative = std::max(r.sup_derivative, der.back());
        }
        r.images.push_back(std::move(img));
        r.derivative_moduli.push_back(std::move(der));
    }
    r.exterior_ok = true;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i == j) continue;
        for (cplx w : r.images[i])
            if (winding_number(r.images[j], w) == 0) r.exterior_ok = false;
    }
    return r;
}

}  // namespace diracspec
