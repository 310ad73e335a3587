#include "diracspec/cauchy_calderon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diracspec {

namespace {

int index_of(int component, int n, int bandwidth) { return component * (2 * bandwidth + 1) + n + bandwidth; }

double inner_l2_disc(const HolomorphicDiscFunction& a, const HolomorphicDiscFunction& b) {
    if (a.antiholomorphic != b.antiholomorphic) {
        // <zeta^j, conj(zeta)^k> vanishes unless j = k = 0.
        const cplx a0 = a.taylor.empty() ? cplx{} : a.taylor[0];
        const cplx b0 = b.taylor.empty() ? cplx{} : b.taylor[0];
        return std::real(std::conj(a0) * b0) * kPi;
    }
    double acc = 0.0;
    const std::size_t m = std::min(a.taylor.size(), b.taylor.size());
    for (std::size_t k = 0; k < m; ++k)
        acc += std::real(std::conj(a.taylor[k]) * b.taylor[k]) * kPi / static_cast<double>(k + 1);
    return acc;
}

}  // namespace

cplx HolomorphicDiscFunction::value(cplx z) const {
    const cplx w = antiholomorphic ? std::conj(z) : z;
    cplx acc{};
    for (auto it = taylor.rbegin(); it != taylor.rend(); ++it) acc = acc * w + *it;
    return acc;
}

cplx HolomorphicDiscFunction::dz(cplx z) const {
    if (antiholomorphic) return {};
    cplx acc{};
    for (std::size_t k = taylor.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * taylor[k];
    return acc;
}

cplx HolomorphicDiscFunction::dzbar(cplx z) const {
    if (!antiholomorphic) return {};
    const cplx w = std::conj(z);
    cplx acc{};
    for (std::size_t k = taylor.size(); k-- > 1;) acc = acc * w + static_cast<double>(k) * taylor[k];
    return acc;
}

double HolomorphicDiscFunction::l2_norm_sq() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < taylor.size(); ++k) acc += std::norm(taylor[k]) * kPi / static_cast<double>(k + 1);
    return acc;
}

bool HolomorphicDiscFunction::is_zero() const {
    return std::all_of(taylor.begin(), taylor.end(), [](cplx c) { return c == cplx{}; });
}

HolomorphicDiscFunction apply_K(const FourierVector& f) {
    HolomorphicDiscFunction h;
    h.taylor.resize(static_cast<std::size_t>(f.bandwidth()) + 1);
    for (int n = 0; n <= f.bandwidth(); ++n) h.taylor[static_cast<std::size_t>(n)] = kInvSqrtTwoPi * f[n];
    return h;
}

HolomorphicDiscFunction apply_Kbar(const FourierVector& f) {
    HolomorphicDiscFunction h;
    h.antiholomorphic = true;
    h.taylor.resize(static_cast<std::size_t>(f.bandwidth()) + 1);
    for (int n = 0; n <= f.bandwidth(); ++n) h.taylor[static_cast<std::size_t>(n)] = kInvSqrtTwoPi * f[-n];
    return h;
}

FourierVector trace_K(const FourierVector& f) {
    FourierVector out(f.bandwidth());
    for (int n = 0; n <= f.bandwidth(); ++n) out.at(n) = f[n];
    return out;
}

FourierVector trace_Kbar(const FourierVector& f) {
    FourierVector out(f.bandwidth());
    for (int n = -f.bandwidth(); n <= 0; ++n) out.at(n) = f[n];
    return out;
}

std::pair<HolomorphicDiscFunction, HolomorphicDiscFunction> apply_S(const SpinorTrace& trace) {
    return {apply_K(trace.first), apply_Kbar(trace.second)};
}

SpinorTrace calderon(const SpinorTrace& trace, const BoundarySpec& spec) {
    if (spec.kind() != CurveKind::unit_circle)
        throw std::invalid_argument("calderon: only defined on the unit circle (map other domains to the disc first)");
    // sigma.n u = (conj(n) u_2, n u_1); n = e^{i theta} moves indices by one.
    const FourierVector w1 = shift(trace.second, -1);
    const FourierVector w2 = shift(trace.first, 1);
    // S_G w = (K(conj(n) w_2), Kbar(n w_1))
    FourierVector a = trace_K(shift(w2, -1)).resized(trace.bandwidth());
    FourierVector b = trace_Kbar(shift(w1, 1)).resized(trace.bandwidth());
    return SpinorTrace(std::move(a), std::move(b));
}

Eigen::MatrixXcd calderon_matrix_shift(int bandwidth) {
    const int dim = 2 * (2 * bandwidth + 1);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const BoundarySpec circle = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    for (int comp = 0; comp < 2; ++comp) {
        for (int n = -bandwidth; n <= bandwidth; ++n) {
            FourierVector e = FourierVector::basis(n, bandwidth);
            FourierVector z(bandwidth);
            const SpinorTrace in = comp == 0 ? SpinorTrace(e, z) : SpinorTrace(z, e);
            const SpinorTrace out = calderon(in, circle);
            const int col = index_of(comp, n, bandwidth);
            for (int k = -bandwidth; k <= bandwidth; ++k) {
                m(index_of(0, k, bandwidth), col) = out.first[k];
                m(index_of(1, k, bandwidth), col) = out.second[k];
            }
        }
    }
    return m;
}

Eigen::MatrixXcd calderon_matrix_quadrature(int bandwidth, const BoundarySpec& spec, std::size_t samples,
                                            double radius) {
    if (spec.kind() != CurveKind::unit_circle)
        throw std::invalid_argument("calderon_matrix_quadrature: only defined on the unit circle");
    if (!(radius > 0.0 && radius < 1.0)) throw std::invalid_argument("calderon_matrix_quadrature: radius in (0, 1)");
    const int dim = 2 * (2 * bandwidth + 1);
    const auto theta = uniform_angles(samples);
    const double dtheta = kTwoPi / static_cast<double>(samples);

    std::vector<cplx> zeta(samples);
    std::vector<double> ds(samples);
    std::vector<Mat2> sn(samples);
    for (std::size_t l = 0; l < samples; ++l) {
        zeta[l] = spec.point(theta[l]);
        ds[l] = std::abs(spec.velocity(theta[l])) * dtheta;
        sn[l] = sigma_dot_n(frame_at(spec, theta[l]));
    }
    std::vector<cplx> targets(samples);
    for (std::size_t j = 0; j < samples; ++j) targets[j] = std::polar(radius, theta[j]);

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
#pragma omp parallel for schedule(static)
    for (int col = 0; col < dim; ++col) {
        const int comp = col / (2 * bandwidth + 1);
        const int n = col % (2 * bandwidth + 1) - bandwidth;
        std::vector<cplx> w1(samples), w2(samples);
        for (std::size_t l = 0; l < samples; ++l) {
            const cplx e = kInvSqrtTwoPi * std::polar(1.0, n * theta[l]);
            Eigen::Vector2cd u(comp == 0 ? e : cplx{}, comp == 1 ? e : cplx{});
            const Eigen::Vector2cd w = sn[l] * u;
            w1[l] = w(0) * ds[l];
            w2[l] = w(1) * ds[l];
        }
        std::vector<cplx> v1(samples), v2(samples);
        for (std::size_t j = 0; j < samples; ++j) {
            cplx a{}, b{};
            for (std::size_t l = 0; l < samples; ++l) {
                const cplx d = zeta[l] - targets[j];
                a += w2[l] / d;
                b += w1[l] / std::conj(d);
            }
            v1[j] = a / kTwoPi;
            v2[j] = b / kTwoPi;
        }
        const FourierVector c1 = analyze(v1, bandwidth);
        const FourierVector c2 = analyze(v2, bandwidth);
        for (int k = -bandwidth; k <= bandwidth; ++k) {
            const double scale = std::pow(radius, -std::abs(k));
            m(index_of(0, k, bandwidth), col) = c1[k] * scale;
            m(index_of(1, k, bandwidth), col) = c2[k] * scale;
        }
    }
    return m;
}

FourierVector commutator_apply(const FourierVector& beta, const FourierVector& f) {
    const int nb = beta.bandwidth();
    const int nf = f.bandwidth();
    FourierVector out(nb + nf);
    for (int n = -(nb + nf); n <= nb + nf; ++n) {
        cplx acc{};
        if (n >= 0) {
            for (int k = std::max(-nf, n - nb); k < 0; ++k) acc -= beta[n - k] * f[k];
        } else {
            for (int k = 0; k <= std::min(nf, n + nb); ++k) acc += beta[n - k] * f[k];
        }
        out.at(n) = kInvSqrtTwoPi * acc;
    }
    return out;
}

FourierVector commutator_compose(const FourierVector& beta, const FourierVector& f) {
    return multiply(beta, trace_K(f)) - trace_K(multiply(beta, f));
}

double smoothing_ratio(const FourierVector& beta, const FourierVector& f, double s) {
    const double den = hs_norm(beta, 1.0) * hs_norm(f, s);
    if (den == 0.0) throw std::invalid_argument("smoothing_ratio: zero multiplier or zero input");
    return hs_norm(commutator_apply(beta, f), s + 0.5) / den;
}

double cauchy_extension_norm(int bandwidth, ExtensionPart part) {
    if (bandwidth < 0) throw std::invalid_argument("cauchy_extension_norm: negative bandwidth");
    std::vector<HolomorphicDiscFunction> ext;
    std::vector<int> comp;
    std::vector<double> weight;
    for (int c = 0; c < 2; ++c) {
        if ((c == 0 && part == ExtensionPart::Kbar) || (c == 1 && part == ExtensionPart::K)) continue;
        for (int n = -bandwidth; n <= bandwidth; ++n) {
            const FourierVector e = FourierVector::basis(n, bandwidth);
            ext.push_back(c == 0 ? apply_K(e) : apply_Kbar(e));
            comp.push_back(c);
            // unit vector of H^{-1/2}: (|n|+1)^{1/2} e_n
            weight.push_back(std::sqrt(std::abs(n) + 1.0));
        }
    }
    const auto dim = static_cast<Eigen::Index>(ext.size());
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            if (comp[static_cast<std::size_t>(i)] == comp[static_cast<std::size_t>(j)])
                gram(i, j) = weight[static_cast<std::size_t>(i)] * weight[static_cast<std::size_t>(j)] *
                             inner_l2_disc(ext[static_cast<std::size_t>(i)], ext[static_cast<std::size_t>(j)]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

BootstrapSplit bootstrap_split(const FourierVector& beta, const FourierVector& f) {
    BootstrapSplit s;
    s.smooth_part = multiply(beta, trace_K(f));
    s.commutator_part = commutator_apply(beta, f);
    return s;
}

}  // namespace diracspec
