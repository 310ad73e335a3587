#include "diracspec/weyl_witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "diracspec/errors.hpp"
#include "diracspec/quadrature.hpp"
#include "diracspec/smooth_step.hpp"

namespace diracspec {

namespace {

constexpr cplx I{0.0, 1.0};
const SmoothStep kStep{};

// B(psi) = tan(g(psi)/2) and dB/dpsi.
double weyl_b(double psi) { return std::tan(0.5 * weyl_depth(psi)); }

double weyl_db(double psi) {
    const double c = std::cos(0.5 * weyl_depth(psi));
    return 0.5 * weyl_depth_derivative(psi) / (c * c);
}

std::vector<double> graded_breaks(double first, double end) {
    std::vector<double> b{0.0};
    for (double x = first; x < end; x *= 2.0) b.push_back(x);
    if (b.back() < end) b.push_back(end);
    return b;
}

struct Integrals {
    double v = 0.0;       // ||v||^2 (scaled)
    double tv = 0.0;      // ||Tv||^2 (scaled)
    double cut = 0.0;     // ||(T chi) u||^2 (scaled)
    double outside = 0.0; // ||v||^2 outside B(0, delta) (scaled)
};

struct Pointwise {
    double v = 0.0;
    double tv = 0.0;
    double cut = 0.0;
};

Pointwise integrand(cplx z, double psi, const WeylConfig& cfg, double c, const Cutoff& chi) {
    Pointwise out;
    const double r = std::abs(z);
    const double x = r / cfg.radius;
    if (x >= 1.0 || r == 0.0) return out;
    const double ch = chi(x);
    const double dch = chi.derivative(x) / cfg.radius;
    const cplx zs = z - cfg.pole;
    const cplx ratio = c / zs;
    cplx p = 1.0;
    for (int i = 0; i < cfg.n; ++i) p *= ratio;
    const cplx dp = -static_cast<double>(cfg.n) * p / zs;

    const double b = weyl_b(psi);
    const cplx t = I * (z + 1.0);
    const cplx db_dz = weyl_db(psi) / (2.0 * I * (z + 1.0));
    const cplx dchi_dz = dch * std::conj(z) / (2.0 * r);
    const cplx dchi_dzbar = dch * z / (2.0 * r);

    const cplx v1 = ch * p;
    const cplx v2 = ch * b * t * p;
    const cplx m2i{0.0, -2.0};
    const cplx tv2 = m2i * dchi_dzbar * p;
    const cplx cut1 = m2i * dchi_dz * b * t * p;
    const cplx tv1 = cut1 + m2i * (ch * db_dz * t * p + ch * b * I * p + ch * b * t * dp);

    out.v = std::norm(v1) + std::norm(v2);
    out.tv = std::norm(tv1) + std::norm(tv2);
    out.cut = std::norm(cut1) + std::norm(tv2);
    return out;
}

Integrals integrate(const WeylConfig& cfg, int nodes) {
    if (cfg.n < 1) throw std::invalid_argument("weyl: n must be at least 1");
    if (!(cfg.pole > 0.0) || !(cfg.radius > 0.0) || cfg.radius > 1.0)
        throw std::invalid_argument("weyl: need pole > 0 and 0 < radius <= 1");
    const double c = cfg.scale > 0.0 ? cfg.scale : 2.0 * cfg.pole;
    const Cutoff chi;
    const double first = std::max(cfg.finest_fraction * cfg.pole, 1e-300);

    const QuadratureRule qx = composite_gauss(graded_breaks(std::min(first, 0.5 * cfg.radius), cfg.radius), nodes);
    const double psi_max = std::asin(std::min(cfg.radius, 1.0));
    const std::vector<double> half = graded_breaks(std::min(first, 0.5 * psi_max), psi_max);
    std::vector<double> psi_breaks;
    for (auto it = half.rbegin(); it != half.rend(); ++it) psi_breaks.push_back(-*it);
    for (std::size_t i = 1; i < half.size(); ++i) psi_breaks.push_back(half[i]);
    const QuadratureRule qp = composite_gauss(psi_breaks, nodes);

    Integrals acc;
    const int nx = static_cast<int>(qx.nodes.size());
    std::vector<Integrals> rows(static_cast<std::size_t>(nx));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nx; ++i) {
        const double xp = qx.nodes[static_cast<std::size_t>(i)];
        const double rho = 1.0 - xp;
        Integrals row;
        for (std::size_t j = 0; j < qp.nodes.size(); ++j) {
            const double psi = qp.nodes[j];
            const cplx z = -1.0 + std::polar(rho, psi);
            const Pointwise f = integrand(z, psi, cfg, c, chi);
            const double w = qx.weights[static_cast<std::size_t>(i)] * qp.weights[j] * rho;
            row.v += w * f.v;
            row.tv += w * f.tv;
            row.cut += w * f.cut;
        }
        rows[static_cast<std::size_t>(i)] = row;
    }
    for (const auto& r : rows) {
        acc.v += r.v;
        acc.tv += r.tv;
        acc.cut += r.cut;
    }

    // Mass outside B(0, delta), in polar coordinates about 0 where the domain
    // is cos(phi) < -r/2.
    if (cfg.delta < cfg.radius) {
        std::vector<double> rb{cfg.delta};
        for (double r = 2.0 * cfg.delta; r < cfg.radius; r *= 2.0) rb.push_back(r);
        rb.push_back(cfg.radius);
        const QuadratureRule qr = composite_gauss(rb, nodes);
        std::vector<double> ub;
        for (int k = 0; k <= 8; ++k) ub.push_back(-1.0 + k * 0.25);
        const QuadratureRule qu = composite_gauss(ub, nodes);
        for (std::size_t i = 0; i < qr.nodes.size(); ++i) {
            const double r = qr.nodes[i];
            const double phi0 = std::acos(-0.5 * r);
            const double half_span = kPi - phi0;
            for (std::size_t j = 0; j < qu.nodes.size(); ++j) {
                const double phi = kPi + half_span * qu.nodes[j];
                const cplx z = std::polar(r, phi);
                const double psi = std::arg(z + 1.0);
                const Pointwise f = integrand(z, psi, cfg, c, chi);
                acc.outside += qr.weights[i] * qu.weights[j] * half_span * r * f.v;
            }
        }
    }
    return acc;
}

}  // namespace

double Cutoff::operator()(double x) const { return 1.0 - kStep(2.0 * (x - 0.5)); }

double Cutoff::derivative(double x) const { return -2.0 * kStep.derivative(2.0 * (x - 0.5)); }

double Cutoff::max_abs_derivative(std::size_t samples) const {
    double m = 0.0;
    for (std::size_t i = 0; i <= samples; ++i) {
        const double x = 0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(samples);
        m = std::max(m, std::abs(derivative(x)));
    }
    return m;
}

WeylDomain weyl_domain(std::uint64_t seed, std::size_t cone_samples, double cone_radius) {
    WeylDomain d;
    d.spec = BoundarySpec::tangent_disc(EtaProfile::weyl());
    d.tangent_at_zero = frame_at(d.spec, 0.0).tangent;

    constexpr int kSamples = 20000;
    for (int i = 1; i <= kSamples; ++i) {
        const double psi = static_cast<double>(i) / kSamples;
        for (double p : {psi, -psi}) {
            d.b_over_psi_sq_max = std::max(d.b_over_psi_sq_max, std::abs(b_of(d.spec, p)) / (p * p));
            d.db_over_psi_max = std::max(d.db_over_psi_max, std::abs(weyl_db(p)) / std::abs(p));
        }
    }
    d.b_over_psi_sq_limit = b_of(d.spec, 1e-4) / 1e-8;

    // |B~(z)| / |z|^2 over the domain inside |z| <= 0.8
    for (int i = 1; i <= 400; ++i) {
        const double r = 0.8 * i / 400.0;
        const double phi0 = std::acos(-0.5 * r);
        for (int j = 1; j < 400; ++j) {
            const double phi = phi0 + (kTwoPi - 2.0 * phi0) * j / 400.0;
            const cplx z = std::polar(r, phi);
            d.extension_constant = std::max(d.extension_constant, weyl_b(std::arg(z + 1.0)) / (r * r));
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.0, cone_radius);
    std::uniform_real_distribution<double> uphi(-0.25 * kPi, 0.25 * kPi);
    d.cone_ok = true;
    for (std::size_t i = 0; i < cone_samples; ++i) {
        const double r = cone_radius - ur(rng);  // (0, cone_radius]
        const double phi = uphi(rng);
        const double dist_sq = 1.0 + 2.0 * r * std::cos(phi) + r * r;  // |z + 1|^2
        if (dist_sq <= 1.0) d.cone_ok = false;
    }
    d.cone_samples = cone_samples;
    return d;
}

double weyl_quotient(const WeylConfig& config) {
    const Integrals a = integrate(config, config.nodes_per_panel);
    return std::sqrt(a.tv / a.v);
}

WeylReport build_and_measure(const WeylConfig& config) {
    const Integrals a = integrate(config, config.nodes_per_panel);
    const Integrals b = integrate(config, 2 * config.nodes_per_panel);
    const double c = config.scale > 0.0 ? config.scale : 2.0 * config.pole;

    WeylReport r;
    r.n = config.n;
    r.radius = config.radius;
    r.pole = config.pole;
    r.delta = config.delta;
    r.quotient = std::sqrt(a.tv / a.v);
    r.quotient_fine = std::sqrt(b.tv / b.v);
    r.level_disagreement = std::abs(r.quotient_fine - r.quotient) / r.quotient_fine;
    r.log_norm_v = 0.5 * std::log(b.v) - config.n * std::log(c);
    r.log_norm_tv = 0.5 * std::log(b.tv) - config.n * std::log(c);
    r.cutoff_term = std::sqrt(b.cut / b.v);
    r.mass_outside = b.outside / b.v;
    r.meets_bound = r.quotient <= 1.0 / config.n && r.quotient_fine <= 1.0 / config.n;
    if (!(r.level_disagreement <= config.convergence_tol)) {
        std::ostringstream os;
        os << "weyl quadrature not converged for n = " << config.n << ", s = " << config.pole << ": quotient "
           << r.quotient << " vs " << r.quotient_fine << " on the doubled grid (" << 100.0 * r.level_disagreement
           << "% > " << 100.0 * config.convergence_tol << "%)";
        throw ConvergenceError(os.str());
    }
    return r;
}

double rule_radius(int n, double extension_constant, double tangent_constant) {
    return 1.0 / (2.0 * n * extension_constant * tangent_constant * (2.0 + std::sqrt(2.0) * n));
}

std::vector<WeylReport> certify_sequence(int n_max, const CertifyOptions& opt) {
    if (n_max < 1 || n_max > 6) throw std::invalid_argument("certify_sequence: n_max must lie in [1, 6]");
    const WeylDomain dom = weyl_domain(1, 1000);
    std::vector<WeylReport> out;
    for (int n = 1; n <= n_max; ++n) {
        const double rule = rule_radius(n, dom.extension_constant);
        std::vector<double> radii{std::min(rule, opt.max_radius)};
        if (radii.front() < opt.max_radius) radii.push_back(opt.max_radius);

        WeylReport report;
        report.n = n;
        bool done = false;
        std::vector<std::pair<double, double>> ladder;
        for (double radius : radii) {
            for (int j = opt.ladder_first; j <= opt.ladder_last && !done; ++j) {
                WeylConfig cfg;
                cfg.n = n;
                cfg.radius = radius;
                cfg.pole = radius * std::ldexp(1.0, -j);
                cfg.nodes_per_panel = opt.nodes_per_panel;
                cfg.delta = opt.delta;
                const double q = weyl_quotient(cfg);
                ladder.emplace_back(cfg.pole, q);
                if (q <= 1.0 / n) {
                    report = build_and_measure(cfg);
                    done = true;
                }
            }
            if (done) break;
        }
        if (!done) {
            report.quotient = ladder.empty() ? 0.0 : ladder.back().second;
            report.radius = radii.back();
            report.pole = ladder.empty() ? 0.0 : ladder.back().first;
        }
        report.rule_radius = rule;
        report.ladder = std::move(ladder);
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace diracspec
