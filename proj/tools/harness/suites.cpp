#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "diracspec/cauchy_calderon.hpp"
#include "diracspec/circle_analysis.hpp"
#include "diracspec/conformal_transport.hpp"
#include "diracspec/disc_solver.hpp"
#include "diracspec/quadrature.hpp"
#include "diracspec/spinor_algebra.hpp"
#include "diracspec/spinor_field.hpp"

namespace diracspec::harness {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string param(const std::string& key, double v) { return key + "=" + format_number(v); }

FourierVector random_vector(std::mt19937_64& rng, int bandwidth, double decay) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FourierVector f(bandwidth);
    for (int n = -bandwidth; n <= bandwidth; ++n) {
        const double re = u(rng);
        const double im = u(rng);
        f.at(n) = cplx{re, im} / std::pow(1.0 + std::abs(n), decay);
    }
    return f;
}

// Fourth-order centred differences in x and y at step h.
cplx diff_x(const std::function<cplx(cplx)>& f, cplx z, double h) {
    return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

cplx diff_y(const std::function<cplx(cplx)>& f, cplx z, double h) {
    const cplx ih = I * h;
    return (-f(z + 2.0 * ih) + 8.0 * f(z + ih) - 8.0 * f(z - ih) + f(z - 2.0 * ih)) / (12.0 * h);
}

cplx random_disc_point(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    return std::polar(r, kTwoPi * u(rng));
}

double max_abs_matrix(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<CheckRow> pauli_suite(std::uint64_t seed, int frames) {
    const std::string p = "frames=" + std::to_string(frames);
    const Mat2 id = Mat2::Identity();
    std::vector<CheckRow> rows;

    double anti = 0.0;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            anti = std::max(anti, max_abs(anticommutator(pauli(j), pauli(k)) - (j == k ? 2.0 : 0.0) * id));
    double comm = max_abs(commutator(pauli(1), pauli(2)) - 2.0 * I * pauli(3));
    comm = std::max(comm, max_abs(commutator(pauli(2), pauli(3)) - 2.0 * I * pauli(1)));
    comm = std::max(comm, max_abs(commutator(pauli(3), pauli(1)) - 2.0 * I * pauli(2)));
    rows.push_back(upper("pauli_anticommutation", "j,k=1..3", anti, 1e-14));
    rows.push_back(upper("pauli_commutation", "cyclic", comm, 1e-14));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> eta_dist(-kPi, kPi);
    double herm = 0.0, square = 0.0, spectrum = 0.0, idem = 0.0, ortho = 0.0, sum = 0.0, trace = 0.0;
    double anti_n = 0.0, intertwine = 0.0, n_square = 0.0;
    for (int i = 0; i < frames; ++i) {
        const BoundaryFrame f = frame_from_angle(angle(rng), eta_dist(rng));
        const Mat2 a = a_eta(f);
        const Mat2 pp = proj_pm(f, 1);
        const Mat2 pm = proj_pm(f, -1);
        const Mat2 sn = sigma_dot_n(f);
        herm = std::max(herm, max_abs(a - a.adjoint()));
        square = std::max(square, max_abs(a * a - id));
        // closed-form eigenvalues of a hermitian 2x2 matrix
        const double half_tr = 0.5 * std::real(a(0, 0) + a(1, 1));
        const double det = std::real(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
        const double disc = std::sqrt(std::max(0.0, half_tr * half_tr - det));
        spectrum = std::max({spectrum, std::abs(half_tr + disc - 1.0), std::abs(half_tr - disc + 1.0)});
        idem = std::max({idem, max_abs(pp * pp - pp), max_abs(pm * pm - pm)});
        ortho = std::max(ortho, max_abs(pp * pm));
        sum = std::max(sum, max_abs(pp + pm - id));
        trace = std::max({trace, std::abs(pp.trace() - 1.0), std::abs(pm.trace() - 1.0)});
        anti_n = std::max(anti_n, max_abs(anticommutator(a, sn)));
        intertwine = std::max(intertwine, max_abs(pp * sn - sn * pm));
        n_square = std::max(n_square, max_abs(sn * sn - id));
    }
    rows.push_back(upper("a_eta_hermitian", p, herm, 1e-14));
    rows.push_back(upper("a_eta_squares_to_identity", p, square, 1e-14));
    rows.push_back(upper("a_eta_eigenvalues_pm1", p, spectrum, 1e-14));
    rows.push_back(upper("projector_idempotent", p, idem, 1e-14));
    rows.push_back(upper("projector_orthogonal", p, ortho, 1e-14));
    rows.push_back(upper("projector_complementary", p, sum, 1e-14));
    rows.push_back(upper("projector_unit_trace", p, trace, 1e-14));
    rows.push_back(upper("a_eta_anticommutes_sigma_n", p, anti_n, 1e-14));
    rows.push_back(upper("projector_intertwines_sigma_n", p, intertwine, 1e-14));
    rows.push_back(upper("sigma_n_squares_to_identity", p, n_square, 1e-14));
    return rows;
}

std::vector<CheckRow> cauchy_kernel_suite(std::uint64_t seed, int bandwidth, int cases) {
    const int n_max = bandwidth;
    const std::string pn = "N=" + std::to_string(n_max);
    std::vector<CheckRow> rows;

    double k_def = 0.0;
    double kb_def = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const FourierVector e = FourierVector::basis(n, n_max);
        const HolomorphicDiscFunction hk = apply_K(e);
        const HolomorphicDiscFunction hb = apply_Kbar(e);
        if (hk.antiholomorphic) k_def = kInf;
        if (!hb.antiholomorphic) kb_def = kInf;
        for (std::size_t j = 0; j < hk.taylor.size(); ++j) {
            const cplx want = (n >= 0 && static_cast<int>(j) == n) ? cplx{kInvSqrtTwoPi} : cplx{};
            k_def = std::max(k_def, std::abs(hk.taylor[j] - want));
        }
        if (n >= 0 && hk.taylor.size() <= static_cast<std::size_t>(n)) k_def = kInf;
        for (std::size_t j = 0; j < hb.taylor.size(); ++j) {
            const cplx want = (n <= 0 && static_cast<int>(j) == -n) ? cplx{kInvSqrtTwoPi} : cplx{};
            kb_def = std::max(kb_def, std::abs(hb.taylor[j] - want));
        }
        if (n <= 0 && hb.taylor.size() <= static_cast<std::size_t>(-n)) kb_def = kInf;
    }
    rows.push_back(upper("cauchy_K_monomials", pn, k_def, 0.0));
    rows.push_back(upper("cauchy_Kbar_monomials", pn, kb_def, 0.0));

    std::mt19937_64 rng(seed);
    const int trials = std::min(cases, 100);
    const std::string pc = pn + ";cases=" + std::to_string(trials);
    double idem = 0.0, comp = 0.0, norm_def = 0.0;
    const DiscQuadrature q = disc_quadrature(n_max + 2, 2 * n_max + 2);
    for (int c = 0; c < trials; ++c) {
        const FourierVector f = random_vector(rng, n_max, 0.0);
        const FourierVector pk = trace_K(f);
        idem = std::max(idem, max_abs_diff(trace_K(pk), pk));
        const FourierVector lhs = pk + trace_Kbar(f);
        const FourierVector rhs = f + f[0] * FourierVector::basis(0, n_max);
        comp = std::max(comp, max_abs_diff(lhs, rhs));

        // L^2(D) norm of Kf by exact-degree quadrature against the diagonal formula
        const HolomorphicDiscFunction kf = apply_K(f);
        double quad = 0.0;
        for (std::size_t i = 0; i < q.points.size(); ++i) quad += q.weights[i] * std::norm(kf.value(q.points[i]));
        double closed = 0.0;
        for (int n = 0; n <= n_max; ++n) closed += std::norm(f[n]) / (2.0 * n + 2.0);
        norm_def = std::max(norm_def, std::abs(quad - closed) / closed);
    }
    rows.push_back(upper("hardy_projection_idempotent", pc, idem, 0.0));
    rows.push_back(upper("hardy_projections_complementary", pc, comp, 0.0));
    rows.push_back(upper("cauchy_extension_l2_norm", pc, norm_def, 1e-12));

    // interior annihilation by centred differences
    double annihil = 0.0;
    const int fd_functions = 20;
    const int fd_points = 50;
    for (int c = 0; c < fd_functions; ++c) {
        const FourierVector f = random_vector(rng, 32, 1.0);
        const HolomorphicDiscFunction kf = apply_K(f);
        const HolomorphicDiscFunction kbf = apply_Kbar(f);
        const std::function<cplx(cplx)> fk = [&](cplx z) { return kf.value(z); };
        const std::function<cplx(cplx)> fkb = [&](cplx z) { return kbf.value(z); };
        for (int i = 0; i < fd_points; ++i) {
            const cplx z = random_disc_point(rng, 0.9);
            const cplx dzbar_k = 0.5 * (diff_x(fk, z, 1e-4) + I * diff_y(fk, z, 1e-4));
            const cplx dz_kb = 0.5 * (diff_x(fkb, z, 1e-4) - I * diff_y(fkb, z, 1e-4));
            annihil = std::max({annihil, std::abs(dzbar_k), std::abs(dz_kb)});
        }
    }
    rows.push_back(upper("cauchy_interior_annihilation", "functions=20;points=50;h=1e-4", annihil, 1e-8));
    return rows;
}

std::vector<CheckRow> cauchy_suite(std::uint64_t seed, int bandwidth, int cases) {
    const int n_max = bandwidth;
    const std::string pn = "N=" + std::to_string(n_max);
    std::vector<CheckRow> rows = cauchy_kernel_suite(seed, bandwidth, cases);
    std::mt19937_64 rng(seed + 1);
    const int trials = std::min(cases, 100);

    // projector onto traces of solutions of Tu = 0
    const BoundarySpec circle = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    const int nq = std::min(n_max, 32);
    const double route = max_abs_matrix(calderon_matrix_shift(nq) - calderon_matrix_quadrature(nq, circle));
    rows.push_back(upper("calderon_shift_vs_quadrature", "N=" + std::to_string(nq), route, 1e-12));
    const Eigen::MatrixXcd cm = calderon_matrix_shift(n_max);
    rows.push_back(upper("calderon_matrix_idempotent", pn, max_abs_matrix(cm * cm - cm), 1e-10));
    double cal_idem = 0.0, cal_fixed = 0.0;
    for (int c = 0; c < std::min(trials, 20); ++c) {
        const SpinorTrace t(random_vector(rng, n_max, 0.0), random_vector(rng, n_max, 0.0));
        const SpinorTrace once = calderon(t, circle);
        const SpinorTrace twice = calderon(once, circle);
        cal_idem = std::max({cal_idem, max_abs_diff(twice.first, once.first), max_abs_diff(twice.second, once.second)});
        const SpinorTrace range(trace_K(t.first), trace_Kbar(t.second));
        const SpinorTrace image = calderon(range, circle);
        cal_fixed = std::max(
            {cal_fixed, max_abs_diff(image.first, range.first), max_abs_diff(image.second, range.second)});
    }
    rows.push_back(upper("calderon_idempotent", pn + ";cases=20", cal_idem, 1e-10));
    rows.push_back(upper("calderon_fixes_solution_traces", pn + ";cases=20", cal_fixed, 1e-10));

    rows.push_back(upper("extension_norm_K", pn, std::abs(cauchy_extension_norm(n_max, ExtensionPart::K) - std::sqrt(0.5)),
                         1e-12));
    rows.push_back(upper("extension_norm_bound", pn, cauchy_extension_norm(n_max, ExtensionPart::both), 1.0));
    return rows;
}

std::vector<CheckRow> commutator_suite(std::uint64_t seed, int bandwidth, int cases) {
    const std::string pn = "N=" + std::to_string(bandwidth);
    const std::string pc = pn + ";cases=" + std::to_string(cases);
    std::vector<CheckRow> rows;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> beta_band(1, 16);

    const FourierVector f0 = random_vector(rng, bandwidth, 0.0);
    const FourierVector constant = cplx{0.7, -0.2} * kSqrtTwoPi * FourierVector::basis(0, 0);
    const FourierVector zero_out = commutator_apply(constant, f0);
    rows.push_back(upper("commutator_constant_multiplier", pn, max_abs_diff(zero_out, FourierVector(0)), 0.0));

    // beta = e_1, f = e_{-1}: the n >= 0 branch leaves -(2 pi)^{-1/2} at n = 0
    const FourierVector e1 = FourierVector::basis(1, 1);
    const FourierVector em1 = FourierVector::basis(-1, 1);
    const FourierVector pair = commutator_apply(e1, em1);
    FourierVector expected(0);
    expected.at(0) = -kInvSqrtTwoPi;
    rows.push_back(upper("commutator_basis_pair", "beta=e_1;f=e_-1", max_abs_diff(pair, expected), 1e-15));
    rows.push_back(upper("smoothing_ratio_basis_pair", "beta=e_1;f=e_-1;s=0",
                         std::abs(smoothing_ratio(e1, em1, 0.0) - 0.5 * kInvSqrtTwoPi), 1e-15));

    double dual = 0.0, reassembly = 0.0;
    double ratio_half = 0.0, ratio_zero = 0.0;
    for (int c = 0; c < cases; ++c) {
        const FourierVector beta = random_vector(rng, beta_band(rng), 2.0);
        const FourierVector f = random_vector(rng, bandwidth, 0.0);
        dual = std::max(dual, max_abs_diff(commutator_apply(beta, f), commutator_compose(beta, f)));
        const BootstrapSplit split = bootstrap_split(beta, f);
        reassembly = std::max(reassembly,
                              max_abs_diff(split.smooth_part - split.commutator_part, trace_K(multiply(beta, f))));
        ratio_half = std::max(ratio_half, smoothing_ratio(beta, f, -0.5));
        ratio_zero = std::max(ratio_zero, smoothing_ratio(beta, f, 0.0));
    }
    rows.push_back(upper("commutator_dual_route", pc, dual, 1e-12));
    rows.push_back(upper("smoothing_ratio_max", pc + ";s=-0.5", ratio_half, 1.0 + 1e-10));
    rows.push_back(upper("smoothing_ratio_max", pc + ";s=0", ratio_zero, 1.0 + 1e-10));
    rows.push_back(upper("bootstrap_reassembly", pc, reassembly, 1e-12));

    // f with only negative frequencies: gamma K f = 0, all of gamma K (beta f) is commutator
    FourierVector neg = random_vector(rng, bandwidth, 0.0);
    for (int n = 0; n <= bandwidth; ++n) neg.at(n) = 0.0;
    const FourierVector beta = random_vector(rng, 8, 2.0);
    const BootstrapSplit split = bootstrap_split(beta, neg);
    rows.push_back(upper("bootstrap_negative_frequencies", pn, max_abs_diff(split.smooth_part, FourierVector(0)), 0.0));
    return rows;
}

ConformalOutcome conformal_suite(const RunConfig& config, const std::vector<int>& bandwidths) {
    if (bandwidths.size() < 2) throw ConfigError("conformal suite needs at least two bandwidths");
    ConformalOutcome out;
    auto& rows = out.checks;
    const ConformalMap map = make_map(config.domain);
    const std::string pm = map.tag();
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    double inv = 0.0;
    for (int i = 0; i < 100; ++i) {
        const cplx w = i < 50 ? random_disc_point(rng, 1.0) : std::polar(1.0, angle(rng));
        inv = std::max(inv, std::abs(map.inverse(map(w)) - w));
    }
    rows.push_back(upper("inverse_composition", pm + ";samples=100", inv, 1e-10));
    rows.push_back(lower("min_abs_derivative", pm, map.min_abs_derivative(64), 1e-6));
    rows.push_back(lower("boundary_injectivity_margin", pm + ";pairs=10011", map.injectivity_margin(142), 1e-6));

    // chain rule against centred differences of the pulled-back functions
    const std::function<cplx(cplx)> v2 = [](cplx z) { return std::exp(0.5 * z) + z * z * z; };
    const std::function<cplx(cplx)> dz_v2 = [](cplx z) { return 0.5 * std::exp(0.5 * z) + 3.0 * z * z; };
    const std::function<cplx(cplx)> v1 = [](cplx z) { return std::conj(z * z + std::sin(z)); };
    const std::function<cplx(cplx)> dzbar_v1 = [](cplx z) { return std::conj(2.0 * z + std::cos(z)); };
    const std::function<cplx(cplx)> u2 = transplant(v2, map);
    const std::function<cplx(cplx)> u1 = transplant(v1, map);
    double chain_dz = 0.0, chain_dzbar = 0.0;
    for (int i = 0; i < 100; ++i) {
        const cplx w = random_disc_point(rng, 0.9);
        // holomorphic: d_z = d/dx; antiholomorphic: d_zbar = d/dx
        chain_dz = std::max(chain_dz, std::abs(diff_x(u2, w, 1e-3) - pullback_dz(dz_v2, map, w)));
        chain_dzbar = std::max(chain_dzbar, std::abs(diff_x(u1, w, 1e-3) - pullback_dzbar(dzbar_v1, map, w)));
    }
    rows.push_back(upper("chain_rule_dz", pm + ";samples=100", chain_dz, 1e-10));
    rows.push_back(upper("chain_rule_dzbar", pm + ";samples=100", chain_dzbar, 1e-10));

    // the identity map transplants every Fourier mode to itself
    const NormMatrix ident = u_norm_matrix(ConformalMap::identity(), 0.0, 32);
    Eigen::MatrixXcd embed = Eigen::MatrixXcd::Zero(ident.matrix.rows(), ident.matrix.cols());
    const Eigen::Index offset = (ident.matrix.rows() - ident.matrix.cols()) / 2;
    embed.block(offset, 0, ident.matrix.cols(), ident.matrix.cols()).setIdentity();
    rows.push_back(upper("identity_map_transplant", "N=32", max_abs_matrix(ident.matrix - embed), 1e-12));

    const std::vector<double> orders{-1.0, 0.0, 1.0};
    std::vector<std::vector<double>> cond_u(orders.size()), cond_adj(orders.size());
    for (std::size_t si = 0; si < orders.size(); ++si) {
        for (int bw : bandwidths) {
            for (bool adjoint : {false, true}) {
                const NormMatrix nm = adjoint ? u_adjoint_norm_matrix(map, orders[si], bw)
                                              : u_norm_matrix(map, orders[si], bw);
                const ConditionReport& r = nm.report;
                out.conditions.push_back(
                    {orders[si], bw, adjoint, r.rows, r.sigma_max, r.sigma_min, r.condition});
                (adjoint ? cond_adj : cond_u)[si].push_back(r.condition);
            }
        }
    }
    const std::string pb = pm + ";N=" + std::to_string(bandwidths[bandwidths.size() - 2]) + "->" +
                           std::to_string(bandwidths.back());
    for (std::size_t si = 0; si < orders.size(); ++si) {
        const auto& c = cond_u[si];
        rows.push_back(upper("u_condition_stability", pb + ";s=" + format_number(orders[si]),
                             std::abs(c.back() / c[c.size() - 2] - 1.0), 0.1));
    }
    const std::string pd = pm + ";N=" + std::to_string(bandwidths.back());
    rows.push_back(upper("u_duality", pd + ";U(s=-1)~U*(s=1)", std::abs(cond_u[0].back() / cond_adj[2].back() - 1.0),
                         0.1));
    rows.push_back(upper("u_duality", pd + ";U(s=1)~U*(s=-1)", std::abs(cond_u[2].back() / cond_adj[0].back() - 1.0),
                         0.1));

    const BoundarySpec spec = make_spec(config);
    const TransportedBoundary tb = transport_beta(spec, map, bandwidths.back(), config.numerics.eps_eta);
    rows.push_back(lower("beta_nowhere_vanishing", pd, tb.min_abs, 0.5 * config.numerics.eps_eta));
    const bool eta_zero = config.eta.profile == EtaConfig::Profile::constant && config.eta.value == 0.0;
    if (eta_zero)
        rows.push_back(upper("beta_unimodular", pd + ";eta=0",
                             std::max(std::abs(tb.max_abs - 1.0), std::abs(1.0 - tb.min_abs)), 1e-10));
    for (double th : uniform_angles(256)) out.beta_modulus.emplace_back(th, std::abs(evaluate(tb.beta_circle, th)));

    // inversion about z_j = 0 for the annulus 1 <= |z| <= 2
    std::vector<cplx> inner_loop, outer_loop;
    for (double th : uniform_angles(256)) {
        inner_loop.push_back(std::polar(1.0, th));
        outer_loop.push_back(std::polar(2.0, th));
    }
    const InversionResult inv_res = inversion_map(0.0, {inner_loop, outer_loop}, 0, 1.0 - 1e-12);
    rows.push_back(upper("inversion_derivative_bound", "z_j=0;annulus=[1,2]", std::abs(inv_res.sup_derivative - 1.0),
                         1e-12));
    rows.push_back(lower("inversion_exterior_component", "z_j=0;annulus=[1,2]", inv_res.exterior_ok ? 1.0 : 0.0, 1.0));
    double invol = 0.0;
    for (int i = 0; i < 100; ++i) {
        const cplx z = std::polar(1.0 + std::uniform_real_distribution<double>(0.0, 1.0)(rng), angle(rng));
        invol = std::max(invol, std::abs(1.0 / (1.0 / z) - z));
    }
    rows.push_back(upper("inversion_involution", "z_j=0;samples=100", invol, 1e-14));
    return out;
}

std::vector<CheckRow> symmetry_suite(const RunConfig& config) {
    const BoundarySpec spec = make_spec(config);
    if (spec.kind() != CurveKind::unit_circle)
        throw ConfigError("the symmetry suite needs domain.family = unit_circle");
    std::vector<CheckRow> rows;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    const PolynomialSpinor one = PolynomialSpinor::constant(1.0, 0.0);
    rows.push_back(upper("ibp_constant_spinor", "u=v=(1,0)", symmetry_defect(one, one, spec, 8, 32).full, 1e-12));

    auto random_poly = [&]() {
        PolynomialSpinor::Coeffs c[2];
        for (auto& comp : c) {
            comp.assign(7, std::vector<cplx>(7, cplx{}));
            for (int j = 0; j <= 6; ++j)
                for (int k = 0; j + k <= 6; ++k) comp[j][k] = cplx{u(rng), u(rng)};
        }
        return PolynomialSpinor(c[0], c[1]);
    };
    const int poly_cases = std::min(config.numerics.random_cases, 20);
    double ibp = 0.0;
    for (int i = 0; i < poly_cases; ++i) {
        const PolynomialSpinor a = random_poly();
        const PolynomialSpinor b = random_poly();
        ibp = std::max(ibp, symmetry_defect(a, b, spec, 8, 32).full);
    }
    rows.push_back(upper("ibp_polynomial_spinors", "degree<=6;cases=" + std::to_string(poly_cases), ibp, 1e-10));

    ScanOptions opt;
    opt.k_min = config.numerics.k_min;
    opt.k_max = std::min(config.numerics.k_max, 6.0);
    opt.grid_step = config.numerics.grid_step;
    opt.bandwidth = config.numerics.bandwidth;
    opt.singular_threshold = config.numerics.singular_threshold;
    opt.golden_width = config.numerics.golden_width;
    opt.eps_eta = config.numerics.eps_eta;
    opt.record_trace = false;
    std::vector<Eigenpair> pairs;
    int bandwidth = 0;
    for (int sgn : config.numerics.signs) {
        SpectralResult r = scan_spectrum(spec, sgn, opt);
        bandwidth = r.bandwidth;
        for (auto& p : r.pairs) pairs.push_back(std::move(p));
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Eigenpair& a, const Eigenpair& b) {
        return std::abs(a.energy) < std::abs(b.energy) || (std::abs(a.energy) == std::abs(b.energy) && a.energy < b.energy);
    });
    if (pairs.size() > 8) pairs.resize(8);
    const std::string pe = "k<=" + format_number(opt.k_max) + ";pairs=" + std::to_string(pairs.size());

    double pure = 0.0, ortho = 0.0;
    const DiscQuadrature q = disc_quadrature(2 * bandwidth, 4 * bandwidth);
    std::vector<SampledField> samples;
    for (const auto& p : pairs) samples.push_back(sample_field(p.field, q));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i; j < pairs.size(); ++j) {
            pure = std::max(pure, symmetry_defect(pairs[i].field, pairs[j].field, spec, 2 * bandwidth, 4 * bandwidth).pure);
            if (pairs[i].energy != pairs[j].energy)
                ortho = std::max(ortho, std::abs(inner(samples[i], samples[j], q)));
        }
    }
    if (pairs.empty()) pure = ortho = kInf;
    rows.push_back(upper("pure_symmetry_eigenpairs", pe, pure, 1e-8));
    rows.push_back(upper("eigenfunction_orthogonality", pe, ortho, 1e-8));
    return rows;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pauli", "cauchy", "commutator", "conformal", "symmetry"};
    return names;
}

std::vector<CheckRow> run_suite(const std::string& name, const RunConfig& config) {
    const int bw = config.numerics.bandwidth > 0 ? config.numerics.bandwidth : config.numerics.verify_bandwidth;
    if (name == "pauli") return pauli_suite(config.seed);
    if (name == "cauchy") return cauchy_suite(config.seed, bw, config.numerics.random_cases);
    if (name == "commutator") return commutator_suite(config.seed, bw, config.numerics.random_cases);
    if (name == "conformal") {
        const std::vector<int> bws = config.numerics.bandwidth > 0 ? std::vector<int>{std::max(bw / 2, 4), bw}
                                                                   : std::vector<int>{32, 64, 128};
        return conformal_suite(config, bws).checks;
    }
    if (name == "symmetry") return symmetry_suite(config);
    std::ostringstream os;
    os << "unknown suite '" << name << "' (expected one of";
    for (const auto& s : suite_names()) os << ' ' << s;
    os << ')';
    throw ConfigError(os.str());
}

}  // namespace diracspec::harness
