#include "diracspec/disc_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "diracspec/bessel.hpp"
#include "diracspec/errors.hpp"

namespace diracspec {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kColumnFloor = 1e-280;
constexpr double kDedupTol = 1e-9;

void check_sign(int sgn) {
    if (sgn != 1 && sgn != -1) throw std::invalid_argument("sign must be +1 or -1");
}

void require_circle(const BoundarySpec& spec, const char* who) {
    if (spec.kind() != CurveKind::unit_circle)
        throw std::invalid_argument(std::string(who) + ": the Fourier-Bessel solver needs the unit disc");
}

// Smallest singular value by inverse iteration on M^* M through one LU.
double smallest_singular_value(const Eigen::MatrixXcd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    Eigen::VectorXcd x = Eigen::VectorXcd::Ones(m.cols()).normalized();
    double lambda = 0.0;
    for (int it = 0; it < 60; ++it) {
        const Eigen::VectorXcd y = lu.solve(x);
        const Eigen::VectorXcd z = lu.adjoint().solve(y);
        const double nz = z.norm();
        if (!std::isfinite(nz)) return 0.0;
        const double prev = lambda;
        lambda = nz;
        x = z / nz;
        if (it > 2 && std::abs(lambda - prev) <= 1e-13 * lambda) break;
    }
    return lambda > 0.0 ? 1.0 / std::sqrt(lambda) : 0.0;
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

// Newton steps mu_j / mu_j' along every eigenvalue branch of M(k).
std::vector<cplx> branch_steps(const BoundarySystem& sys) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(sys.matrix);
    if (es.info() != Eigen::Success) return {};
    const Eigen::MatrixXcd& x = es.eigenvectors();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(x);
    const Eigen::MatrixXcd y = lu.solve(sys.derivative * x);
    std::vector<cplx> steps(static_cast<std::size_t>(x.cols()));
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const cplx d = y(j, j);
        steps[static_cast<std::size_t>(j)] = d == cplx{} ? cplx{1e300, 0.0} : es.eigenvalues()(j) / d;
    }
    return steps;
}

struct Polished {
    double k = 0.0;
    bool ok = false;
};

// Newton step mu / mu' for the eigenvalue of M(k) nearest zero, by inverse
// iteration with right and left vectors; mu' = y^* M' x / y^* x.
std::optional<cplx> nearest_branch_step(const BoundarySystem& sys) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.matrix);
    const Eigen::Index n = sys.matrix.cols();
    Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n).normalized();
    Eigen::VectorXcd y = x;
    cplx mu{};
    for (int it = 0; it < 40; ++it) {
        Eigen::VectorXcd xn = lu.solve(x);
        Eigen::VectorXcd yn = lu.adjoint().solve(y);
        const double nx = xn.norm();
        const double ny = yn.norm();
        if (!std::isfinite(nx) || !std::isfinite(ny) || nx == 0.0) return std::nullopt;
        xn /= nx;
        yn /= ny;
        const cplx mu_next = xn.dot(sys.matrix * xn);
        x = std::move(xn);
        y = std::move(yn);
        const bool settled = it > 1 && std::abs(mu_next - mu) <= 1e-10 * std::abs(mu_next);
        mu = mu_next;
        if (settled) {
            const cplx yx = y.dot(x);
            if (std::abs(yx) < 1e-8) return std::nullopt;
            const cplx mu_exact = y.dot(sys.matrix * x) / yx;
            const cplx d = y.dot(sys.derivative * x) / yx;
            if (d == cplx{}) return std::nullopt;
            return mu_exact / d;
        }
    }
    return std::nullopt;
}

Polished newton_refine(double k0, int sgn, const FourierVector& bhat, int bandwidth, double window) {
    double k = k0;
    double prev_step = 0.0;
    for (int it = 0; it < 60; ++it) {
        const BoundarySystem sys = boundary_system(k, sgn, bhat, bandwidth);
        cplx step;
        if (const auto fast = nearest_branch_step(sys)) {
            step = *fast;
        } else {
            const auto steps = branch_steps(sys);
            if (steps.empty()) return {};
            step = *std::min_element(steps.begin(), steps.end(),
                                     [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
        }
        const double dk = std::real(step);
        k -= dk;
        if (!(std::abs(k - k0) <= window) || k <= 0.0) return {};
        const double scale = std::max(1.0, k);
        if (std::abs(dk) <= 1e-14 * scale) break;
        // a simple root contracts quadratically; linear drift means a power-law
        // branch sliding towards k = 0
        if (it >= 2 && std::abs(dk) > 0.5 * prev_step) {
            if (std::abs(dk) <= 1e-9 * scale) break;
            return {};
        }
        prev_step = std::abs(dk);
    }
    return {k, true};
}

double golden_section(double a, double b, double width, int sgn, const FourierVector& bhat, int bandwidth) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    auto f = [&](double k) { return smallest_singular_value(boundary_system(k, sgn, bhat, bandwidth).matrix); };
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > width) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

FourierVector kernel_coefficients(const Eigen::VectorXcd& v, const Eigen::VectorXd& scale, int bandwidth) {
    FourierVector a(bandwidth);
    Eigen::Index big = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i) * scale(i)) > std::abs(v(big) * scale(big))) big = i;
    // fix the phase so that the dominant coefficient is real and positive
    const cplx phase = std::abs(v(big)) > 0.0 ? std::conj(v(big)) / std::abs(v(big)) : cplx{1.0};
    for (int m = -bandwidth; m <= bandwidth; ++m) {
        const auto i = static_cast<Eigen::Index>(m + bandwidth);
        a.at(m) = phase * v(i) * scale(i);
    }
    return a;
}

double l2_norm(const SampledField& s, const DiscQuadrature& q) { return std::sqrt(std::real(inner(s, s, q))); }

// Orthonormalise the fields of one eigenspace in L^2(D) and attach residuals.
std::vector<Eigenpair> finalize(double k, int sgn, const std::vector<FourierVector>& kernels, double sigma_rel,
                                const BoundarySpec& spec, int bandwidth) {
    const DiscQuadrature q = disc_quadrature(2 * bandwidth, 4 * bandwidth);
    std::vector<FourierBesselSpinor> fields;
    std::vector<SampledField> samples;
    for (const auto& a : kernels) {
        FourierBesselSpinor u(k, sgn, a);
        SampledField s = sample_field(u, q);
        for (std::size_t j = 0; j < fields.size(); ++j) {
            const cplx c = inner(samples[j], s, q);
            FourierVector proj = c * fields[j].coeffs();
            u = FourierBesselSpinor(k, sgn, u.coeffs() - proj);
            s = sample_field(u, q);
        }
        const double nrm = l2_norm(s, q);
        if (nrm == 0.0) continue;
        u.scale(1.0 / nrm);
        s = sample_field(u, q);
        fields.push_back(u);
        samples.push_back(std::move(s));
    }

    std::vector<Eigenpair> out;
    for (std::size_t j = 0; j < fields.size(); ++j) {
        Eigenpair p{sgn * k, k, sgn, static_cast<int>(fields.size()), sigma_rel, 0.0, 0.0, fields[j]};
        p.boundary_residual = boundary_residual(fields[j], spec, static_cast<std::size_t>(4 * bandwidth));
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < q.points.size(); ++i) {
            const auto& jt = samples[j].jets[i];
            const auto tu = apply_dirac(jt);
            num += q.weights[i] * (std::norm(tu[0] - p.energy * jt.u[0]) + std::norm(tu[1] - p.energy * jt.u[1]));
            den += q.weights[i] * (std::norm(jt.u[0]) + std::norm(jt.u[1]));
        }
        p.interior_residual = std::sqrt(num / den);
        out.push_back(std::move(p));
    }
    return out;
}

struct RootAnalysis {
    double sigma_rel = 1.0;
    std::vector<FourierVector> kernels;
};

RootAnalysis analyse_root(double k, int sgn, const FourierVector& bhat, int bandwidth, double threshold) {
    const BoundarySystem sys = boundary_system(k, sgn, bhat, bandwidth);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.matrix, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    RootAnalysis r;
    r.sigma_rel = sv(sv.size() - 1) / smax;
    if (r.sigma_rel > threshold) return r;
    for (Eigen::Index i = sv.size() - 1; i >= 0 && sv(i) <= threshold * smax; --i)
        r.kernels.push_back(kernel_coefficients(svd.matrixV().col(i), sys.column_scale, bandwidth));
    return r;
}

}  // namespace

std::vector<SecularRoot> secular_roots(double eta, int sgn, double k_max, double tol, double scan_step,
                                       double eps_eta) {
    check_sign(sgn);
    if (!(k_max > 0.0) || k_max > 200.0) throw std::invalid_argument("secular_roots: k_max must lie in (0, 200]");
    if (std::abs(std::cos(eta)) < eps_eta) {
        std::ostringstream os;
        os << "secular_roots: |cos eta| = " << std::abs(std::cos(eta))
           << " is below eps_eta; the per-mode equation degenerates to J_m(k) = 0 (zigzag)";
        throw ZigzagError(os.str());
    }
    const double b = std::tan(0.5 * (0.5 * kPi - eta));
    const int m_max = static_cast<int>(std::ceil(k_max)) + 20;
    auto g = [&](int m, double k) { return sgn * bessel_j(m + 1, k) - b * bessel_j(m, k); };

    const int steps = static_cast<int>(std::ceil(k_max / scan_step));
    std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) grid[static_cast<std::size_t>(i)] = std::min(k_max, (i + 0.5) * scan_step);
    grid.back() = k_max;

    std::vector<std::vector<double>> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const BesselTable t(-m_max, m_max + 1, grid[i]);
        values[i].resize(static_cast<std::size_t>(2 * m_max + 1));
        for (int m = -m_max; m <= m_max; ++m)
            values[i][static_cast<std::size_t>(m + m_max)] = sgn * t(m + 1) - b * t(m);
    }

    std::vector<SecularRoot> roots;
    for (int m = -m_max; m <= m_max; ++m) {
        const auto col = static_cast<std::size_t>(m + m_max);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            double lo = grid[i];
            double hi = grid[i + 1];
            double glo = values[i][col];
            const double ghi = values[i + 1][col];
            if (ghi == 0.0) {
                roots.push_back({m, hi});
                continue;
            }
            if (glo == 0.0 || (glo > 0.0) == (ghi > 0.0)) continue;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(m, mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((gm > 0.0) == (glo > 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back({m, 0.5 * (lo + hi)});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const SecularRoot& a, const SecularRoot& b2) {
        return a.k < b2.k || (a.k == b2.k && a.m < b2.m);
    });
    return roots;
}

FourierBesselSpinor::FourierBesselSpinor(double k, int sgn, FourierVector coeffs) : k_(k), sgn_(sgn), a_(std::move(coeffs)) {
    check_sign(sgn);
}

SpinorJet FourierBesselSpinor::jet(cplx z) const {
    const int n = a_.bandwidth();
    const double r = std::abs(z);
    const double theta = r > 0.0 ? std::arg(z) : 0.0;
    const BesselTable jt(-n - 1, n + 2, k_ * r);

    // e^{i j theta} for j in [-n-1, n+2]
    std::vector<cplx> e(static_cast<std::size_t>(2 * n + 4));
    const cplx step = std::polar(1.0, theta);
    e[0] = std::polar(1.0, -(n + 1) * theta);
    for (std::size_t i = 1; i < e.size(); ++i) e[i] = e[i - 1] * step;
    auto ex = [&](int j) { return e[static_cast<std::size_t>(j + n + 1)]; };

    cplx s0{}, sm1{}, sp1{}, sp2{};
    for (int m = -n; m <= n; ++m) {
        const cplx a = a_[m];
        if (a == cplx{}) continue;
        s0 += a * jt(m) * ex(m);
        sm1 += a * jt(m - 1) * ex(m - 1);
        sp1 += a * jt(m + 1) * ex(m + 1);
        sp2 += a * jt(m + 2) * ex(m + 2);
    }
    const double h = 0.5 * k_;
    const cplx is = I * static_cast<double>(sgn_);
    SpinorJet out;
    out.u = {s0, is * sp1};
    out.dz = {h * sm1, is * h * s0};
    out.dzbar = {-h * sp1, -is * h * sp2};
    return out;
}

SpinorTrace FourierBesselSpinor::trace() const {
    const int n = a_.bandwidth();
    const BesselTable jt(-n - 1, n + 2, k_);
    FourierVector first(n + 1);
    FourierVector second(n + 1);
    for (int m = -n; m <= n; ++m) {
        first.at(m) = kSqrtTwoPi * a_[m] * jt(m);
        second.at(m + 1) = I * static_cast<double>(sgn_) * kSqrtTwoPi * a_[m] * jt(m + 1);
    }
    return SpinorTrace(std::move(first), std::move(second));
}

FourierVector b_coefficients(const BoundarySpec& spec, int bandwidth, double eps_eta) {
    std::size_t count = 64;
    while (count < static_cast<std::size_t>(4 * bandwidth + 4)) count *= 2;
    std::vector<cplx> values;
    values.reserve(count);
    for (double th : uniform_angles(count)) values.emplace_back(b_of(spec, th, eps_eta));
    return analyze(values, bandwidth);
}

BoundarySystem boundary_system(double k, int sgn, const FourierVector& bhat, int bandwidth) {
    check_sign(sgn);
    if (bhat.bandwidth() < 2 * bandwidth)
        throw std::invalid_argument("boundary_system: B coefficients need bandwidth >= 2N");
    const int dim = 2 * bandwidth + 1;
    const BesselTable jt(-bandwidth - 1, bandwidth + 2, k);
    auto dj = [&](int m) { return 0.5 * (jt(m - 1) - jt(m + 1)); };

    BoundarySystem sys;
    sys.matrix.resize(dim, dim);
    sys.derivative.resize(dim, dim);
    sys.column_scale.resize(dim);
    for (int m = -bandwidth; m <= bandwidth; ++m) {
        const auto col = static_cast<Eigen::Index>(m + bandwidth);
        // d = 1 / |J_p| for the dominant order p; its k-derivative keeps Newton
        // on the scaled branches, which have no spurious zero at k = 0
        const bool lower = std::abs(jt(m)) >= std::abs(jt(m + 1));
        const double jp = lower ? jt(m) : jt(m + 1);
        const double d = 1.0 / std::max(std::abs(jp), kColumnFloor);
        const double dd = std::abs(jp) > kColumnFloor ? -d * (lower ? dj(m) : dj(m + 1)) / jp : 0.0;
        sys.column_scale(col) = d;
        const double jm = jt(m);
        const double djm = dj(m);
        for (int n = -bandwidth; n <= bandwidth; ++n) {
            const auto row = static_cast<Eigen::Index>(n + bandwidth);
            const cplx b = kInvSqrtTwoPi * bhat[n - m];
            cplx v = -b * jm;
            cplx dv = -b * djm;
            if (n == m) {
                v += sgn * jt(n + 1);
                dv += sgn * dj(n + 1);
            }
            sys.matrix(row, col) = v * d;
            sys.derivative(row, col) = dv * d + v * dd;
        }
    }
    return sys;
}

Eigen::MatrixXcd assemble_boundary_matrix(double k, int sgn, const BoundarySpec& spec, int bandwidth) {
    require_circle(spec, "assemble_boundary_matrix");
    if (bandwidth < k + 20.0)
        throw std::invalid_argument("assemble_boundary_matrix: bandwidth must be at least k + 20");
    return boundary_system(k, sgn, b_coefficients(spec, 2 * bandwidth), bandwidth).matrix;
}

SpectralResult scan_spectrum(const BoundarySpec& spec, int sgn, const ScanOptions& opt) {
    check_sign(sgn);
    require_circle(spec, "scan_spectrum");
    if (!(opt.grid_step > 0.0) || !(opt.k_max > opt.k_min) || opt.k_max > 200.0)
        throw std::invalid_argument("scan_spectrum: need 0 <= k_min < k_max <= 200 and grid_step > 0");
    const EtaValidation ev = validate_eta(spec, opt.eps_eta);
    if (!ev.ok) {
        std::ostringstream os;
        os << "scan_spectrum: min |cos eta| = " << ev.min_abs_cos << " < eps_eta = " << opt.eps_eta
           << "; the operator has essential spectrum at 0 and no discrete scan applies";
        throw ZigzagError(os.str());
    }

    SpectralResult res;
    res.sgn = sgn;
    res.bandwidth = opt.bandwidth > 0 ? opt.bandwidth : static_cast<int>(std::ceil(opt.k_max)) + 20;
    const int nb = res.bandwidth;
    const FourierVector bhat = b_coefficients(spec, 2 * nb, opt.eps_eta);
    const double h = opt.grid_step;

    const double k_start = std::max(opt.k_min, h);
    const int count = static_cast<int>(std::floor((opt.k_max - k_start) / h)) + 2;
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = k_start + i * h;

    std::vector<std::vector<double>> predictions(grid.size());
    std::vector<double> sigma(grid.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        const double k = grid[static_cast<std::size_t>(i)];
        const BoundarySystem sys = boundary_system(k, sgn, bhat, nb);
        for (cplx step : branch_steps(sys)) {
            if (std::abs(step.real()) <= 0.75 * h && std::abs(step.imag()) <= 0.75 * h)
                predictions[static_cast<std::size_t>(i)].push_back(k - step.real());
        }
        if (opt.record_trace)
            sigma[static_cast<std::size_t>(i)] = smallest_singular_value(sys.matrix) / largest_singular_value(sys.matrix);
    }
    if (opt.record_trace)
        for (std::size_t i = 0; i < grid.size(); ++i) res.sigma_trace.emplace_back(grid[i], sigma[i]);

    std::vector<double> candidates;
    for (const auto& p : predictions) candidates.insert(candidates.end(), p.begin(), p.end());
    std::sort(candidates.begin(), candidates.end());
    // predictions of one root from neighbouring grid points nearly coincide
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double a, double b) { return b - a <= 1e-7; }),
                     candidates.end());

    std::vector<double> refined(candidates.size(), -1.0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
        const double c = candidates[static_cast<std::size_t>(i)];
        const Polished p = newton_refine(c, sgn, bhat, nb, h);
        if (p.ok) refined[static_cast<std::size_t>(i)] = p.k;
    }
    std::vector<double> roots;
    for (std::size_t i = 0; i < refined.size(); ++i) {
        if (refined[i] < 0.0) {
            std::ostringstream os;
            os << "k ~ " << candidates[i] << ": Newton refinement left the prediction window";
            res.rejected.push_back(os.str());
            continue;
        }
        roots.push_back(refined[i]);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> unique;
    for (double r : roots)
        if (unique.empty() || r - unique.back() > kDedupTol) unique.push_back(r);

    for (std::size_t i = 0; i < unique.size(); ++i) {
        double gap = 1e-7;
        if (i > 0) gap = std::min(gap, 0.25 * (unique[i] - unique[i - 1]));
        if (i + 1 < unique.size()) gap = std::min(gap, 0.25 * (unique[i + 1] - unique[i]));
        const double k = golden_section(unique[i] - gap, unique[i] + gap, opt.golden_width, sgn, bhat, nb);
        if (k <= opt.k_min || k > opt.k_max) continue;
        const RootAnalysis ra = analyse_root(k, sgn, bhat, nb, opt.singular_threshold);
        if (ra.kernels.empty()) {
            std::ostringstream os;
            os << "k = " << k << ": sigma_min/sigma_max = " << ra.sigma_rel << " above threshold";
            res.rejected.push_back(os.str());
            continue;
        }
        auto pairs = finalize(k, sgn, ra.kernels, ra.sigma_rel, spec, nb);
        for (auto& p : pairs) res.pairs.push_back(std::move(p));
    }
    std::stable_sort(res.pairs.begin(), res.pairs.end(),
                     [](const Eigenpair& a, const Eigenpair& b) { return a.energy < b.energy; });
    return res;
}

Eigenpair refine_eigenpair(const BoundarySpec& spec, int sgn, double k_guess, int bandwidth, double window,
                           double eps_eta) {
    check_sign(sgn);
    require_circle(spec, "refine_eigenpair");
    const FourierVector bhat = b_coefficients(spec, 2 * bandwidth, eps_eta);
    const Polished p = newton_refine(k_guess, sgn, bhat, bandwidth, window);
    if (!p.ok) {
        std::ostringstream os;
        os << "refine_eigenpair: no singular point within " << window << " of k = " << k_guess;
        throw ConvergenceError(os.str());
    }
    const double k = golden_section(p.k - 1e-8, p.k + 1e-8, 1e-12, sgn, bhat, bandwidth);
    const RootAnalysis ra = analyse_root(k, sgn, bhat, bandwidth, 1e-6);
    if (ra.kernels.empty()) {
        std::ostringstream os;
        os << "refine_eigenpair: sigma_min/sigma_max = " << ra.sigma_rel << " at k = " << k;
        throw ConvergenceError(os.str());
    }
    return finalize(k, sgn, ra.kernels, ra.sigma_rel, spec, bandwidth).front();
}

SampledField sample_field(const SpinorField& u, const DiscQuadrature& q) {
    SampledField s;
    s.jets.resize(q.points.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < static_cast<int>(q.points.size()); ++i)
        s.jets[static_cast<std::size_t>(i)] = u.jet(q.points[static_cast<std::size_t>(i)]);
    return s;
}

cplx inner(const SampledField& u, const SampledField& v, const DiscQuadrature& q) {
    cplx acc{};
    for (std::size_t i = 0; i < q.points.size(); ++i)
        acc += q.weights[i] * (std::conj(u.jets[i].u[0]) * v.jets[i].u[0] + std::conj(u.jets[i].u[1]) * v.jets[i].u[1]);
    return acc;
}

cplx inner_dirac_left(const SampledField& u, const SampledField& v, const DiscQuadrature& q) {
    cplx acc{};
    for (std::size_t i = 0; i < q.points.size(); ++i) {
        const auto tu = apply_dirac(u.jets[i]);
        acc += q.weights[i] * (std::conj(tu[0]) * v.jets[i].u[0] + std::conj(tu[1]) * v.jets[i].u[1]);
    }
    return acc;
}

namespace {

std::pair<cplx, cplx> symmetry_terms(const SpinorField& u, const SpinorField& v, const BoundarySpec& spec, int radial,
                                     int angular) {
    const DiscQuadrature q = disc_quadrature(radial, angular);
    const SampledField su = sample_field(u, q);
    const SampledField sv = sample_field(v, q);
    cplx u_tv{};
    for (std::size_t i = 0; i < q.points.size(); ++i) {
        const auto tv = apply_dirac(sv.jets[i]);
        u_tv += q.weights[i] * (std::conj(su.jets[i].u[0]) * tv[0] + std::conj(su.jets[i].u[1]) * tv[1]);
    }
    const cplx tu_v = inner_dirac_left(su, sv, q);

    cplx bdry{};
    const double dtheta = kTwoPi / angular;
    for (double th : uniform_angles(static_cast<std::size_t>(angular))) {
        const cplx z = spec.point(th);
        const BoundaryFrame f = frame_at(spec, th);
        const SpinorJet ju = u.jet(z);
        const SpinorJet jv = v.jet(z);
        const Eigen::Vector2cd w = sigma_dot_n(f) * Eigen::Vector2cd(jv.u[0], jv.u[1]);
        bdry += (std::conj(ju.u[0]) * w(0) + std::conj(ju.u[1]) * w(1)) * std::abs(spec.velocity(th)) * dtheta;
    }
    return {u_tv - tu_v, bdry};
}

}  // namespace

SymmetryDefect symmetry_defect(const SpinorField& u, const SpinorField& v, const BoundarySpec& spec, int radial,
                               int angular) {
    require_circle(spec, "symmetry_defect");
    const auto [d1, b1] = symmetry_terms(u, v, spec, radial, angular);
    const auto [d2, b2] = symmetry_terms(u, v, spec, 2 * radial, 2 * angular);
    SymmetryDefect s;
    s.full = std::abs(d1 + I * b1);
    s.pure = std::abs(d1);
    s.level_disagreement = std::abs((d2 + I * b2) - (d1 + I * b1));
    return s;
}

double regularity_ratio(const SpinorField& u, const DiscQuadrature& q) {
    const SampledField s = sample_field(u, q);
    double l2 = 0.0;
    double grad = 0.0;
    double tu = 0.0;
    for (std::size_t i = 0; i < q.points.size(); ++i) {
        const auto& j = s.jets[i];
        const auto t = apply_dirac(j);
        l2 += q.weights[i] * (std::norm(j.u[0]) + std::norm(j.u[1]));
        grad += q.weights[i] * gradient_norm_sq(j);
        tu += q.weights[i] * (std::norm(t[0]) + std::norm(t[1]));
    }
    const double den = std::sqrt(l2) + std::sqrt(tu);
    if (den == 0.0) throw std::invalid_argument("regularity_ratio: zero field");
    return std::sqrt(l2 + grad) / den;
}

TraceProfile trace_sobolev_profile(const SpinorTrace& trace) {
    const int bw = trace.bandwidth();
    auto partial = [&](int m) {
        double acc = 0.0;
        for (int n = -m; n <= m; ++n)
            acc += (std::abs(n) + 1.0) * (std::norm(trace.first[n]) + std::norm(trace.second[n]));
        return acc;
    };
    TraceProfile p;
    std::vector<int> ms;
    for (int m = 1; m < bw; m *= 2) ms.push_back(m);
    ms.push_back(std::max(bw, 1));
    for (int m : ms) p.partial_sums.emplace_back(m, partial(m));
    const double last = partial(std::max(bw, 1));
    const double half = partial(std::max(bw, 1) / 2);
    p.last_increase = half > 0.0 ? (last - half) / half : (last > 0.0 ? 1.0 : 0.0);
    p.saturated = p.last_increase < 0.01;
    return p;
}

double boundary_residual(const FourierBesselSpinor& u, const BoundarySpec& spec, std::size_t samples) {
    double num = 0.0;
    double den = 0.0;
    for (double th : uniform_angles(samples)) {
        const SpinorJet j = u.jet(spec.point(th));
        const cplx bt = b_of(spec, th) * frame_at(spec, th).tangent;
        num += std::norm(j.u[1] - bt * j.u[0]);
        den += std::norm(j.u[0]) + std::norm(j.u[1]);
    }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

}  // namespace diracspec
