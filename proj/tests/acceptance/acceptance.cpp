// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "diracspec/disc_solver.hpp"
#include "diracspec/weyl_witness.hpp"
#include "harness/suites.hpp"

using namespace diracspec;
using namespace diracspec::harness;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double worst(const std::vector<CheckRow>& rows, const std::set<std::string>& ids, bool* all_ok) {
    double w = 0.0;
    for (const auto& r : rows) {
        if (!ids.empty() && !ids.count(r.identity)) continue;
        if (!r.pass()) *all_ok = false;
        if (!r.lower_bound) w = std::max(w, r.value);
    }
    return w;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

RunConfig base_config() {
    RunConfig c;
    c.numerics.verify_bandwidth = 128;
    c.numerics.random_cases = 200;
    return c;
}

Outcome check_pauli() {
    bool ok = true;
    const double w = worst(pauli_suite(20240611, 1000), {}, &ok);
    return {ok && w <= 1e-14, fmt("max defect %.2e over 1000 frames", w)};
}

std::vector<CheckRow> cauchy_rows() {
    static const std::vector<CheckRow> rows = cauchy_kernel_suite(20240611, 128, 100);
    return rows;
}

Outcome check_cauchy_exactness() {
    bool ok = true;
    const auto rows = cauchy_rows();
    const double exact = worst(rows, {"cauchy_K_monomials", "cauchy_Kbar_monomials", "hardy_projections_complementary"},
                               &ok);
    const double norm = worst(rows, {"cauchy_extension_l2_norm"}, &ok);
    return {ok && exact == 0.0 && norm <= 1e-12,
            fmt("monomial/complementarity defect %.1e, ", exact) + fmt("L2 norm rel. defect %.2e", norm)};
}

Outcome check_commutator() {
    bool ok = true;
    const auto rows = commutator_suite(20240611, 128, 200);
    double ratio = 0.0;
    for (const auto& r : rows)
        if (r.identity == "smoothing_ratio_max") ratio = std::max(ratio, r.value);
    const double dual = worst(rows, {"commutator_dual_route"}, &ok);
    worst(rows, {"smoothing_ratio_max"}, &ok);
    return {ok && ratio <= 1.0 + 1e-10 && dual <= 1e-12,
            fmt("max smoothing ratio %.6f, ", ratio) + fmt("dual route %.2e", dual)};
}

Outcome check_annihilation() {
    bool ok = true;
    const double w = worst(cauchy_rows(), {"cauchy_interior_annihilation"}, &ok);
    return {ok && w <= 1e-8, fmt("max |dzbar Kf|, |dz Kbar f| = %.2e", w)};
}

// Keeps the eta = 0 scans for the regularity criterion.
std::vector<SpectralResult> g_eta0_scans;

Outcome check_spectral_oracle() {
    double worst_err = 0.0;
    int missing = 0, extra = 0, mult_mismatch = 0, roots = 0;
    for (double eta : {0.0, 0.4, -0.4}) {
        const BoundarySpec spec = BoundarySpec::unit_circle(EtaProfile::constant(eta));
        for (int sgn : {1, -1}) {
            ScanOptions opt;
            opt.k_max = 15.0;
            const SpectralResult res = scan_spectrum(spec, sgn, opt);
            if (eta == 0.0) g_eta0_scans.push_back(res);
            // cluster the oracle roots; cluster size is the multiplicity
            const std::vector<SecularRoot> sec = secular_roots(eta, sgn, 15.0);
            std::vector<std::pair<double, int>> clusters;
            for (const auto& r : sec) {
                if (!clusters.empty() && std::abs(r.k - clusters.back().first) <= 1e-8)
                    ++clusters.back().second;
                else
                    clusters.emplace_back(r.k, 1);
            }
            roots += static_cast<int>(clusters.size());
            std::vector<bool> used(res.pairs.size(), false);
            for (const auto& [k, mult] : clusters) {
                std::size_t best = res.pairs.size();
                double err = 1e300;
                for (std::size_t i = 0; i < res.pairs.size(); ++i) {
                    const double e = std::abs(res.pairs[i].k - k);
                    if (e < err) err = e, best = i;
                }
                if (best == res.pairs.size() || err > 1e-8) {
                    ++missing;
                    continue;
                }
                used[best] = true;
                worst_err = std::max(worst_err, err);
                if (res.pairs[best].multiplicity != mult) ++mult_mismatch;
            }
            extra += static_cast<int>(std::count(used.begin(), used.end(), false));
        }
    }
    return {missing == 0 && extra == 0 && mult_mismatch == 0 && worst_err <= 1e-8,
            std::to_string(roots) + " oracle roots, max |dk| " + fmt("%.2e", worst_err) + ", missing " +
                std::to_string(missing) + ", extra " + std::to_string(extra) + ", multiplicity mismatches " +
                std::to_string(mult_mismatch)};
}

Outcome check_eigenpair_residuals() {
    const BoundarySpec spec = BoundarySpec::unit_circle(EtaProfile::fourier(0.0, {}, {0.3}));
    std::vector<Eigenpair> pairs;
    int bandwidth = 0;
    for (int sgn : {1, -1}) {
        ScanOptions opt;
        opt.k_max = 8.0;
        const SpectralResult res = scan_spectrum(spec, sgn, opt);
        bandwidth = std::max(bandwidth, res.bandwidth);
        pairs.insert(pairs.end(), res.pairs.begin(), res.pairs.end());
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Eigenpair& a, const Eigenpair& b) { return std::abs(a.energy) < std::abs(b.energy); });
    if (pairs.size() < 20) return {false, "only " + std::to_string(pairs.size()) + " eigenpairs found"};
    pairs.resize(20);
    double bres = 0.0;
    for (const auto& p : pairs) bres = std::max(bres, p.boundary_residual);
    const DiscQuadrature q = disc_quadrature(2 * bandwidth, 4 * bandwidth);
    std::vector<SampledField> fields;
    for (const auto& p : pairs) fields.push_back(sample_field(p.field, q));
    double orth = 0.0;
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            const double nij = std::abs(inner(fields[i], fields[j], q));
            const double ni = std::sqrt(std::abs(inner(fields[i], fields[i], q)));
            const double nj = std::sqrt(std::abs(inner(fields[j], fields[j], q)));
            orth = std::max(orth, nij / (ni * nj));
        }
    return {bres <= 1e-6 && orth <= 1e-8,
            fmt("20 pairs, max boundary residual %.2e, ", bres) + fmt("max |<u_i,u_j>| %.2e", orth)};
}

Outcome check_symmetry() {
    bool ok = true;
    const auto rows = symmetry_suite(base_config());
    const double ibp = worst(rows, {"ibp_constant_spinor", "ibp_polynomial_spinors"}, &ok);
    const double pure = worst(rows, {"pure_symmetry_eigenpairs"}, &ok);
    worst(rows, {}, &ok);
    return {ok && ibp <= 1e-10 && pure <= 1e-8,
            fmt("polynomial IBP defect %.2e, ", ibp) + fmt("eigenpair pure defect %.2e", pure)};
}

Outcome check_regularity() {
    double c_emp = 0.0, drift = 0.0;
    bool finite = true;
    int count = 0;
    const BoundarySpec spec = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    for (const SpectralResult& res : g_eta0_scans) {
        const int n1 = res.bandwidth, n2 = 2 * res.bandwidth;
        // one rule for both levels, so only the field changes
        const DiscQuadrature q = disc_quadrature(2 * n1, 4 * n1);
        for (const auto& p : res.pairs) {
            const double r1 = regularity_ratio(p.field, q);
            const Eigenpair fine = refine_eigenpair(spec, res.sgn, p.k, n2);
            const double r2 = regularity_ratio(fine.field, q);
            finite = finite && std::isfinite(r1) && std::isfinite(r2);
            c_emp = std::max({c_emp, r1, r2});
            drift = std::max(drift, std::abs(r2 - r1) / r1);
            ++count;
        }
    }
    return {finite && count > 0 && drift <= 0.05,
            std::to_string(count) + " eigenfunctions, empirical C = " + fmt("%.4f", c_emp) +
                fmt(", max change under doubling %.2e", drift)};
}

Outcome check_weyl() {
    const std::vector<WeylReport> reps = certify_sequence(6);
    bool bound_ok = true, converged = true, decreasing = true, stretch = true;
    double disagreement = 0.0;
    std::string masses;
    for (const auto& r : reps) {
        const bool meets = r.meets_bound && r.quotient <= 1.0 / r.n;
        if (r.n <= 4) bound_ok = bound_ok && meets;
        stretch = stretch && meets;
        converged = converged && r.level_disagreement < 0.01;
        disagreement = std::max(disagreement, r.level_disagreement);
        masses += (masses.empty() ? "" : " ") + fmt("%.3g", r.mass_outside);
    }
    for (std::size_t i = 1; i < reps.size(); ++i)
        if (!(reps[i].mass_outside < reps[i - 1].mass_outside)) decreasing = false;
    std::string detail = std::string("quotient <= 1/n for n=1..4: ") + (bound_ok ? "yes" : "no") +
                         "; n=1..6: " + (stretch ? "yes" : "no") + fmt("; level disagreement %.2e", disagreement) +
                         "; mass_outside(0.05) = [" + masses + "], strictly decreasing: " + (decreasing ? "yes" : "no");
    return {bound_ok && converged && decreasing, detail};
}

Outcome check_conformal() {
    RunConfig c = base_config();
    c.domain.family = MapFamily::quadratic;
    c.domain.a = 0.3;
    const ConformalOutcome res = conformal_suite(c, {64, 128});
    bool ok = true;
    const double chain = worst(res.checks, {"chain_rule_dz", "chain_rule_dzbar"}, &ok);
    const double drift = worst(res.checks, {"u_condition_stability"}, &ok);
    worst(res.checks, {"beta_nowhere_vanishing"}, &ok);
    return {ok && chain <= 1e-10 && drift < 0.1,
            fmt("chain rule %.2e, ", chain) + fmt("max condition change %.4f, beta nonvanishing", drift)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "algebraic identities", 1.0, check_pauli},
        {2, "Cauchy kernel exactness", 5.0, check_cauchy_exactness},
        {3, "commutator smoothing", 30.0, check_commutator},
        {4, "interior annihilation", 5.0, check_annihilation},
        {5, "spectral oracle equivalence", 120.0, check_spectral_oracle},
        {6, "eigenpair residuals", 120.0, check_eigenpair_residuals},
        {7, "symmetry identity", 30.0, check_symmetry},
        {8, "regularity inequality", 60.0, check_regularity},
        {9, "Weyl certificate", 300.0, check_weyl},
        {10, "conformal transport", 60.0, check_conformal},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s criterion %d (%s): %s; %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.limit_s, in_time ? "" : " OVER TIME LIMIT");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
