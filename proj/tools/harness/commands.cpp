#include "commands.hpp"

#include <iostream>

#include <json.hpp>

#include "diracspec/disc_solver.hpp"
#include "diracspec/errors.hpp"
#include "diracspec/quadrature.hpp"
#include "diracspec/weyl_witness.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace diracspec::harness {

namespace {

using nlohmann::json;

std::filesystem::path out_path(const RunConfig& c, const std::string& name) {
    return c.output.directory / (c.output.prefix + name);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json run_header(const RunConfig& c, const std::string& command) {
    json eta;
    if (c.eta.profile == EtaConfig::Profile::constant) {
        eta = {{"profile", "constant"}, {"value", c.eta.value}};
    } else {
        eta = {{"profile", "fourier"}, {"a0", c.eta.a0}, {"cos", c.eta.cos_coeffs}, {"sin", c.eta.sin_coeffs}};
    }
    return {{"command", command},
            {"seed", c.seed},
            {"domain", {{"map", make_map(c.domain).tag()}}},
            {"eta", eta}};
}

void check_command(const RunConfig& c, const std::string& command) {
    if (c.command && *c.command != command)
        throw ConfigError("key 'command' is '" + *c.command + "' but the subcommand is '" + command + "'");
}

}  // namespace

int cmd_spectrum(const RunConfig& config) {
    check_command(config, "spectrum");
    const BoundarySpec spec = make_spec(config);
    if (spec.kind() != CurveKind::unit_circle)
        throw ConfigError("spectrum: the Fourier-Bessel solver runs on the unit disc only "
                          "(domain.family = unit_circle); use conformal-check for mapped domains");
    const NumericsConfig& nc = config.numerics;
    ScanOptions opt;
    opt.k_min = nc.k_min;
    opt.k_max = nc.k_max;
    opt.grid_step = nc.grid_step;
    opt.bandwidth = nc.bandwidth;
    opt.singular_threshold = nc.singular_threshold;
    opt.golden_width = nc.golden_width;
    opt.eps_eta = nc.eps_eta;

    std::vector<SpectralResult> results;
    for (int sgn : nc.signs) results.push_back(scan_spectrum(spec, sgn, opt));

    json doc = run_header(config, "spectrum");
    doc["k_range"] = {nc.k_min, nc.k_max};
    doc["grid_step"] = nc.grid_step;
    std::vector<std::vector<std::string>> table;
    std::vector<CheckRow> checks;
    double worst_boundary = 0.0, worst_interior = 0.0, worst_regularity = 0.0;
    bool all_saturated = true;
    json runs = json::array();
    for (const SpectralResult& r : results) {
        const DiscQuadrature q = disc_quadrature(2 * r.bandwidth, 4 * r.bandwidth);
        json pairs = json::array();
        for (const Eigenpair& p : r.pairs) {
            const double reg = regularity_ratio(p.field, q);
            const TraceProfile tp = trace_sobolev_profile(p.field.trace());
            worst_boundary = std::max(worst_boundary, p.boundary_residual);
            worst_interior = std::max(worst_interior, p.interior_residual);
            worst_regularity = std::max(worst_regularity, reg);
            all_saturated = all_saturated && tp.saturated;
            json coeffs = json::array();
            for (int m = -p.field.coeffs().bandwidth(); m <= p.field.coeffs().bandwidth(); ++m)
                coeffs.push_back(complex_json(p.field.coeffs()[m]));
            pairs.push_back({{"energy", p.energy},
                             {"k", p.k},
                             {"multiplicity", p.multiplicity},
                             {"sigma_min", p.sigma_min},
                             {"boundary_residual", p.boundary_residual},
                             {"interior_residual", p.interior_residual},
                             {"regularity_ratio", reg},
                             {"trace_h_half_last_increase", tp.last_increase},
                             {"trace_h_half_saturated", tp.saturated},
                             {"coefficients", coeffs}});
            table.push_back({std::to_string(r.sgn), format_number(p.energy), format_number(p.k),
                             std::to_string(p.multiplicity), format_number(p.sigma_min),
                             format_number(p.boundary_residual), format_number(p.interior_residual),
                             format_number(reg), tp.saturated ? "true" : "false"});
        }
        runs.push_back({{"sgn", r.sgn}, {"bandwidth", r.bandwidth}, {"pairs", pairs}, {"rejected", r.rejected}});
        write_dat(out_path(config, std::string("sigma_min_sgn") + (r.sgn > 0 ? "+1" : "-1") + ".dat"),
                  r.sigma_trace);
    }
    checks.push_back(upper("boundary_residual_max", "relative", worst_boundary, nc.boundary_tol));
    checks.push_back(upper("interior_residual_max", "relative", worst_interior, nc.interior_tol));
    doc["results"] = runs;
    doc["checks"] = checks_json(checks);
    doc["regularity_constant"] = worst_regularity;
    doc["trace_h_half_saturated"] = all_saturated;
    write_csv(out_path(config, "spectrum.csv"),
              {"sgn", "energy", "k", "multiplicity", "sigma_min", "boundary_residual", "interior_residual",
               "regularity_ratio", "trace_h_half_saturated"},
              table);
    write_json(out_path(config, "spectrum.json"), doc);
    return report_failures("spectrum", checks) == 0 ? kExitOk : kExitNumerical;
}

int cmd_verify(const RunConfig& config, const std::string& suite) {
    check_command(config, "verify");
    const std::vector<CheckRow> rows = run_suite(suite, config);
    write_checks_csv(out_path(config, "verify_" + suite + ".csv"), rows);
    json doc = run_header(config, "verify");
    doc["suite"] = suite;
    doc["checks"] = checks_json(rows);
    write_json(out_path(config, "verify_" + suite + ".json"), doc);
    return report_failures(suite, rows) == 0 ? kExitOk : kExitNumerical;
}

int cmd_weyl(const RunConfig& config) {
    check_command(config, "weyl");
    const WeylSection& w = config.weyl;
    if (w.n_max < 1 || w.n_max > 6) throw ConfigError("key 'weyl.n_max' must lie in [1, 6]");
    if (w.max_radius > 1.0) throw ConfigError("key 'weyl.max_radius' must not exceed 1");
    CertifyOptions opt;
    opt.max_radius = w.max_radius;
    opt.ladder_first = w.ladder_first;
    opt.ladder_last = w.ladder_last;
    opt.nodes_per_panel = w.nodes_per_panel;
    opt.delta = w.delta;

    const WeylDomain dom = weyl_domain(config.seed);
    const std::vector<WeylReport> reports = certify_sequence(w.n_max, opt);

    json doc;
    doc["command"] = "weyl";
    doc["seed"] = config.seed;
    doc["domain"] = {{"b_over_psi_sq_max", dom.b_over_psi_sq_max},
                     {"b_over_psi_sq_limit", dom.b_over_psi_sq_limit},
                     {"db_over_psi_max", dom.db_over_psi_max},
                     {"extension_constant", dom.extension_constant},
                     {"cone_ok", dom.cone_ok},
                     {"cone_samples", dom.cone_samples},
                     {"tangent_at_zero", complex_json(dom.tangent_at_zero)}};
    json arr = json::array();
    std::vector<std::vector<std::string>> table, ladder;
    std::vector<std::pair<double, double>> quotient, bound, mass;
    std::vector<CheckRow> checks;
    for (const WeylReport& r : reports) {
        json steps = json::array();
        for (const auto& [s, q] : r.ladder) {
            steps.push_back({{"pole", s}, {"quotient", q}});
            ladder.push_back({std::to_string(r.n), format_number(s), format_number(q)});
        }
        arr.push_back({{"n", r.n},
                       {"radius", r.radius},
                       {"pole", r.pole},
                       {"rule_radius", r.rule_radius},
                       {"quotient", r.quotient},
                       {"quotient_fine", r.quotient_fine},
                       {"level_disagreement", r.level_disagreement},
                       {"cutoff_term", r.cutoff_term},
                       {"log_norm_v", r.log_norm_v},
                       {"log_norm_tv", r.log_norm_tv},
                       {"mass_outside", r.mass_outside},
                       {"delta", r.delta},
                       {"meets_bound", r.meets_bound},
                       {"ladder", steps}});
        table.push_back({std::to_string(r.n), format_number(r.radius), format_number(r.pole),
                         format_number(r.quotient), format_number(r.quotient_fine),
                         format_number(r.level_disagreement), format_number(r.mass_outside),
                         format_number(r.cutoff_term), format_number(r.rule_radius), r.meets_bound ? "true" : "false"});
        quotient.emplace_back(r.n, r.quotient);
        bound.emplace_back(r.n, 1.0 / r.n);
        mass.emplace_back(r.n, r.mass_outside);
        checks.push_back(upper("weyl_quotient", "n=" + std::to_string(r.n), r.meets_bound ? r.quotient : 1e300,
                               1.0 / r.n));
    }
    doc["reports"] = arr;
    doc["checks"] = checks_json(checks);
    write_json(out_path(config, "weyl.json"), doc);
    write_csv(out_path(config, "weyl.csv"),
              {"n", "radius", "pole", "quotient", "quotient_fine", "level_disagreement", "mass_outside",
               "cutoff_term", "rule_radius", "meets_bound"},
              table);
    write_csv(out_path(config, "weyl_ladder.csv"), {"n", "pole", "quotient"}, ladder);
    write_dat(out_path(config, "weyl_quotient.dat"), quotient);
    write_dat(out_path(config, "weyl_bound.dat"), bound);
    write_dat(out_path(config, "weyl_mass_outside.dat"), mass);
    return report_failures("weyl", checks) == 0 ? kExitOk : kExitNumerical;
}

int cmd_conformal_check(const RunConfig& config) {
    check_command(config, "conformal-check");
    const int bw = config.numerics.bandwidth;
    const std::vector<int> bws = bw > 0 ? std::vector<int>{std::max(bw / 2, 4), bw} : std::vector<int>{32, 64, 128};
    for (int b : bws)
        if (b > 256) throw ConfigError("conformal-check: bandwidth must not exceed 256");
    const ConformalOutcome res = conformal_suite(config, bws);

    std::vector<std::vector<std::string>> cond;
    json cj = json::array();
    for (const ConditionRow& c : res.conditions) {
        cond.push_back({format_number(c.s), std::to_string(c.bandwidth), c.adjoint ? "adjoint" : "forward",
                        std::to_string(c.rows), format_number(c.sigma_max), format_number(c.sigma_min),
                        format_number(c.condition)});
        cj.push_back({{"s", c.s},
                      {"bandwidth", c.bandwidth},
                      {"operator", c.adjoint ? "adjoint" : "forward"},
                      {"rows", c.rows},
                      {"sigma_max", c.sigma_max},
                      {"sigma_min", c.sigma_min},
                      {"condition", c.condition}});
    }
    write_checks_csv(out_path(config, "conformal.csv"), res.checks);
    write_csv(out_path(config, "conformal_conditions.csv"),
              {"s", "bandwidth", "operator", "rows", "sigma_max", "sigma_min", "condition"}, cond);
    write_dat(out_path(config, "beta_modulus.dat"), res.beta_modulus);
    json doc = run_header(config, "conformal-check");
    doc["conditions"] = cj;
    doc["checks"] = checks_json(res.checks);
    write_json(out_path(config, "conformal.json"), doc);
    return report_failures("conformal-check", res.checks) == 0 ? kExitOk : kExitNumerical;
}

int guarded(const std::string& command, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ZigzagError& e) {
        std::cerr << command << ": zigzag rejection: " << e.what() << '\n';
        return kExitZigzag;
    } catch (const ConvergenceError& e) {
        std::cerr << command << ": not converged: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << command << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << command << ": error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace diracspec::harness
