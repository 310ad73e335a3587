#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "harness/commands.hpp"
#include "harness/suites.hpp"

using namespace diracspec::harness;

int main(int argc, char** argv) {
    CLI::App app{"Spectral solver and verification harness for Dirac operators on planar domains"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> bandwidth;
    app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory (overrides output.directory)");
    app.add_option("--seed", seed, "random seed (overrides seed)");
    app.add_option("--bandwidth", bandwidth, "Fourier bandwidth (overrides numerics.bandwidth)")
        ->check(CLI::Range(4, 256));

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues on the unit disc");
    auto* verify = app.add_subcommand("verify", "run an identity-check suite");
    std::string suite;
    verify->add_option("suite", suite, "pauli | cauchy | commutator | conformal | symmetry")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    auto* weyl = app.add_subcommand("weyl", "Weyl sequence witness at a corner");
    auto* conformal = app.add_subcommand("conformal-check", "conformal transplantation diagnostics");
    for (auto* sub : {spectrum, verify, weyl, conformal}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    return guarded(name, [&]() -> int {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (!out_dir.empty()) cfg.output.directory = out_dir;
        if (seed) cfg.seed = *seed;
        if (bandwidth) cfg.numerics.bandwidth = *bandwidth;
        if (*spectrum) return cmd_spectrum(cfg);
        if (*verify) return cmd_verify(cfg, suite);
        if (*weyl) return cmd_weyl(cfg);
        return cmd_conformal_check(cfg);
    });
}
