#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracspec/boundary_geometry.hpp"
#include "diracspec/conformal_transport.hpp"

namespace diracspec::harness {

// Malformed or out-of-range configuration; maps to exit code 1.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainConfig {
    MapFamily family = MapFamily::identity;
    std::complex<double> a{0.3, 0.0};  // quadratic coefficient
    double phi = 0.0;                  // moebius rotation
    std::complex<double> b{0.0, 0.0};  // moebius centre
};

struct EtaConfig {
    enum class Profile { constant, fourier };
    Profile profile = Profile::constant;
    double value = 0.0;  // constant profile
    double a0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
};

struct NumericsConfig {
    int bandwidth = 0;  // 0: solver default
    double k_min = 0.0;
    double k_max = 15.0;
    double grid_step = 0.02;
    std::vector<int> signs{1, -1};
    double singular_threshold = 1e-6;
    double golden_width = 1e-12;
    double eps_eta = kDefaultEpsEta;
    double boundary_tol = 1e-6;
    double interior_tol = 1e-8;
    int random_cases = 200;
    int verify_bandwidth = 128;
};

struct WeylSection {
    int n_max = 4;
    double max_radius = 0.8;
    int ladder_first = 4;
    int ladder_last = 40;
    int nodes_per_panel = 12;
    double delta = 0.05;
};

struct OutputConfig {
    std::filesystem::path directory = "out";
    std::string prefix;
};

struct RunConfig {
    std::optional<std::string> command;
    DomainConfig domain;
    EtaConfig eta;
    NumericsConfig numerics;
    WeylSection weyl;
    OutputConfig output;
    std::uint64_t seed = 20240611;
};

/// Parse a JSON config. Unknown keys, wrong types and non-positive
/// tolerances throw ConfigError naming the offending key.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

EtaProfile make_eta(const EtaConfig& eta);
ConformalMap make_map(const DomainConfig& domain);
/// Unit circle for the identity map, conformal image otherwise.
BoundarySpec make_spec(const RunConfig& config);

}  // namespace diracspec::harness
