#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace diracspec::harness {

/// Pointwise matrix identities at `frames` random boundary frames.
std::vector<CheckRow> pauli_suite(std::uint64_t seed, int frames = 1000);

/// Cauchy kernels on monomials, Hardy projections, L^2(D) norms of extensions
/// and interior annihilation.
std::vector<CheckRow> cauchy_kernel_suite(std::uint64_t seed, int bandwidth, int cases);

/// cauchy_kernel_suite plus extension norms and the projector onto
/// traces of solutions, on the bandwidth-N truncation.
std::vector<CheckRow> cauchy_suite(std::uint64_t seed, int bandwidth, int cases);

/// Commutators of multipliers with the Hardy projection, their half-derivative
/// gain and the bootstrap splitting.
std::vector<CheckRow> commutator_suite(std::uint64_t seed, int bandwidth, int cases);

/// Conformal map sanity, chain rule, transplantation conditioning and the
/// transported boundary function.
struct ConditionRow {
    double s = 0.0;
    int bandwidth = 0;
    bool adjoint = false;
    int rows = 0;
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    double condition = 0.0;
};

struct ConformalOutcome {
    std::vector<CheckRow> checks;
    std::vector<ConditionRow> conditions;
    std::vector<std::pair<double, double>> beta_modulus;  // (theta, |beta|)
};

/// Condition numbers are compared between the last two entries of `bandwidths`.
ConformalOutcome conformal_suite(const RunConfig& config, const std::vector<int>& bandwidths);

/// Integration by parts on polynomial spinors and on computed eigenpairs,
/// plus orthogonality of eigenfunctions. Needs a unit-disc config.
std::vector<CheckRow> symmetry_suite(const RunConfig& config);

/// Dispatch by name; throws ConfigError for unknown suites.
std::vector<CheckRow> run_suite(const std::string& name, const RunConfig& config);

const std::vector<std::string>& suite_names();

}  // namespace diracspec::harness
