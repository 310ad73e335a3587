#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace diracspec::harness {

inline constexpr int kSchemaVersion = 1;

/// One verified identity. Upper-bound rows pass when value <= tolerance;
/// lower-bound rows (positivity and floor checks) when value >= tolerance.
struct CheckRow {
    std::string identity;
    std::string parameter;
    double value = 0.0;
    double tolerance = 0.0;
    bool lower_bound = false;

    bool pass() const { return lower_bound ? value >= tolerance : value <= tolerance; }
};

CheckRow upper(std::string identity, std::string parameter, double value, double tolerance);
CheckRow lower(std::string identity, std::string parameter, double value, double bound);

bool all_pass(const std::vector<CheckRow>& rows);

/// Shortest round-trip decimal form, identical across runs.
std::string format_number(double x);

/// Table with a header row; cells are written verbatim.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// identity,parameter,defect,tolerance,relation,pass
void write_checks_csv(const std::filesystem::path& path, const std::vector<CheckRow>& rows);

nlohmann::json checks_json(const std::vector<CheckRow>& rows);

/// Writes `doc` with schema_version set.
void write_json(const std::filesystem::path& path, nlohmann::json doc);

/// Two-column whitespace-separated plot data.
void write_dat(const std::filesystem::path& path, const std::vector<std::pair<double, double>>& points);

/// Prints failed rows to stderr; returns the number of failures.
int report_failures(const std::string& suite, const std::vector<CheckRow>& rows);

}  // namespace diracspec::harness
