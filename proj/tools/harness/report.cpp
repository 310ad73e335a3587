#include "report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace diracspec::harness {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

CheckRow upper(std::string identity, std::string parameter, double value, double tolerance) {
    return {std::move(identity), std::move(parameter), value, tolerance, false};
}

CheckRow lower(std::string identity, std::string parameter, double value, double bound) {
    return {std::move(identity), std::move(parameter), value, bound, true};
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto out = open_for_write(path);
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void write_checks_csv(const std::filesystem::path& path, const std::vector<CheckRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({r.identity, r.parameter, format_number(r.value), format_number(r.tolerance),
                         r.lower_bound ? ">=" : "<=", r.pass() ? "true" : "false"});
    write_csv(path, {"identity", "parameter", "defect", "tolerance", "relation", "pass"}, cells);
}

nlohmann::json checks_json(const std::vector<CheckRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"identity", r.identity},
                       {"parameter", r.parameter},
                       {"defect", r.value},
                       {"tolerance", r.tolerance},
                       {"relation", r.lower_bound ? ">=" : "<="},
                       {"pass", r.pass()}});
    return arr;
}

void write_json(const std::filesystem::path& path, nlohmann::json doc) {
    doc["schema_version"] = kSchemaVersion;
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
}

void write_dat(const std::filesystem::path& path, const std::vector<std::pair<double, double>>& points) {
    auto out = open_for_write(path);
    for (const auto& [x, y] : points) out << format_number(x) << ' ' << format_number(y) << '\n';
}

int report_failures(const std::string& suite, const std::vector<CheckRow>& rows) {
    int failed = 0;
    for (const auto& r : rows) {
        if (r.pass()) continue;
        ++failed;
        std::cerr << suite << ": FAILED " << r.identity << " [" << r.parameter << "]: " << format_number(r.value)
                  << (r.lower_bound ? " < " : " > ") << format_number(r.tolerance) << '\n';
    }
    return failed;
}

}  // namespace diracspec::harness
