#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "harness/config.hpp"
#include "harness/report.hpp"

using namespace diracspec::harness;
namespace fs = std::filesystem;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DIRACSPEC_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("diracspec_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

const std::string kConfigs = DIRACSPEC_CONFIG_DIR;

}  // namespace

TEST(Config, DefaultsAndOverrides) {
    const RunConfig c = parse_config(R"({"seed": 5, "numerics": {"k_max": 3.5}, "eta": {"profile": "fourier", "sin": [0.3]}})");
    EXPECT_EQ(c.seed, 5u);
    EXPECT_EQ(c.numerics.k_max, 3.5);
    EXPECT_EQ(c.eta.profile, EtaConfig::Profile::fourier);
    EXPECT_EQ(c.eta.sin_coeffs, std::vector<double>{0.3});
    EXPECT_EQ(make_spec(c).kind(), diracspec::CurveKind::unit_circle);
}

TEST(Config, ErrorsNameTheKey) {
    EXPECT_NE(message_of(R"({"numerics": {"kmax": 3}})").find("numerics.kmax"), std::string::npos);
    EXPECT_NE(message_of(R"({"numerics": {"boundary_tol": -1}})").find("numerics.boundary_tol"), std::string::npos);
    EXPECT_NE(message_of(R"({"domain": {"family": "ellipse"}})").find("domain.family"), std::string::npos);
    EXPECT_NE(message_of(R"({"bogus": 1})").find("bogus"), std::string::npos);
    EXPECT_FALSE(message_of("{not json").empty());
    EXPECT_THROW(make_map(parse_config(R"({"domain": {"family": "quadratic", "a": 0.9}})").domain), ConfigError);
}

TEST(Report, CsvHeaderAndRoundTripNumbers) {
    const fs::path dir = scratch("report");
    write_checks_csv(dir / "c.csv", {upper("x", "p", 0.1, 1.0), lower("y", "q", 0.5, 1.0)});
    const std::string s = slurp(dir / "c.csv");
    EXPECT_EQ(s.substr(0, s.find('\n')), "identity,parameter,defect,tolerance,relation,pass");
    EXPECT_NE(s.find("x,p,0.1,1,<=,true"), std::string::npos);
    EXPECT_NE(s.find("y,q,0.5,1,>=,false"), std::string::npos);
    write_json(dir / "d.json", nlohmann::json::object());
    EXPECT_NE(slurp(dir / "d.json").find("\"schema_version\": 1"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli("--help"), 0);
    EXPECT_EQ(run_cli(""), 1);
    EXPECT_EQ(run_cli("verify nonsense"), 1);
    const fs::path dir = scratch("usage");
    std::ofstream(dir / "bad.json") << R"({"numerics": {"kmax": 3}})";
    EXPECT_EQ(run_cli("--config " + (dir / "bad.json").string() + " spectrum"), 1);
    std::ofstream(dir / "n0.json") << R"({"weyl": {"n_max": 0}})";
    EXPECT_EQ(run_cli("--config " + (dir / "n0.json").string() + " weyl"), 1);
    EXPECT_EQ(run_cli("--config " + kConfigs + "/weyl.json spectrum"), 1);
}

TEST(Cli, ZigzagExitsTwo) {
    const fs::path dir = scratch("zigzag");
    EXPECT_EQ(run_cli("--config " + kConfigs + "/zigzag.json --out " + dir.string() + " spectrum"), 2);
}

TEST(Cli, CoarseWeylQuadratureExitsThree) {
    const fs::path dir = scratch("coarse");
    std::ofstream(dir / "coarse.json") << R"({"weyl": {"n_max": 2, "nodes_per_panel": 1}})";
    EXPECT_EQ(run_cli("--config " + (dir / "coarse.json").string() + " --out " + dir.string() + " weyl"), 3);
}

TEST(Cli, VerifyWritesTables) {
    const fs::path dir = scratch("verify");
    EXPECT_EQ(run_cli("--out " + dir.string() + " verify pauli"), 0);
    const std::string csv = slurp(dir / "verify_pauli.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "identity,parameter,defect,tolerance,relation,pass");
    EXPECT_EQ(csv.find(",false"), std::string::npos);
    EXPECT_NE(slurp(dir / "verify_pauli.json").find("schema_version"), std::string::npos);
}

TEST(Cli, SpectrumIsDeterministic) {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    std::ofstream(a / "cfg.json") << R"({"eta": {"profile": "fourier", "sin": [0.3]}, "numerics": {"k_max": 4}})";
    const std::string cfg = "--config " + (a / "cfg.json").string() + " --seed 3 ";
    ASSERT_EQ(run_cli(cfg + "--out " + (a / "out").string() + " spectrum"), 0);
    ASSERT_EQ(run_cli(cfg + "--out " + (b / "out").string() + " spectrum"), 0);
    int files = 0;
    for (const auto& e : fs::directory_iterator(a / "out")) {
        EXPECT_EQ(slurp(e.path()), slurp(b / "out" / e.path().filename())) << e.path();
        ++files;
    }
    EXPECT_EQ(files, 4);
    const std::string dat = slurp(a / "out" / "sigma_min_sgn+1.dat");
    const std::string first = dat.substr(0, dat.find('\n'));
    EXPECT_EQ(std::count(first.begin(), first.end(), ' '), 1);
}
