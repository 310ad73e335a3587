#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace diracspec::harness {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!keys.contains(item.key())) {
            const std::string path = where.empty() ? item.key() : where + "." + item.key();
            throw ConfigError("unknown key '" + path + "'");
        }
    }
}

const json& section(const json& root, const char* name) {
    const json& s = root.at(name);
    if (!s.is_object()) throw ConfigError(std::string("key '") + name + "' must be an object");
    return s;
}

double get_number(const json& obj, const std::string& where, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("key '" + where + "." + key + "' must be a number");
    return v.get<double>();
}

double get_positive(const json& obj, const std::string& where, const char* key, double fallback) {
    const double v = get_number(obj, where, key, fallback);
    if (!(v > 0.0)) throw ConfigError("key '" + where + "." + key + "' must be positive");
    return v;
}

int get_int(const json& obj, const std::string& where, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ConfigError("key '" + where + "." + key + "' must be an integer");
    return v.get<int>();
}

std::complex<double> get_complex(const json& obj, const std::string& where, const char* key,
                                 std::complex<double> fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ConfigError("key '" + where + "." + key + "' must be a number or [re, im]");
}

std::vector<double> get_list(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) return {};
    const json& v = obj.at(key);
    if (!v.is_array()) throw ConfigError("key '" + where + "." + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw ConfigError("key '" + where + "." + key + "' must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::string get_string(const json& obj, const std::string& where, const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError("key '" + where + "." + key + "' must be a string");
    return v.get<std::string>();
}

DomainConfig parse_domain(const json& s) {
    reject_unknown(s, "domain", {"family", "a", "phi", "b"});
    DomainConfig d;
    const std::string family = get_string(s, "domain", "family", "unit_circle");
    if (family == "unit_circle" || family == "identity")
        d.family = MapFamily::identity;
    else if (family == "quadratic")
        d.family = MapFamily::quadratic;
    else if (family == "moebius")
        d.family = MapFamily::moebius;
    else
        throw ConfigError("key 'domain.family' must be unit_circle, quadratic or moebius (got '" + family + "')");
    d.a = get_complex(s, "domain", "a", d.a);
    d.phi = get_number(s, "domain", "phi", d.phi);
    d.b = get_complex(s, "domain", "b", d.b);
    return d;
}

EtaConfig parse_eta(const json& s) {
    reject_unknown(s, "eta", {"profile", "value", "a0", "cos", "sin"});
    EtaConfig e;
    const std::string profile = get_string(s, "eta", "profile", "constant");
    if (profile == "constant")
        e.profile = EtaConfig::Profile::constant;
    else if (profile == "fourier")
        e.profile = EtaConfig::Profile::fourier;
    else
        throw ConfigError("key 'eta.profile' must be constant or fourier (got '" + profile + "')");
    e.value = get_number(s, "eta", "value", e.value);
    e.a0 = get_number(s, "eta", "a0", e.a0);
    e.cos_coeffs = get_list(s, "eta", "cos");
    e.sin_coeffs = get_list(s, "eta", "sin");
    return e;
}

NumericsConfig parse_numerics(const json& s) {
    reject_unknown(s, "numerics",
                   {"bandwidth", "k_min", "k_max", "grid_step", "signs", "singular_threshold", "golden_width",
                    "eps_eta", "boundary_tol", "interior_tol", "random_cases", "verify_bandwidth"});
    NumericsConfig n;
    const std::string w = "numerics";
    n.bandwidth = get_int(s, w, "bandwidth", n.bandwidth);
    if (n.bandwidth < 0) throw ConfigError("key 'numerics.bandwidth' must be non-negative");
    n.k_min = get_number(s, w, "k_min", n.k_min);
    n.k_max = get_positive(s, w, "k_max", n.k_max);
    if (n.k_min < 0.0 || n.k_min >= n.k_max) throw ConfigError("key 'numerics.k_min' must lie in [0, k_max)");
    n.grid_step = get_positive(s, w, "grid_step", n.grid_step);
    if (s.contains("signs")) {
        n.signs.clear();
        for (double v : get_list(s, w, "signs")) {
            if (v != 1.0 && v != -1.0) throw ConfigError("key 'numerics.signs' entries must be 1 or -1");
            n.signs.push_back(static_cast<int>(v));
        }
        if (n.signs.empty()) throw ConfigError("key 'numerics.signs' must not be empty");
    }
    n.singular_threshold = get_positive(s, w, "singular_threshold", n.singular_threshold);
    n.golden_width = get_positive(s, w, "golden_width", n.golden_width);
    n.eps_eta = get_positive(s, w, "eps_eta", n.eps_eta);
    n.boundary_tol = get_positive(s, w, "boundary_tol", n.boundary_tol);
    n.interior_tol = get_positive(s, w, "interior_tol", n.interior_tol);
    n.random_cases = get_int(s, w, "random_cases", n.random_cases);
    if (n.random_cases < 1) throw ConfigError("key 'numerics.random_cases' must be at least 1");
    n.verify_bandwidth = get_int(s, w, "verify_bandwidth", n.verify_bandwidth);
    if (n.verify_bandwidth < 4 || n.verify_bandwidth > 256)
        throw ConfigError("key 'numerics.verify_bandwidth' must lie in [4, 256]");
    return n;
}

WeylSection parse_weyl(const json& s) {
    reject_unknown(s, "weyl", {"n_max", "max_radius", "ladder_first", "ladder_last", "nodes_per_panel", "delta"});
    WeylSection c;
    const std::string w = "weyl";
    c.n_max = get_int(s, w, "n_max", c.n_max);
    c.max_radius = get_positive(s, w, "max_radius", c.max_radius);
    c.ladder_first = get_int(s, w, "ladder_first", c.ladder_first);
    c.ladder_last = get_int(s, w, "ladder_last", c.ladder_last);
    if (c.ladder_first < 0 || c.ladder_last < c.ladder_first)
        throw ConfigError("keys 'weyl.ladder_first' and 'weyl.ladder_last' must satisfy 0 <= first <= last");
    c.nodes_per_panel = get_int(s, w, "nodes_per_panel", c.nodes_per_panel);
    if (c.nodes_per_panel < 1) throw ConfigError("key 'weyl.nodes_per_panel' must be at least 1");
    c.delta = get_positive(s, w, "delta", c.delta);
    return c;
}

OutputConfig parse_output(const json& s) {
    reject_unknown(s, "output", {"directory", "prefix"});
    OutputConfig o;
    o.directory = get_string(s, "output", "directory", o.directory.string());
    o.prefix = get_string(s, "output", "prefix", o.prefix);
    return o;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(root, "", {"command", "domain", "eta", "numerics", "weyl", "output", "seed"});

    RunConfig cfg;
    if (root.contains("command")) cfg.command = get_string(root, "", "command", "");
    if (root.contains("domain")) cfg.domain = parse_domain(section(root, "domain"));
    if (root.contains("eta")) cfg.eta = parse_eta(section(root, "eta"));
    if (root.contains("numerics")) cfg.numerics = parse_numerics(section(root, "numerics"));
    if (root.contains("weyl")) cfg.weyl = parse_weyl(section(root, "weyl"));
    if (root.contains("output")) cfg.output = parse_output(section(root, "output"));
    if (root.contains("seed")) {
        const json& v = root.at("seed");
        if (!v.is_number_unsigned()) throw ConfigError("key 'seed' must be a non-negative integer");
        cfg.seed = v.get<std::uint64_t>();
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

EtaProfile make_eta(const EtaConfig& eta) {
    if (eta.profile == EtaConfig::Profile::constant) return EtaProfile::constant(eta.value);
    return EtaProfile::fourier(eta.a0, eta.cos_coeffs, eta.sin_coeffs);
}

ConformalMap make_map(const DomainConfig& domain) {
    try {
        switch (domain.family) {
            case MapFamily::identity: return ConformalMap::identity();
            case MapFamily::quadratic: return ConformalMap::quadratic(domain.a);
            case MapFamily::moebius: return ConformalMap::moebius(domain.phi, domain.b);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("domain parameters rejected: ") + e.what());
    }
    throw ConfigError("unknown map family");
}

BoundarySpec make_spec(const RunConfig& config) {
    return make_map(config.domain).boundary(make_eta(config.eta));
}

}  // namespace diracspec::harness
