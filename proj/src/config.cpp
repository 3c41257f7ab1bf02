#include "bicsim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bicsim {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::defaults() {
    Config c;
    c.kv_ = {
        {"model.xi", "1.0"},
        {"model.omega_c", "0.0"},
        {"model.g", "0.1"},
        {"model.Omega", "0.0"},
        {"model.Nc", "2004"},
        {"model.eta", "0"},        // 0 selects five mean level spacings
        {"geometry.x1", "0.0"},
        {"geometry.dx", "2.0"},
        {"geometry.n1", "2.0"},
        {"geometry.n2", "2.0"},
        {"dynamics.tmax", "400"},
        {"dynamics.dt", "0.02"},
        {"dynamics.out_every", "25"},
        {"dynamics.engine", "ed"},
        {"dynamics.initial", "bell-plus"},
    };
    return c;
}

void Config::set(const std::string& key, const std::string& value) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("unknown configuration key: " + key);
    if (trim(value).empty()) throw ConfigError("empty value for configuration key: " + key);
    it->second = trim(value);
}

void Config::set_kv(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must look like key=value, got: " + assignment);
    set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        set(trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

const std::string& Config::get(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("unknown configuration key: " + key);
    return it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("key " + key + ": cannot parse '" + v + "' as a number");
    }
    if (pos != v.size()) throw ConfigError("key " + key + ": trailing junk in '" + v + "'");
    return out;
}

int Config::get_int(const std::string& key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("key " + key + ": expected an integer, got '" + get(key) + "'");
    return i;
}

ModelParams Config::model() const {
    ModelParams p;
    p.xi = get_double("model.xi");
    p.omega_c = get_double("model.omega_c");
    p.g = get_double("model.g");
    p.Omega = get_double("model.Omega");
    p.n_modes = get_int("model.Nc");
    p.eta = get_double("model.eta");
    p.validate();
    return p;
}

Geometry Config::geometry() const {
    const Geometry geom = Geometry::from_dx(get_double("geometry.x1"), get_double("geometry.dx"),
                                            get_double("geometry.n1"), get_double("geometry.n2"));
    geom.validate();
    return geom;
}

std::string Config::resolved_text() const {
    std::ostringstream out;
    for (const auto& [k, v] : kv_) out << k << " = " << v << "\n";
    return out.str();
}

} // namespace bicsim
