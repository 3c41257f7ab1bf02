#pragma once

#include <map>
#include <string>

#include "bicsim/model.hpp"

namespace bicsim {

/// Flat dotted-key configuration with defaults, file loading and command-line
/// overrides. Precedence: --set > file > defaults. Keys are validated against
/// the default set so typos fail loudly.
class Config {
public:
    static Config defaults();

    void load_file(const std::string& path);     // "key = value" lines, '#' comments
    void set(const std::string& key, const std::string& value);
    void set_kv(const std::string& assignment);  // "key=value"

    const std::string& get(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;

    ModelParams model() const;     // resolves and validates model.*
    Geometry geometry() const;     // resolves and validates geometry.*

    // Deterministic "key = value" dump of the resolved configuration.
    std::string resolved_text() const;

private:
    std::map<std::string, std::string> kv_;
};

} // namespace bicsim
