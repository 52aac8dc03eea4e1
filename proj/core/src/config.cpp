#include "germsum/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace germsum {

Window Config::window_for(int cap) const {
    Window w = fit_window;
    if (w.hi < 0 || w.hi > cap) w.hi = cap;
    w.lo = std::min(w.lo, std::max(0, w.hi - 2));
    return w;
}

void Config::validate() const {
    if (default_cap < 1) throw domain_error("config: default_cap must be positive");
    if (float_precision_bits != 64)
        throw domain_error("config: only float_precision_bits = 64 is supported by this build");
    if (thresholds.s_tol <= 0 || thresholds.residual_tol <= 0)
        throw domain_error("config: verdict thresholds must be positive");
    if (quadrature_tol <= 0) throw domain_error("config: quadrature_tol must be positive");
    if (fit_window.lo < 0) throw domain_error("config: fit window start must be >= 0");
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw error("config line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "default_cap") {
                cfg.default_cap = std::stoi(value);
            } else if (key == "float_precision_bits") {
                cfg.float_precision_bits = std::stoi(value);
            } else if (key == "fit_window") {
                const auto colon = value.find(':');
                if (colon == std::string::npos) throw error("expected a:b");
                cfg.fit_window.lo = std::stoi(value.substr(0, colon));
                cfg.fit_window.hi = std::stoi(value.substr(colon + 1));
            } else if (key == "s_tol") {
                cfg.thresholds.s_tol = std::stod(value);
            } else if (key == "residual_tol") {
                cfg.thresholds.residual_tol = std::stod(value);
            } else if (key == "quadrature_tol") {
                cfg.quadrature_tol = std::stod(value);
            } else {
                throw error("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw error("config line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    cfg.validate();
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace germsum
