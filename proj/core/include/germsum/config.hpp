#pragma once

#include <string>

#include "germsum/gevrey.hpp"

namespace germsum {

/// Tool configuration. Loadable from a key=value file ('#' comments,
/// blank lines ignored) and overridable by command-line flags.
struct Config {
    int default_cap = 20;
    int float_precision_bits = 64;   // 64 = double; validated, larger values rejected
    Window fit_window{10, -1};       // hi = -1 means "up to the cap"
    VerdictThresholds thresholds{};  // s_tol, residual_tol
    double quadrature_tol = 1e-10;

    /// Concrete fit window for a series truncated at `cap`.
    Window window_for(int cap) const;

    void validate() const;
};

Config load_config_file(const std::string& path);
Config parse_config(const std::string& text);

}  // namespace germsum
