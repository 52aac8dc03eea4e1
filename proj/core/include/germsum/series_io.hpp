#pragma once

#include <string>

#include "germsum/mseries.hpp"

namespace germsum {

class parse_error : public error {
public:
    using error::error;
};

/// Series text format used by the CLI:
///   { "dim": d, "cap": N,
///     "terms": [ { "exp": [b1,...,bd], "re": "p/q", "im": "p/q" }, ... ] }
/// Rationals are decimal-free "p/q" strings; zero terms are forbidden and
/// exponents must be unique. Emission is canonical and byte-stable: terms
/// ordered lexicographically by exponent, rationals always "p/q".
MultiSeries parse_series_json(const std::string& text);
std::string series_to_json(const MultiSeries& s, int indent = -1);

MultiSeries load_series_file(const std::string& path);
void save_series_file(const MultiSeries& s, const std::string& path);

}  // namespace germsum
