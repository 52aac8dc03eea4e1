#include "germsum/series_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace germsum {

using nlohmann::json;
using nlohmann::ordered_json;

MultiSeries parse_series_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed series file: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw parse_error("series document must be a JSON object");
        const int dim = doc.at("dim").get<int>();
        const int cap = doc.at("cap").get<int>();
        MultiSeries s(dim, cap);
        if (doc.contains("terms")) {
            for (const auto& t : doc.at("terms")) {
                Exponent exp(t.at("exp").get<std::vector<int>>());
                Rational re = parse_rational(t.at("re").get<std::string>());
                Rational im = t.contains("im") ? parse_rational(t.at("im").get<std::string>())
                                               : Rational(0);
                GaussRational c(re, im);
                if (c.is_zero())
                    throw parse_error("zero coefficient stored at exponent " + exp.to_string());
                if (exp.total_degree() > cap)
                    throw parse_error("exponent " + exp.to_string() + " exceeds cap " +
                                      std::to_string(cap));
                s.insert_term(exp, c);
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed series document: ") + e.what());
    }
}

std::string series_to_json(const MultiSeries& s, int indent) {
    ordered_json doc;
    doc["dim"] = s.dim();
    doc["cap"] = s.cap();
    doc["terms"] = ordered_json::array();
    for (const auto& [exp, c] : s.terms()) {
        ordered_json t;
        t["exp"] = exp.e;
        t["re"] = format_rational(c.re);
        t["im"] = format_rational(c.im);
        doc["terms"].push_back(std::move(t));
    }
    return doc.dump(indent);
}

MultiSeries load_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open series file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series_json(buf.str());
}

void save_series_file(const MultiSeries& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write series file: " + path);
    out << series_to_json(s, 2) << "\n";
}

}  // namespace germsum
