#include "germsum/series_expr.hpp"

#include <cctype>

#include "germsum/series_io.hpp"

namespace germsum {
namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int dim;
    int cap;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("expression error at offset " + std::to_string(pos) + ": " + what);
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an unsigned integer");
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 1'000'000) fail("integer literal too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    CompiledExpr parse_base() {
        const char c = peek();
        if (c == '(') {
            ++pos;
            CompiledExpr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'x') {
            ++pos;
            const unsigned idx = parse_uint();
            if (idx < 1 || static_cast<int>(idx) > dim)
                fail("variable x" + std::to_string(idx) + " outside dimension " +
                     std::to_string(dim));
            Exponent e(dim);
            e[static_cast<int>(idx) - 1] = 1;
            return {MultiSeries::monomial(dim, cap, e), 1};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            Rational q = parse_rational(text.substr(start, pos - start));
            return {MultiSeries::constant(dim, cap, GaussRational(q)), 0};
        }
        fail("expected a rational, a variable or '('");
    }

    CompiledExpr parse_factor() {
        CompiledExpr b = parse_base();
        if (eat('^')) {
            const unsigned n = parse_uint();
            return {b.series.pow(static_cast<int>(n)), b.degree_bound * static_cast<int>(n)};
        }
        return b;
    }

    CompiledExpr parse_term() {
        CompiledExpr t = parse_factor();
        while (eat('*')) {
            CompiledExpr f = parse_factor();
            t = {t.series * f.series, t.degree_bound + f.degree_bound};
        }
        return t;
    }

    CompiledExpr parse_expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        CompiledExpr acc = parse_term();
        if (neg) acc.series = -acc.series;
        for (;;) {
            if (eat('+')) {
                CompiledExpr t = parse_term();
                acc = {acc.series + t.series, std::max(acc.degree_bound, t.degree_bound)};
            } else if (eat('-')) {
                CompiledExpr t = parse_term();
                acc = {acc.series - t.series, std::max(acc.degree_bound, t.degree_bound)};
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

CompiledExpr compile_poly_expr(const std::string& text, int dim, int cap) {
    Parser p{text, 0, dim, cap};
    CompiledExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

}  // namespace germsum
