#include "doctest.h"

#include <random>

#include "germsum/config.hpp"
#include "germsum/series_expr.hpp"
#include "germsum/series_io.hpp"
#include "test_util.hpp"

using namespace germsum;

TEST_CASE("series JSON round trip is byte stable") {
    std::mt19937 rng(808);
    for (int it = 0; it < 50; ++it) {
        MultiSeries s = testutil::random_series(rng, 1 + static_cast<int>(rng() % 3), 9, 7, true);
        const std::string once = series_to_json(s);
        MultiSeries back = parse_series_json(once);
        CHECK(back == s);
        CHECK(back.cap() == s.cap());
        CHECK(series_to_json(back) == once);
    }
}

TEST_CASE("series JSON rejects malformed input") {
    CHECK_THROWS_AS(parse_series_json("{"), parse_error);
    CHECK_THROWS_AS(parse_series_json(R"({"cap": 3})"), parse_error);
    CHECK_THROWS_AS(
        parse_series_json(R"({"dim":1,"cap":3,"terms":[{"exp":[0],"re":"0/1","im":"0/1"}]})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_series_json(R"({"dim":1,"cap":3,"terms":[{"exp":[9],"re":"1/1","im":"0/1"}]})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_series_json(
            R"({"dim":1,"cap":3,"terms":[{"exp":[1],"re":"1/1"},{"exp":[1],"re":"2/1"}]})"),
        error);
    CHECK_THROWS_AS(parse_series_json(R"({"dim":1,"cap":3,"terms":[{"exp":[1],"re":"0.5"}]})"),
                    error);
}

TEST_CASE("expression grammar") {
    CHECK(compile_poly_expr("x1*x2 + x1^3", 2, 8).series ==
          compile_poly_expr("x1^3 + x2*x1", 2, 8).series);
    CHECK(compile_poly_expr("-3/2*x1 + 1", 1, 4).series.coeff(Exponent{1}) ==
          GaussRational(Rational(-3, 2)));
    CHECK(compile_poly_expr("(1+x1)^2", 1, 4).series ==
          compile_poly_expr("1 + 2*x1 + x1^2", 1, 4).series);
    CHECK(compile_poly_expr("(1+x1)^5", 1, 3).complete() == false);
    CHECK(compile_poly_expr("x1^2", 1, 8).complete());

    CHECK_THROWS_AS(compile_poly_expr("x3", 2, 4), parse_error);
    CHECK_THROWS_AS(compile_poly_expr("x1 +", 2, 4), parse_error);
    CHECK_THROWS_AS(compile_poly_expr("x1 x2", 2, 4), parse_error);
}

TEST_CASE("config parsing and validation") {
    Config cfg = parse_config(
        "# comment\n"
        "default_cap = 30\n"
        "fit_window = 5:40\n"
        "s_tol = 0.2\n"
        "residual_tol = 0.7\n"
        "quadrature_tol = 1e-9\n");
    CHECK(cfg.default_cap == 30);
    CHECK(cfg.fit_window.lo == 5);
    CHECK(cfg.fit_window.hi == 40);
    CHECK(cfg.thresholds.s_tol == doctest::Approx(0.2));
    CHECK(cfg.quadrature_tol == doctest::Approx(1e-9));

    CHECK(cfg.window_for(20).hi == 20);
    CHECK(parse_config("").window_for(60).lo == 10);

    CHECK_THROWS_AS(parse_config("default_cap = 0\n"), domain_error);
    CHECK_THROWS_AS(parse_config("float_precision_bits = 128\n"), domain_error);
    CHECK_THROWS_AS(parse_config("mystery = 1\n"), error);
    CHECK_THROWS_AS(parse_config("just some text\n"), error);
}
