#include "doctest.h"

#include <random>
#include <thread>

#include "germsum/mseries.hpp"
#include "germsum/series_expr.hpp"
#include "test_util.hpp"

using namespace germsum;
using testutil::random_series;

namespace {

MultiSeries expr(const std::string& text, int dim, int cap) {
    return compile_poly_expr(text, dim, cap).series;
}

/// Independent oracle for products of one-variable series placed on two
/// axes: plain coefficient convolution on dense vectors.
std::vector<Rational> euler_1d_coeffs(int cap) {
    std::vector<Rational> c(static_cast<size_t>(cap) + 1, Rational(0));
    Rational nfact(1);
    for (int n = 0; n + 1 <= cap; ++n) {
        if (n > 0) nfact *= n;
        c[static_cast<size_t>(n) + 1] = (n % 2 == 0) ? nfact : -nfact;
    }
    return c;
}

}  // namespace

TEST_CASE("addition basics") {
    MultiSeries x1 = expr("x1", 2, 6);
    CHECK((x1 + (-x1)).is_zero());

    MultiSeries a = expr("1 + x1*x2", 2, 6);
    MultiSeries b = expr("x1*x2", 2, 6);
    CHECK(a + b == expr("1 + 2*x1*x2", 2, 6));

    Germ p(expr("x1*x2", 2, 12), true);
    MultiSeries e = euler_compose(p);
    CHECK((e + (-e)).is_zero());
}

TEST_CASE("multiplication basics and caps") {
    CHECK(expr("(1+x1)*(1-x1)", 1, 4) == expr("1 - x1^2", 1, 4));

    MultiSeries u = expr("2 + x1", 2, 5);
    MultiSeries v = expr("3 + x2", 2, 5);
    CHECK((u * v).constant_term() == GaussRational(6));

    MultiSeries a(2, 5), b(2, 3);
    a.insert_term(Exponent{1, 0}, GaussRational(1));
    b.insert_term(Exponent{0, 1}, GaussRational(1));
    CHECK((a * b).cap() == 3);
    CHECK_THROWS_AS(a * MultiSeries::zero(3, 5), dimension_error);
}

TEST_CASE("Euler product diagonal against dense convolution") {
    const int cap = 16;
    MultiSeries e1 = euler_series(2, cap, 0);
    MultiSeries e2 = euler_series(2, cap, 1);
    MultiSeries prod = e1 * e2;

    const auto c = euler_1d_coeffs(cap);
    for (int k = 1; 2 * k <= cap; ++k) {
        // Convolution oracle: coefficient of x1^k x2^k is c_k * c_k.
        CHECK(prod.coeff(Exponent{k, k}) == GaussRational(c[static_cast<size_t>(k)] *
                                                          c[static_cast<size_t>(k)]));
    }
    // k = 3 gives ((k-1)!)^2 = 4.
    CHECK(prod.coeff(Exponent{3, 3}) == GaussRational(4));
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 40; ++it) {
        const int dim = 1 + static_cast<int>(rng() % 3);
        MultiSeries a = random_series(rng, dim, 8, 6, true);
        MultiSeries b = random_series(rng, dim, 8, 6, true);
        MultiSeries c = random_series(rng, dim, 8, 6, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("derive") {
    CHECK(expr("x1^2*x2", 2, 6).derive(0) == expr("2*x1*x2", 2, 5));
    CHECK(expr("x1^2", 2, 6).derive(1).is_zero());

    MultiSeries e = euler_compose(Germ(expr("x1*x2", 2, 10), true));
    CHECK(e.derive(0).coeff(Exponent{0, 1}) == GaussRational(1));
    CHECK_THROWS_AS(expr("x1", 2, 6).derive(2), domain_error);
}

TEST_CASE("substitute") {
    // Ramification x1 -> x1^2.
    MultiSeries f = expr("x1*x2", 2, 8);
    std::vector<MultiSeries> ram = {expr("x1^2", 2, 8), expr("x2", 2, 8)};
    CHECK(f.substitute(ram) == expr("x1^2*x2", 2, 8));

    // Chart b_0: x1 -> x2, x2 -> x1*x2.
    std::vector<MultiSeries> b0 = {expr("x2", 2, 8), expr("x1*x2", 2, 8)};
    CHECK(f.substitute(b0) == expr("x1*x2^2", 2, 8));

    // Identity rules.
    std::vector<MultiSeries> id = {expr("x1", 1, 8)};
    CHECK(expr("x1", 1, 8).substitute(id) == expr("x1", 1, 8));

    // Unit constant rejected without certification.
    std::vector<MultiSeries> bad = {expr("1 + x1", 1, 8)};
    CHECK_THROWS_AS(expr("x1", 1, 8).substitute(bad), domain_error);
    CHECK_NOTHROW(expr("x1", 1, 8).substitute(bad, true));
}

TEST_CASE("substitute is a ring morphism") {
    std::mt19937 rng(777);
    for (int it = 0; it < 25; ++it) {
        MultiSeries a = random_series(rng, 2, 7, 5);
        MultiSeries b = random_series(rng, 2, 7, 5);
        // Zero-constant random rules.
        MultiSeries r1 = random_series(rng, 2, 7, 4);
        MultiSeries r2 = random_series(rng, 2, 7, 4);
        r1 = r1 - MultiSeries::constant(2, 7, r1.constant_term());
        r2 = r2 - MultiSeries::constant(2, 7, r2.constant_term());
        std::vector<MultiSeries> rules = {r1, r2};
        CHECK((a * b).substitute(rules) == a.substitute(rules) * b.substitute(rules));
        CHECK((a + b).substitute(rules) == a.substitute(rules) + b.substitute(rules));
    }
}

TEST_CASE("invert_unit") {
    CHECK(expr("1 - x1", 1, 3).invert_unit() == expr("1 + x1 + x1^2 + x1^3", 1, 3));
    CHECK(expr("2", 1, 3).invert_unit() == expr("1/2", 1, 3));

    MultiSeries u = expr("1 + x1*x2", 2, 9);
    CHECK(u.invert_unit() * u == MultiSeries::constant(2, 9, GaussRational(1)));
    CHECK_THROWS_AS(expr("x1", 1, 3).invert_unit(), domain_error);

    std::mt19937 rng(4242);
    for (int it = 0; it < 20; ++it) {
        MultiSeries v = random_series(rng, 2, 6, 5, true);
        MultiSeries unit = v - MultiSeries::constant(2, 6, v.constant_term()) +
                           MultiSeries::constant(2, 6, GaussRational(Rational(3, 2)));
        CHECK(unit.invert_unit() * unit == MultiSeries::constant(2, 6, GaussRational(1)));
    }
}

TEST_CASE("divide_by_monomial") {
    CHECK(expr("x1^2*x2", 2, 6).divide_by_monomial(Exponent{1, 0}) == expr("x1*x2", 2, 6));

    MultiSeries e = euler_compose(Germ(expr("x1*x2", 2, 12), true));
    MultiSeries shifted = e.divide_by_monomial(Exponent{1, 1});
    // E(x1x2)/(x1x2) = sum (-1)^n n! (x1x2)^n.
    CHECK(shifted.coeff(Exponent{0, 0}) == GaussRational(1));
    CHECK(shifted.coeff(Exponent{3, 3}) == GaussRational(-6));

    CHECK_THROWS_AS(expr("x1", 2, 6).divide_by_monomial(Exponent{0, 1}), domain_error);

    std::mt19937 rng(99);
    for (int it = 0; it < 20; ++it) {
        MultiSeries f = random_series(rng, 2, 8, 6);
        Exponent g{1, 2};
        CHECK(f.mul_monomial(g).divide_by_monomial(g).truncated(8) == f);
    }
}

TEST_CASE("shared immutable values are usable from many threads") {
    const MultiSeries a = expr("1 + x1*x2 + x2^2", 2, 14);
    const MultiSeries b = euler_compose(Germ(expr("x1*x2", 2, 14), true));
    const MultiSeries expected = a * b;

    std::vector<std::thread> pool;
    std::vector<MultiSeries> results(8, MultiSeries::zero(2, 14));
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { results[static_cast<size_t>(t)] = a * b; });
    for (auto& th : pool) th.join();
    for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("euler_compose") {
    MultiSeries e = euler_compose(Germ(expr("x1", 1, 6), true));
    CHECK(e == expr("x1 - x1^2 + 2*x1^3 - 6*x1^4 + 24*x1^5 - 120*x1^6", 1, 6));

    MultiSeries em = euler_compose(Germ(expr("x1*x2", 2, 10), true));
    CHECK(em.coeff(Exponent{3, 3}) == GaussRational(2));

    MultiSeries es = euler_compose(Germ(expr("x1 + x2", 2, 6), true));
    CHECK(es.coeff(Exponent{1, 1}) == GaussRational(-2));

    // Coefficients of E(x^alpha) vanish off the ray {n*alpha : n >= 1}.
    MultiSeries ray = euler_compose(Germ(expr("x1^2*x2", 2, 12), true));
    for (const auto& [exp, c] : ray.terms()) {
        CHECK(exp[0] % 2 == 0);
        CHECK(exp[0] == 2 * exp[1]);
    }
}
