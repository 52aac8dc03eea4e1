#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "germsum/borel.hpp"
#include "germsum/series_expr.hpp"

using namespace germsum;

namespace {

/// Independent oracle for the Euler sum: the integration-by-parts form
/// int_0^inf e^{-xi/t} / (1 + xi) dxi, by tanh-sinh quadrature split at
/// the kernel scale. Distinct integrand, distinct quadrature.
double euler_oracle(double t) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [&](double xi) { return std::exp(-xi / t) / (1.0 + xi); };
    double total = 0.0;
    double lo = 0.0;
    for (int p = 0; p < 80; ++p) {
        const double hi = lo + std::max(t, 1e-3);
        const double piece = integrator.integrate(f, lo, hi);
        total += piece;
        if (std::fabs(piece) < 1e-18 * std::fabs(total)) break;
        lo = hi;
    }
    return total;
}

}  // namespace

TEST_CASE("formal Borel transform of the Euler series is log(1+xi)") {
    OneVarSeries e = OneVarSeries::euler(12);
    BorelSeries g = formal_borel(e, Rational(1));
    REQUIRE(g.exact.size() == 13);
    for (int n = 0; n + 1 <= 12; ++n) {
        REQUIRE(g.exact[static_cast<size_t>(n) + 1].has_value());
        // Coefficient of xi^{n+1} in log(1+xi): (-1)^n / (n+1).
        Rational expect(n % 2 == 0 ? 1 : -1, n + 1);
        expect.canonicalize();
        CHECK(*g.exact[static_cast<size_t>(n) + 1] == GaussRational(expect));
    }
}

TEST_CASE("formal Borel fixes constants and maps the geometric to exp") {
    OneVarSeries c;
    c.coeffs = {GaussRational(Rational(7, 3))};
    BorelSeries g = formal_borel(c, Rational(2));
    CHECK(*g.exact[0] == GaussRational(Rational(7, 3)));

    OneVarSeries geo = OneVarSeries::geometric(10);
    BorelSeries ge = formal_borel(geo, Rational(1));
    for (int n = 0; n <= 10; ++n) {
        Rational expect(1);
        expect /= factorial(static_cast<unsigned long>(n));
        CHECK(*ge.exact[static_cast<size_t>(n)] == GaussRational(expect));
    }

    // Non-integer n/k: float path against lgamma.
    OneVarSeries ones = OneVarSeries::geometric(6);
    BorelSeries h = formal_borel(ones, Rational(2));
    CHECK(!h.exact[1].has_value());
    CHECK(h.coeffs[1].real() == doctest::Approx(1.0 / std::tgamma(1.5)));
}

TEST_CASE("Laplace sum of log1p matches the independent Euler oracle") {
    ContinuationHandle g = ContinuationHandle::closed_form("log1p");
    std::vector<std::complex<double>> xs = {{0.05, 0.0}, {0.1, 0.0}, {0.2, 0.0}};
    SummationReport rep = laplace_sum(g, Rational(1), 0.0, xs);
    REQUIRE(rep.samples.size() == 3);
    for (const auto& s : rep.samples) {
        const double oracle = euler_oracle(s.x.real());
        CHECK(std::fabs(s.value.real() - oracle) < 1e-8);
        CHECK(std::fabs(s.value.imag()) < 1e-10);
    }

    // Values approach the leading coefficient (0 for the Euler series) as
    // x -> 0 along the direction.
    SummationReport tiny = laplace_sum(g, Rational(1), 0.0, {std::complex<double>(1e-3, 0.0)});
    CHECK(std::abs(tiny.samples[0].value) < 2e-3);
}

TEST_CASE("Laplace sum along theta = pi avoids the geometric pole") {
    ContinuationHandle g = ContinuationHandle::closed_form("geometric");
    SummationReport rep =
        laplace_sum(g, Rational(1), M_PI, {std::complex<double>(-0.1, 0.0)});
    CHECK(std::isfinite(rep.samples[0].value.real()));
    CHECK(std::isfinite(rep.samples[0].value.imag()));
}

TEST_CASE("Laplace sum of exp reproduces the convergent geometric series") {
    ContinuationHandle g = ContinuationHandle::closed_form("exp");
    for (double x : {0.05, 0.1, 0.2}) {
        SummationReport rep = laplace_sum(g, Rational(1), 0.0, {std::complex<double>(x, 0.0)});
        CHECK(std::fabs(rep.samples[0].value.real() - 1.0 / (1.0 - x)) < 1e-8);
    }
}

TEST_CASE("Laplace sum is linear") {
    ContinuationHandle g1 = ContinuationHandle::closed_form("log1p");
    ContinuationHandle g2 = ContinuationHandle::closed_form("exp");
    ContinuationHandle combo;
    combo.kind = ContinuationHandle::Kind::ClosedForm;
    combo.name = "combo";
    combo.eval = [](std::complex<double> xi) {
        return 2.0 * std::log(1.0 + xi) - 0.5 * std::exp(xi);
    };
    const std::complex<double> x(0.1, 0.0);
    auto v = [&](const ContinuationHandle& h) {
        return laplace_sum(h, Rational(1), 0.0, {x}).samples[0];
    };
    const auto sc = v(combo);
    const auto s1 = v(g1);
    const auto s2 = v(g2);
    CHECK(std::abs(sc.value - (2.0 * s1.value - 0.5 * s2.value)) <
          1e-9 + sc.est_error + 2.0 * s1.est_error + 0.5 * s2.est_error);
}

TEST_CASE("Laplace sum enforces the sector condition") {
    ContinuationHandle g = ContinuationHandle::closed_form("log1p");
    CHECK_THROWS_AS(laplace_sum(g, Rational(1), 0.0, {std::complex<double>(0.0, 0.1)}),
                    domain_error);
    CHECK_THROWS_AS(laplace_sum(g, Rational(1), 0.0, {std::complex<double>(0.0, 0.0)}),
                    domain_error);
}

TEST_CASE("optimal truncation of the Euler series") {
    OneVarSeries e = OneVarSeries::euler(60);
    ContinuationHandle g = ContinuationHandle::closed_form("log1p");
    for (double t : {0.05, 0.1, 0.2}) {
        TruncationResult tr = optimal_truncation(e, {t, 0.0});
        SummationReport rep = laplace_sum(g, Rational(1), 0.0, {std::complex<double>(t, 0.0)});
        const double gap = std::abs(tr.value - rep.samples[0].value);
        CHECK(gap <= tr.est_error + rep.samples[0].est_error);
    }
    // Scale of the optimum near t = 0.1: first omitted term ~ 10! 1e-11.
    TruncationResult t01 = optimal_truncation(e, {0.1, 0.0});
    CHECK(t01.est_error < 1e-3);
    CHECK(t01.est_error > 1e-8);
}

TEST_CASE("optimal truncation edge cases") {
    OneVarSeries geo = OneVarSeries::geometric(40);
    TruncationResult half = optimal_truncation(geo, {0.5, 0.0});
    CHECK(half.terms_used == 41);
    CHECK(std::fabs(half.value.real() - 2.0) < 2 * half.est_error + 1e-9);

    TruncationResult zero = optimal_truncation(geo, {0.0, 0.0});
    CHECK(zero.value.real() == doctest::Approx(1.0));
    CHECK(zero.est_error == 0.0);

    OneVarSeries fg = OneVarSeries::factorial_geometric(30);
    CHECK_THROWS_AS(optimal_truncation(fg, {2.0, 0.0}), domain_error);
}

TEST_CASE("Euler ODE residual is small") {
    std::vector<double> ts;
    for (double t = 0.01; t <= 0.2 + 1e-12; t += 0.01) ts.push_back(t);
    OdeResidualReport rep = euler_ode_residual(ts);
    CHECK(rep.max_residual < 1e-6);
}

TEST_CASE("Pade handle continues the geometric Borel transform") {
    OneVarSeries fg = OneVarSeries::factorial_geometric(16);
    BorelSeries g = formal_borel(fg, Rational(1));  // coefficients of 1/(1-xi)
    ContinuationHandle pade = ContinuationHandle::pade(g, 7, 7);
    for (double xi : {0.3, 2.0, -1.5}) {
        CHECK(std::abs(pade.eval({xi, 0.0}) - 1.0 / (1.0 - xi)) < 1e-8);
    }
    // The pole diagnostic finds the singularity at xi = 1.
    bool found = false;
    for (const auto& p : pade.poles) found = found || std::abs(p - 1.0) < 1e-6;
    CHECK(found);
}

TEST_CASE("remainder certificate for the Euler sum") {
    const int cap = 30;
    MultiSeries e = euler_compose(Germ(compile_poly_expr("x1*x2", 2, cap).series, true));
    Germ p(compile_poly_expr("x1*x2", 2, cap).series, true);
    Decomposition dec = t_p_ell(e, p, LinearForm::positional(2, cap), 13);

    std::vector<std::vector<std::complex<double>>> pts;
    std::vector<std::complex<double>> values;
    ContinuationHandle g = ContinuationHandle::closed_form("log1p");
    for (double t : {1e-3, 3e-3, 1e-2, 3e-2, 1e-1}) {
        pts.push_back({std::complex<double>(t, 0.0), std::complex<double>(1.0, 0.0)});
        values.push_back(
            laplace_sum(g, Rational(1), 0.0, {std::complex<double>(t, 0.0)}).samples[0].value);
    }

    RemainderReport ok = remainder_check(values, dec, pts, 1.0, {3, 12});
    CHECK(ok.certified);
    CHECK(ok.residual < 0.5);

    RemainderReport bad = remainder_check(values, dec, pts, 0.0, {3, 12});
    CHECK(!bad.certified);

    CHECK_THROWS_AS(remainder_check({}, dec, {}, 1.0, {3, 12}), domain_error);
}

TEST_CASE("Vandermonde bound") {
    CHECK(vandermonde_bound(0.0, M_PI, 1.0, 1) == doctest::Approx(1.0));

    // Brute force: random degree-(M-1) polynomials bounded on the arc have
    // coefficients bounded by C_V * K.
    const int m = 3;
    const double rho = 1.0;
    const double cv = vandermonde_bound(0.0, M_PI, rho, m);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        std::vector<std::complex<double>> coef(m);
        for (auto& c : coef) c = {uni(rng), uni(rng)};
        // Sup over the arc, sampled densely.
        double sup = 0.0;
        for (int s = 0; s <= 720; ++s) {
            const double phi = M_PI * s / 720.0;
            std::complex<double> t = std::polar(rho, phi), acc = 0.0, pw = 1.0;
            for (int i = 0; i < m; ++i) {
                acc += coef[static_cast<size_t>(i)] * pw;
                pw *= t;
            }
            sup = std::max(sup, std::abs(acc));
        }
        for (const auto& c : coef) CHECK(std::abs(c) <= cv * sup * (1.0 + 1e-9));
    }

    // Doubling the radius changes the constant consistently: the bound at
    // radius 2 rho still covers coefficients of polynomials bounded there.
    const double cv2 = vandermonde_bound(0.0, M_PI, 2.0, m);
    CHECK(cv2 > 0.0);
    CHECK(std::isfinite(cv2));
}
