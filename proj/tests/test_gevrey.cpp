#include "doctest.h"

#include <cmath>
#include <random>

#include "germsum/gevrey.hpp"
#include "germsum/series_expr.hpp"
#include "germsum/tauberian.hpp"
#include "test_util.hpp"

using namespace germsum;

namespace {

MultiSeries expr(const std::string& text, int dim, int cap) {
    return compile_poly_expr(text, dim, cap).series;
}

MultiSeries euler_xy(int cap) { return euler_compose(Germ(expr("x1*x2", 2, cap), true)); }

/// Truncation of 1/(1 - x1 - x2): coefficient of x1^i x2^j is binom(i+j, i).
MultiSeries binomial_series(int cap) {
    MultiSeries s(2, cap);
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i + j),
                         static_cast<unsigned long>(i));
            s.insert_term(Exponent{i, j}, GaussRational(Rational(b)));
        }
    return s;
}

MultiSeries diag_geometric(int cap) {
    MultiSeries s(2, cap);
    for (int n = 0; 2 * n <= cap; ++n) s.insert_term(Exponent{n, n}, GaussRational(1));
    return s;
}

/// One-variable Stirling-style oracle: fit log((m-1)!) against 1, m and
/// log m! directly on the ray data, without the series machinery.
double euler_ray_oracle_s(int m_max) {
    double sxx[3][3] = {};
    double sxy[3] = {};
    for (int m = 5; m <= m_max; ++m) {
        const double row[3] = {1.0, 2.0 * m, std::lgamma(m + 1.0)};
        const double y = std::lgamma(static_cast<double>(m));
        for (int i = 0; i < 3; ++i) {
            sxy[i] += row[i] * y;
            for (int j = 0; j < 3; ++j) sxx[i][j] += row[i] * row[j];
        }
    }
    // Solve the 3x3 normal equations by Gaussian elimination.
    double a[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] = sxx[i][j];
        a[i][3] = sxy[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int j = col; j < 4; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return a[2][3] / a[2][2];
}

}  // namespace

TEST_CASE("monomial fit recovers order 1 for the Euler series") {
    MultiSeries e = euler_xy(60);
    GevreyFit fit = fit_monomial_gevrey(e, Exponent{1, 1}, {10, 60});
    CHECK(fit.s > 0.9);
    CHECK(fit.s < 1.1);

    const double oracle = euler_ray_oracle_s(30);
    CHECK(std::fabs(fit.s - oracle) < 1e-9);
}

TEST_CASE("monomial fit sees convergent series as order 0") {
    GevreyFit fit = fit_monomial_gevrey(binomial_series(40), Exponent{1, 1}, {10, 40});
    CHECK(std::fabs(fit.s) < 0.1);

    GevreyFit geo = fit_monomial_gevrey(diag_geometric(40), Exponent{1, 1}, {10, 40});
    CHECK(std::fabs(geo.s) < 0.1);
}

TEST_CASE("monomial fit errors") {
    CHECK_THROWS_AS(fit_monomial_gevrey(MultiSeries::zero(2, 40), Exponent{1, 1}, {10, 40}),
                    domain_error);
    CHECK_THROWS_AS(fit_monomial_gevrey(euler_xy(20), Exponent{1, 0}, {0, 20}), domain_error);
}

TEST_CASE("scale equivariance of the monomial fit") {
    std::mt19937 rng(550);
    MultiSeries e = euler_xy(40);
    GevreyFit base = fit_monomial_gevrey(e, Exponent{1, 1}, {8, 40});
    for (int it = 0; it < 5; ++it) {
        GaussRational c = testutil::random_coeff(rng);
        while (c.is_zero()) c = testutil::random_coeff(rng);
        GevreyFit scaled = fit_monomial_gevrey(c * e, Exponent{1, 1}, {8, 40});
        CHECK(std::fabs(scaled.s - base.s) < 1e-9);
        CHECK(std::fabs((scaled.logC - base.logC) - log_abs(c)) < 1e-6);
    }
}

TEST_CASE("power consistency s(N alpha) = N s(alpha)") {
    MultiSeries e = euler_xy(60);
    GevreyFit f1 = fit_monomial_gevrey(e, Exponent{1, 1}, {10, 60});
    for (int n = 1; n <= 3; ++n) {
        GevreyFit fn = fit_monomial_gevrey(e, Exponent{n, n}, {10, 60});
        CHECK(std::fabs(fn.s - n * f1.s) <= 0.15);
    }
}

TEST_CASE("component fit on the Euler decomposition") {
    MultiSeries e = euler_xy(60);
    Decomposition dec = t_alpha(e, Exponent{1, 1}, 31);
    GevreyFit fit = fit_component_gevrey(dec, 0.5, {3, 30});
    CHECK(std::fabs(fit.s - 1.0) < 0.1);

    Decomposition dg = t_alpha(diag_geometric(60), Exponent{1, 1}, 31);
    GevreyFit gfit = fit_component_gevrey(dg, 0.5, {3, 30});
    CHECK(std::fabs(gfit.s) < 0.1);

    Decomposition single = t_alpha(expr("1 + x1", 2, 10), Exponent{1, 1}, 1);
    CHECK_THROWS_AS(fit_component_gevrey(single, 0.5, {0, 0}), domain_error);
}

TEST_CASE("pullback monotonicity of component growth") {
    // E(x1 x2) is 1-Gevrey w.r.t. alpha' = (1,1); regrouping along
    // alpha = (2,1) must stay below max_j(alpha_j / alpha'_j) * s + slack.
    MultiSeries e = euler_xy(60);
    GevreyFit base = fit_monomial_gevrey(e, Exponent{1, 1}, {10, 60});
    Decomposition dec = t_alpha(e, Exponent{2, 1}, 20);
    GevreyFit pulled = fit_component_gevrey(dec, 0.5, {2, 15});
    CHECK(pulled.s <= 2.0 * base.s + 0.15);
}

TEST_CASE("radius estimate") {
    GrowthVerdict geo = radius_estimate(diag_geometric(40));
    CHECK(geo.kind == GrowthKind::Convergent);
    REQUIRE(geo.radius_estimate.has_value());
    CHECK(*geo.radius_estimate > 0.8);
    CHECK(*geo.radius_estimate < 1.2);

    GrowthVerdict e1 = radius_estimate(euler_series(1, 40, 0));
    CHECK(e1.kind == GrowthKind::DivergentGevrey);
    CHECK(e1.s > 0.7);
    CHECK(e1.s < 1.3);

    GrowthVerdict poly = radius_estimate(expr("1 + x1 + x1^3", 1, 30));
    CHECK(poly.kind == GrowthKind::Inconclusive);

    GrowthVerdict zero = radius_estimate(MultiSeries::zero(2, 30));
    CHECK(zero.kind == GrowthKind::Convergent);

    // Permutation invariance.
    MultiSeries f = binomial_series(30);
    MultiSeries g(2, 30);
    for (const auto& [exp, c] : f.terms()) g.insert_term(Exponent{exp[1], exp[0]}, c);
    GrowthVerdict vf = radius_estimate(f), vg = radius_estimate(g);
    CHECK(vf.kind == vg.kind);
    REQUIRE(vf.radius_estimate.has_value());
    REQUIRE(vg.radius_estimate.has_value());
    CHECK(*vf.radius_estimate == doctest::Approx(*vg.radius_estimate));
}

TEST_CASE("split infeasibility of the Euler product") {
    const int cap = 60;
    MultiSeries prod = euler_series(2, cap, 0) * euler_series(2, cap, 1);
    SplitReport rep = split_infeasibility(prod, {1, 30});
    CHECK(!rep.feasible);

    MultiSeries sum = euler_series(2, cap, 0) + euler_series(2, cap, 1);
    SplitReport srep = split_infeasibility(sum, {1, 30});
    CHECK(srep.feasible);

    SplitReport crep = split_infeasibility(diag_geometric(cap), {1, 30});
    CHECK(crep.feasible);

    // Boundary family: a diagonal of exactly k! * rho^k is the geometric
    // envelope the split bound allows, so it stays feasible.
    MultiSeries edge(2, cap);
    Rational kfact(1);
    for (int k = 0; 2 * k <= cap; ++k) {
        if (k > 0) kfact *= k;
        Rational c = kfact / Rational(mpz_class(1) << k);
        c.canonicalize();
        edge.insert_term(Exponent{k, k}, GaussRational(c));
    }
    CHECK(split_infeasibility(edge, {1, 30}).feasible);

    CHECK_THROWS_AS(split_infeasibility(prod, {1, 4}), domain_error);
    CHECK_THROWS_AS(split_infeasibility(expr("x1", 1, 10), {1, 8}), dimension_error);
}

TEST_CASE("factorial interchange limit") {
    for (int k = 1; k <= 3; ++k) {
        const double limit = factorial_interchange_limit(k);
        const double far = factorial_interchange_term(4000, k);
        const double farther = factorial_interchange_term(8000, k);
        CHECK(std::fabs(far - limit) < 1e-3);
        CHECK(std::fabs(farther - limit) < std::fabs(far - limit) + 1e-12);
    }
}

TEST_CASE("tauberian verdict single couple reports the fitted order") {
    MultiSeries e = euler_xy(60);
    TauberianReport rep = tauberian_verdict(e, {Couple(Exponent{1, 1}, 1)}, {10, 60});
    CHECK(rep.outcome == TauberianReport::Outcome::GrowthReport);
    CHECK(rep.fits.front().s > 0.9);
    CHECK(rep.fits.front().s < 1.1);
    CHECK(rep.implication.find("divergent") != std::string::npos);
}

TEST_CASE("tauberian verdict demonstrates the contrapositive") {
    MultiSeries e = euler_xy(60);
    std::vector<Couple> couples = {Couple(Exponent{1, 1}, 1), Couple(Exponent{1, 2}, 1)};
    TauberianReport rep = tauberian_verdict(e, couples, {10, 60});
    CHECK(rep.pairwise_inequivalent);
    CHECK(rep.outcome == TauberianReport::Outcome::Contradiction);
    CHECK(rep.implication.find("forces") != std::string::npos);

    TauberianReport conv = tauberian_verdict(binomial_series(40), couples, {10, 40});
    CHECK(conv.outcome == TauberianReport::Outcome::ForcedConvergent);

    std::vector<Couple> equiv = {Couple(Exponent{1, 1}, 2), Couple(Exponent{2, 2}, 1)};
    TauberianReport eq = tauberian_verdict(e, equiv, {10, 60});
    CHECK(eq.outcome == TauberianReport::Outcome::EquivalentCouples);
}
