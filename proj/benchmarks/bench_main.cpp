#include <benchmark/benchmark.h>

#include <random>

#include "germsum/borel.hpp"
#include "germsum/decompose.hpp"
#include "germsum/geometry.hpp"
#include "germsum/gevrey.hpp"
#include "germsum/series_expr.hpp"

using namespace germsum;

namespace {

MultiSeries random_series(std::mt19937& rng, int dim, int cap, int count) {
    MultiSeries s(dim, cap);
    std::uniform_int_distribution<int> deg(0, cap);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int t = 0; t < count; ++t) {
        Exponent e(dim);
        int remaining = deg(rng);
        for (int j = 0; j < dim && remaining > 0; ++j) {
            std::uniform_int_distribution<int> part(0, remaining);
            e[j] = part(rng);
            remaining -= e[j];
        }
        Rational re(num(rng), den(rng));
        re.canonicalize();
        s.add_term(e, GaussRational(re));
    }
    return s;
}

void BM_SeriesMul(benchmark::State& state) {
    std::mt19937 rng(1);
    const int cap = static_cast<int>(state.range(0));
    MultiSeries a = random_series(rng, 3, cap, 60);
    MultiSeries b = random_series(rng, 3, cap, 60);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(10)->Arg(20)->Arg(30);

void BM_EulerCompose(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    Germ p(compile_poly_expr("x1*x2 + x1^3", 2, cap).series, true);
    for (auto _ : state) benchmark::DoNotOptimize(euler_compose(p));
}
BENCHMARK(BM_EulerCompose)->Arg(12)->Arg(20)->Arg(28);

void BM_TAlpha(benchmark::State& state) {
    std::mt19937 rng(2);
    MultiSeries f = random_series(rng, 3, 30, 400);
    const Exponent alpha{1, 1, 0};
    for (auto _ : state) benchmark::DoNotOptimize(t_alpha(f, alpha, 16));
}
BENCHMARK(BM_TAlpha);

void BM_WeierstrassDivide(benchmark::State& state) {
    std::mt19937 rng(3);
    const int cap = static_cast<int>(state.range(0));
    MultiSeries g = random_series(rng, 2, cap, 60);
    Germ p(compile_poly_expr("x1*x2 + x1^3 + x2^4", 2, cap).series, true);
    LinearForm ell = LinearForm::positional(2, cap);
    for (auto _ : state) benchmark::DoNotOptimize(weierstrass_divide(g, p, ell));
}
BENCHMARK(BM_WeierstrassDivide)->Arg(12)->Arg(20);

void BM_OrderCouples(benchmark::State& state) {
    std::vector<Couple> cs = {Couple(Exponent{1, 3}, 1), Couple(Exponent{2, 1}, 1),
                              Couple(Exponent{0, 2}, Rational(1, 2)), Couple(Exponent{3, 1}, 2)};
    for (auto _ : state) benchmark::DoNotOptimize(order_couples(cs));
}
BENCHMARK(BM_OrderCouples);

void BM_MonomialFit(benchmark::State& state) {
    MultiSeries e = euler_compose(Germ(compile_poly_expr("x1*x2", 2, 60).series, true));
    for (auto _ : state) benchmark::DoNotOptimize(fit_monomial_gevrey(e, Exponent{1, 1}, {10, 60}));
}
BENCHMARK(BM_MonomialFit);

void BM_LaplaceSum(benchmark::State& state) {
    ContinuationHandle g = ContinuationHandle::closed_form("log1p");
    const std::vector<std::complex<double>> xs = {{0.1, 0.0}};
    for (auto _ : state) benchmark::DoNotOptimize(laplace_sum(g, Rational(1), 0.0, xs));
}
BENCHMARK(BM_LaplaceSum);

}  // namespace

BENCHMARK_MAIN();
