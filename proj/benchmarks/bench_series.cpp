#include <benchmark/benchmark.h>

#include <random>

#include "wlin/series.hpp"

using namespace wlin;

namespace {

TruncatedSeries dense_series(const SeriesContext& ctx, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    TruncatedSeries f(ctx);
    const std::size_t n = ctx.dimension();
    std::vector<std::uint32_t> e(n, 0);
    // Every monomial below the cutoff with a nonzero random coefficient.
    std::function<void(std::size_t, long)> walk = [&](std::size_t pos, long budget) {
        if (pos == n) {
            f.add_term(MultiIndex(e), Rational(coeff(gen)));
            return;
        }
        for (e[pos] = 0; static_cast<long>(e[pos]) * ctx.weights()[pos] <= budget; ++e[pos])
            walk(pos + 1, budget - static_cast<long>(e[pos]) * ctx.weights()[pos]);
        e[pos] = 0;
    };
    walk(0, ctx.cutoff());
    return f;
}

void BM_series_mul(benchmark::State& state) {
    const SeriesContext ctx(Weighting({1, 2, 3}), state.range(0));
    const auto f = dense_series(ctx, 1);
    const auto g = dense_series(ctx, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_series_mul)->Arg(6)->Arg(10)->Arg(14);

void BM_series_compose(benchmark::State& state) {
    const SeriesContext ctx(Weighting({1, 2}), state.range(0));
    const auto f = dense_series(ctx, 3);
    SeriesTuple phi = identity_tuple(ctx);
    phi[0] += dense_series(ctx, 4).graded_part(2);
    phi[1] += dense_series(ctx, 5).graded_part(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(f, phi));
    }
}
BENCHMARK(BM_series_compose)->Arg(6)->Arg(10)->Arg(14);

void BM_series_reciprocal(benchmark::State& state) {
    const SeriesContext ctx(Weighting({1, 2}), state.range(0));
    auto f = dense_series(ctx, 6);
    f.add_term(MultiIndex::zero(2), Rational(1));
    if (f.constant_term().is_zero()) f.add_term(MultiIndex::zero(2), Rational(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.reciprocal());
    }
}
BENCHMARK(BM_series_reciprocal)->Arg(8)->Arg(12);

}  // namespace
