#include <benchmark/benchmark.h>

#include "wlin/linearize.hpp"
#include "wlin/spectral.hpp"

using namespace wlin;

namespace {

VectorField quadratic_example(const SeriesContext& ctx) {
    SeriesTuple comps;
    TruncatedSeries f1 = TruncatedSeries::coordinate(ctx, 0);
    f1.add_term(MultiIndex({0, 2}), Rational(1));
    comps.push_back(std::move(f1));
    comps.push_back(TruncatedSeries::coordinate(ctx, 1).scaled(Rational(2)));
    return VectorField(ctx, std::move(comps));
}

void BM_moser_linearize(benchmark::State& state) {
    const SeriesContext ctx(Weighting({1, 2}), state.range(0));
    const auto X = quadratic_example(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(moser_linearize(X, ctx.cutoff()));
    }
}
BENCHMARK(BM_moser_linearize)->Arg(6)->Arg(10)->Arg(14);

void BM_iterative_oracle(benchmark::State& state) {
    const SeriesContext ctx(Weighting({1, 2}), state.range(0));
    const auto X = quadratic_example(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterative_linearize_oracle(X, ctx.cutoff()));
    }
}
BENCHMARK(BM_iterative_oracle)->Arg(6)->Arg(10);

void BM_adjoint_matrix(benchmark::State& state) {
    const SeriesContext ctx(Weighting({1, 2, 2, 3, 3}), 8);
    const auto E = euler_field(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(adjoint_matrix(E, state.range(0)));
    }
}
BENCHMARK(BM_adjoint_matrix)->Arg(2)->Arg(4)->Arg(6);

void BM_resonance_enumeration(benchmark::State& state) {
    const Weighting w({1, 2, 2, 3, 3});
    const std::vector<Rational> lambda = {Rational(1), Rational(2), Rational(2), Rational(3),
                                          Rational(3)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_resonances(lambda, w, state.range(0)));
    }
}
BENCHMARK(BM_resonance_enumeration)->Arg(6)->Arg(12);

}  // namespace
