#include <benchmark/benchmark.h>

#include "dmk/content.hpp"
#include "dmk/search.hpp"

namespace {

using namespace dmk;

void BM_rref(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix rng(42);
    DenseMatrix m(101, n, n);
    for (auto& x : m.a) x = static_cast<uint32_t>(rng.below(101));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(32)->Arg(64)->Arg(128);

void BM_ideal_product(benchmark::State& state) {
    RingPtr R = build_ring(101, {3, 4}, 120);
    SplitMix rng(7);
    std::vector<TruncatedSeries> ga, gb;
    for (int i = 0; i < 3; ++i) {
        ga.push_back(random_elem(R, rng, -1));
        gb.push_back(random_elem(R, rng, -1));
    }
    IdealVS a = ideal_span(R, ga), b = ideal_span(R, gb);
    for (auto _ : state) benchmark::DoNotOptimize(ideal_product(a, b));
}
BENCHMARK(BM_ideal_product);

void BM_dm_k_witness(benchmark::State& state) {
    RingPtr R = build_ring(101, {3, 4}, 120);
    SeriesPoly g = poly_make<TruncatedSeries>(
        R, {series_monomial(R, 7), series_monomial(R, 6), series_monomial(R, 8)});
    SplitMix rng(11);
    SeriesPoly f = random_poly<TruncatedSeries>(R, rng, 6, -1);
    for (auto _ : state) benchmark::DoNotOptimize(dm_k_witness(f, g));
}
BENCHMARK(BM_dm_k_witness);

void BM_series_mul(benchmark::State& state) {
    RingPtr R = build_ring(101, {5, 6}, static_cast<int>(state.range(0)));
    SplitMix rng(3);
    TruncatedSeries a = random_elem(R, rng, -1), b = random_elem(R, rng, -1);
    for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_series_mul)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
