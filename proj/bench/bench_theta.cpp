#include <benchmark/benchmark.h>

#include "siegel/lattice.hpp"

namespace {

siegel::EvenLattice e8() {
    // Cartan matrix of E8 in the bourbaki ordering used by data/e8.json
    std::vector<int64_t> g = {
        2, 0, -1, 0, 0, 0, 0, 0,  //
        0, 2, 0, -1, 0, 0, 0, 0,  //
        -1, 0, 2, -1, 0, 0, 0, 0, //
        0, -1, -1, 2, -1, 0, 0, 0, //
        0, 0, 0, -1, 2, -1, 0, 0, //
        0, 0, 0, 0, -1, 2, -1, 0, //
        0, 0, 0, 0, 0, -1, 2, -1, //
        0, 0, 0, 0, 0, 0, -1, 2,
    };
    return siegel::make_even_lattice("e8", 8, std::move(g));
}

siegel::EvenLattice e8e8() {
    auto base = e8();
    std::vector<int64_t> g(16 * 16, 0);
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                g[static_cast<size_t>(8 * b + i) * 16 + (8 * b + j)] = base.at(i, j);
    return siegel::make_even_lattice("e8e8", 16, std::move(g));
}

void bm_short_vectors_serial(benchmark::State& state) {
    auto l = e8();
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel::short_vectors_serial(l, state.range(0)));
}

void bm_short_vectors_parallel(benchmark::State& state) {
    auto l = e8();
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel::short_vectors(l, state.range(0)));
}

void bm_theta_e8_deg2_serial(benchmark::State& state) {
    auto l = e8();
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel::theta_series_serial(l, 2, state.range(0)));
}

void bm_theta_e8_deg2_parallel(benchmark::State& state) {
    auto l = e8();
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel::theta_series(l, 2, state.range(0)));
}

void bm_theta_rank16_deg2_serial(benchmark::State& state) {
    auto l = e8e8();
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel::theta_series_serial(l, 2, 1));
}

void bm_theta_rank16_deg2_parallel(benchmark::State& state) {
    auto l = e8e8();
    for (auto _ : state)
        benchmark::DoNotOptimize(siegel::theta_series(l, 2, 1));
}

} // namespace

BENCHMARK(bm_short_vectors_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_short_vectors_parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_theta_e8_deg2_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_theta_e8_deg2_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_theta_rank16_deg2_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_theta_rank16_deg2_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
