#include "morikit/chambers.hpp"
#include "morikit/cones.hpp"
#include "morikit/linear_systems.hpp"
#include "morikit/picard.hpp"

#include <benchmark/benchmark.h>

using namespace morikit;

static void BM_DoubleDescriptionNef(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const HCone cone = nef_cone(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_to_v(cone));
    }
}
BENCHMARK(BM_DoubleDescriptionNef)->DenseRange(3, 6);

static void BM_DoubleDescriptionMov(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const HCone cone = mov_cone(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_to_v(cone));
    }
}
BENCHMARK(BM_DoubleDescriptionMov)->DenseRange(3, 6);

static void BM_FanoChamberRays(benchmark::State& state) {
    const HCone cone = fano_chamber(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_to_v(cone));
    }
}
BENCHMARK(BM_FanoChamberRays);

static void BM_NeExtremalRays(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ne_extremal_rays(g));
    }
}
BENCHMARK(BM_NeExtremalRays)->DenseRange(1, 2);

static void BM_SectionSpaceDim(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(section_space_dim_odd(g));
    }
}
BENCHMARK(BM_SectionSpaceDim)->DenseRange(2, 5);

static void BM_HilbertGeneralPath(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const LinearSystem sys = mu_system(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert(sys));
    }
}
BENCHMARK(BM_HilbertGeneralPath)->DenseRange(1, 8);

static void BM_CremonaPushforward(benchmark::State& state) {
    const BlowupModel model = make_model(7, 9);
    const DivisorClass d =
        make_divisor(model, 12345, std::vector<Rational>(9, Rational(-6789)));
    const std::vector<int> base = default_cremona_base(model);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cremona_pushforward(d, base));
    }
}
BENCHMARK(BM_CremonaPushforward);

BENCHMARK_MAIN();
