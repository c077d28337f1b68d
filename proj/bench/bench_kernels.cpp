// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to
// compare thread counts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "gcfluct/quadrature.hpp"

using namespace gcfluct;

namespace {

const PointFunction kGaussian = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::exp(-s);
};
const PointFunction kSecondMoment = [](std::span<const double> x) { return x[0] * x[0]; };

const PointSampler kNormal = [](std::mt19937_64& g, std::span<double> out) {
    std::normal_distribution<double> n(0.0, 1.0);
    for (double& v : out) v = n(g);
};

void grid(benchmark::State& state, Execution exec) {
    const int dims = static_cast<int>(state.range(0));
    const int points = static_cast<int>(state.range(1));
    const std::vector<Rule1D> axes(static_cast<std::size_t>(dims), trapezoid_rule(-5.0, 5.0, points));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_grid_ratio(axes, kGaussian, kSecondMoment, exec));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::pow(points, dims)));
}

void monte_carlo(benchmark::State& state, Execution exec) {
    const std::int64_t samples = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(monte_carlo_mean(2, kNormal, kSecondMoment, samples, 42, exec));
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_GridSerial(benchmark::State& s) { grid(s, Execution::Serial); }
void BM_GridParallel(benchmark::State& s) { grid(s, Execution::Parallel); }
void BM_MonteCarloSerial(benchmark::State& s) { monte_carlo(s, Execution::Serial); }
void BM_MonteCarloParallel(benchmark::State& s) { monte_carlo(s, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_GridSerial)->Args({2, 201})->Args({4, 41})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Args({2, 201})->Args({4, 41})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
