#include <benchmark/benchmark.h>

#include <vector>

#include "soliton/periods.hpp"
#include "soliton/theta.hpp"

namespace {

using namespace soliton;

SolitonCurve curve_of_genus(int g) {
    std::vector<double> k;
    for (int i = g; i >= 1; --i) k.push_back(0.6 + 0.4 * i);
    return SolitonCurve(k);
}

void BM_BuildTheta(benchmark::State& state) {
    const SolitonCurve c = curve_of_genus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_theta(c));
}
BENCHMARK(BM_BuildTheta)->DenseRange(1, 8);

void BM_Periods(benchmark::State& state) {
    const SolitonCurve c = curve_of_genus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_periods(c));
}
BENCHMARK(BM_Periods)->DenseRange(2, 8, 2);

void BM_EvalShifted(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const ExponentialSum theta = build_theta(curve_of_genus(g));
    std::vector<double> t(static_cast<std::size_t>(g), 0.3);
    const PhasePoint p(t);
    for (auto _ : state) benchmark::DoNotOptimize(theta.eval_shifted(p));
}
BENCHMARK(BM_EvalShifted)->DenseRange(1, 8);

void BM_SecondLogDerivative(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const ExponentialSum theta = build_theta(curve_of_genus(g));
    const std::vector<double> x = unit_direction(g, 0);
    const std::vector<double> dirs[] = {x, x};
    const PhasePoint p(std::vector<double>(static_cast<std::size_t>(g), 0.3));
    for (auto _ : state) benchmark::DoNotOptimize(log_derivative(theta, dirs, p));
}
BENCHMARK(BM_SecondLogDerivative)->DenseRange(1, 6);

// One 121x121 field grid, the CLI default size.
void BM_FieldGrid(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const SolitonField U(curve_of_genus(g));
    std::vector<double> t(static_cast<std::size_t>(g), 0.0);
    for (auto _ : state) {
        double sum = 0.0;
        for (int i = 0; i < 121; ++i)
            for (int j = 0; j < 121; ++j) {
                t[0] = -3.0 + 0.05 * i;
                if (g > 1) t[1] = -3.0 + 0.05 * j;
                sum += U(PhasePoint(t));
            }
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * 121 * 121);
}
BENCHMARK(BM_FieldGrid)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
