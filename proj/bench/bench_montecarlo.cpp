// OpenMP kernels against the serial reference on the null calibration and
// power workloads.

#include <benchmark/benchmark.h>

#include "spms/montecarlo.hpp"

namespace {

void BM_CalibrateSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto row = spms::serial::calibrate(n, 20000, {0.05}, 1);
        benchmark::DoNotOptimize(row.rejections);
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_CalibrateSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CalibrateParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const spms::RunOptions opts{static_cast<int>(state.range(1))};
    for (auto _ : state) {
        auto row = spms::calibrate(n, 20000, {0.05}, 1, opts);
        benchmark::DoNotOptimize(row.rejections);
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_CalibrateParallel)
    ->ArgsProduct({{100, 1000}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

const std::vector<spms::TestName> tests(spms::all_tests.begin(), spms::all_tests.end());

void BM_PowerSerial(benchmark::State& state) {
    for (auto _ : state) {
        auto cell = spms::serial::power_study(spms::AlternativeSpec::beta(2, 1), 100, 5000, 0.05, tests, 1,
                                              spms::CriticalMode::asymptotic, 0);
        benchmark::DoNotOptimize(cell.powers);
    }
    state.SetItemsProcessed(state.iterations() * 5000);
}
BENCHMARK(BM_PowerSerial)->Unit(benchmark::kMillisecond);

void BM_PowerParallel(benchmark::State& state) {
    spms::PowerOptions opts;
    opts.run.threads = static_cast<int>(state.range(0));
    opts.mode = spms::CriticalMode::asymptotic;
    for (auto _ : state) {
        auto cell = spms::power_study(spms::AlternativeSpec::beta(2, 1), 100, 5000, 0.05, tests, 1, opts);
        benchmark::DoNotOptimize(cell.powers);
    }
    state.SetItemsProcessed(state.iterations() * 5000);
}
BENCHMARK(BM_PowerParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
