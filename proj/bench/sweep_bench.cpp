// OpenMP kernels vs their serial references. With OMP_NUM_THREADS=1 the two
// should be within noise of each other; the gap at higher thread counts is
// the parallel speedup.

#include <benchmark/benchmark.h>

#include "kstab/p2wb.hpp"
#include "kstab/toric.hpp"

namespace {

kstab::FanPair boundary_p2() {
    return kstab::FanPair({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}},
                          {kstab::Rational(1, 3), kstab::Rational(0), kstab::Rational(1, 5)});
}

void BM_toric_sweep_parallel(benchmark::State& state) {
    const kstab::FanPair fan = boundary_p2();
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kstab::toric_sweep(fan, radius));
}

void BM_toric_sweep_serial(benchmark::State& state) {
    const kstab::FanPair fan = boundary_p2();
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kstab::toric_sweep_serial(fan, radius));
}

void BM_wb_sweep_parallel(benchmark::State& state) {
    const long long max_a = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(kstab::wb_sweep(max_a));
}

void BM_wb_sweep_serial(benchmark::State& state) {
    const long long max_a = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(kstab::wb_sweep_serial(max_a));
}

BENCHMARK(BM_toric_sweep_parallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_toric_sweep_serial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wb_sweep_parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wb_sweep_serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
