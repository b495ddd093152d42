#include <benchmark/benchmark.h>

#include "homlab/nodal.h"

namespace {

void BM_BfsZeros(benchmark::State &state) {
    const int m_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(homlab::bfs_zeros(3, homlab::BigRational(3, 4), m_max));
    }
}
BENCHMARK(BM_BfsZeros)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SearchParametric(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(homlab::search_parametric(2, homlab::BigRational(1, 2), 2, -10, 10));
    }
}
BENCHMARK(BM_SearchParametric)->Unit(benchmark::kMillisecond);

}  // namespace
