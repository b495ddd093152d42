#include <benchmark/benchmark.h>

#include "homlab/beam_splitter.h"

namespace {

void BM_GPolyExact(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto bs = homlab::BeamSplitterSetting::exact(homlab::BigRational(3, 4));
    for (auto _ : state) {
        for (int m = 0; m < 64; ++m) {
            benchmark::DoNotOptimize(homlab::g_poly(m + n, 2 * m + n, n, bs));
        }
    }
}
BENCHMARK(BM_GPolyExact)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_GPolyAngle(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto bs = homlab::BeamSplitterSetting::angle(0.9);
    for (auto _ : state) {
        for (int m = 0; m < 64; ++m) {
            benchmark::DoNotOptimize(homlab::g_poly(m + n, 2 * m + n, n, bs));
        }
    }
}
BENCHMARK(BM_GPolyAngle)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
