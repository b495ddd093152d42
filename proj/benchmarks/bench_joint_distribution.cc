#include <benchmark/benchmark.h>

#include "homlab/joint_distribution.h"
#include "homlab/states.h"

namespace {

void BM_JointFsPureCoherent(benchmark::State &state) {
    const auto source = homlab::coherent(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(homlab::joint_fs_pure(3, source, homlab::kBalanced));
    }
}
BENCHMARK(BM_JointFsPureCoherent)->Arg(1)->Arg(2)->Arg(4);

void BM_JointPureMixedThermal(benchmark::State &state) {
    const auto psi = homlab::odd_cat(1.5);
    const auto rho = homlab::thermal(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(homlab::joint_pure_mixed(psi, rho, homlab::kBalanced));
    }
}
BENCHMARK(BM_JointPureMixedThermal)->Arg(1)->Arg(3);

}  // namespace
