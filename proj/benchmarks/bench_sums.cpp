// Copyright 2026 The zetasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "zetasum/doublesums.hpp"
#include "zetasum/kernel/double_double.hpp"
#include "zetasum/kernel/oracle.hpp"
#include "zetasum/phases.hpp"

using namespace zetasum;

static void BM_SingleSumF1(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const SumSpec spec{PhaseKind::F1, 0.5, static_cast<double>(n), 1, n, false};
  for (auto _ : state) benchmark::DoNotOptimize(phases::single_sum(spec));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SingleSumF1)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_SingleSumOracle(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const SumSpec spec{PhaseKind::F1, 0.5, static_cast<double>(n), 1, n, false};
  for (auto _ : state) benchmark::DoNotOptimize(kernel::oracle_recompute(spec));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SingleSumOracle)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_BuildPrefix(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phases::build_prefix(0.5, static_cast<double>(n), false, 2 * n));
  state.SetItemsProcessed(state.iterations() * 2 * n);
}
BENCHMARK(BM_BuildPrefix)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_MordellTornheim(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const auto strategy = static_cast<doublesums::Strategy>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(doublesums::mordell_tornheim_sum(-0.7, 0.3, 1.0, t, strategy));
}
BENCHMARK(BM_MordellTornheim)
    ->Args({1000, static_cast<int>(doublesums::Strategy::BruteForce)})
    ->Args({1000, static_cast<int>(doublesums::Strategy::Correlation)})
    ->Args({100000, static_cast<int>(doublesums::Strategy::Correlation)})
    ->Unit(benchmark::kMillisecond);

static void BM_TailDoubleSum(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(doublesums::tail_double_sum(0.5, t));
}
BENCHMARK(BM_TailDoubleSum)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_DoubleDoubleOps(benchmark::State& state) {
  kernel::DoubleDouble x(1.0000001);
  const kernel::DoubleDouble y(0.9999999);
  for (auto _ : state) {
    x = x * y + kernel::DoubleDouble(1e-9);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_DoubleDoubleOps);

static void BM_DoubleDoubleSincos(benchmark::State& state) {
  const kernel::DoubleDouble a = kernel::phase_dd(PhaseKind::F1, 1e6, 12345);
  kernel::DoubleDouble s;
  kernel::DoubleDouble c;
  for (auto _ : state) {
    kernel::sincos(a, s, c);
    benchmark::DoNotOptimize(s);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_DoubleDoubleSincos);

BENCHMARK_MAIN();
