// Copyright 2026 The uniwkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <complex>

#include "uniwkb/airy.hpp"
#include "uniwkb/diagnostics.hpp"
#include "uniwkb/log_derivative.hpp"
#include "uniwkb/spectrum.hpp"
#include "uniwkb/wavefunction.hpp"

namespace {

void BM_AiryEval(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(uniwkb::airy_eval(a));
}
BENCHMARK(BM_AiryEval)->Arg(-40)->Arg(-4)->Arg(2)->Arg(30)->Arg(200);

void BM_MixtureKernels(benchmark::State& state) {
  const uniwkb::complex t(0.0, 1.0);
  double a = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniwkb::mixture_kernels(a, t));
    a = a > 6.0 ? -6.0 : a + 0.013;
  }
}
BENCHMARK(BM_MixtureKernels);

void BM_EvalY(benchmark::State& state) {
  const uniwkb::PowerLawProblem p(4.0, 1);
  const double e = 7.1;
  const auto tp = uniwkb::turning_points(p, e);
  const double q = state.range(0) == 0 ? 0.5 * (tp.q_minus + tp.q_plus) : 2.5 * tp.q_plus;
  const uniwkb::complex t = state.range(0) == 0 ? uniwkb::complex(0.0, 1.0) : 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(uniwkb::eval_Y(p, e, q, t));
}
BENCHMARK(BM_EvalY)->Arg(0)->Arg(1);

void BM_PhaseIntegral(benchmark::State& state) {
  const uniwkb::PowerLawProblem p(4.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(uniwkb::phase_integral(p, 20.0));
}
BENCHMARK(BM_PhaseIntegral);

void BM_SolveLevel(benchmark::State& state) {
  const uniwkb::PowerLawProblem p(static_cast<double>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(uniwkb::solve_level(p, 2));
}
BENCHMARK(BM_SolveLevel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SampleGrid(benchmark::State& state) {
  const auto st = uniwkb::normalize(uniwkb::solve_level(uniwkb::PowerLawProblem(2.0, 2), 2));
  std::vector<double> grid(state.range(0));
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 7.0 * (i + 1.0) / grid.size();
  for (auto _ : state) benchmark::DoNotOptimize(uniwkb::sample_grid(st, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleGrid)->Arg(100)->Arg(1000);

void BM_Table1Row(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(uniwkb::table1_row(4.0, 2, 2));
}
BENCHMARK(BM_Table1Row)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
