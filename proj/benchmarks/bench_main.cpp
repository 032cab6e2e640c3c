/*
 * Copyright 2026 The brauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "brauer/verify.hpp"

using namespace brauer;

static void BuildE(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BrauerDiagram d(3, 3, {{1, 5}, {2, 4}, {3, 6}});
  for (auto _ : state) benchmark::DoNotOptimize(build_E(d, n));
  state.SetComplexityN(n);
}
BENCHMARK(BuildE)->DenseRange(2, 8, 2)->Complexity();

static void BuildF(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BrauerDiagram d(3, 3, {{1, 2}, {3, 4}, {5, 6}});
  for (auto _ : state) benchmark::DoNotOptimize(build_F(d, n));
}
BENCHMARK(BuildF)->DenseRange(2, 8, 2);

static void BuildH(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ds = enumerate_grood(3, 3, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_H(ds.front(), n));
}
BENCHMARK(BuildH)->DenseRange(2, 6, 2);

static void SpanningSetSO(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spanning_set(GroupKind::SO, 3, order, order));
}
BENCHMARK(SpanningSetSO)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void TensorPowerApply(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto g = sample(GroupKind::O, 4, 1u).matrix();
  const Eigen::VectorXd x = Eigen::VectorXd::Random(static_cast<Eigen::Index>(ipow(4, k)));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_power_apply(g, k, x));
  state.SetComplexityN(static_cast<std::int64_t>(ipow(4, k)) * k);
}
BENCHMARK(TensorPowerApply)->DenseRange(1, 6)->Complexity(benchmark::oN);

static void CheckEquivariance(benchmark::State& state) {
  const auto set = spanning_set(GroupKind::O, 3, 3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_equivariance(set.elements[7].matrix, GroupKind::O, 3, 3, 3, 20, 1e-9, 1));
}
BENCHMARK(CheckEquivariance)->Unit(benchmark::kMillisecond);

static void SpanRank(benchmark::State& state) {
  const auto set = spanning_set(GroupKind::O, 2, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(span_rank(set));
}
BENCHMARK(SpanRank)->Unit(benchmark::kMillisecond);

static void ExactRank(benchmark::State& state) {
  const auto set = spanning_set(GroupKind::O, 2, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(set));
}
BENCHMARK(ExactRank)->Unit(benchmark::kMillisecond);

// Reduced against unreduced constraint system, O(3) with l+k = 4 and 6.
static void Oracle(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  OracleOptions opt;
  opt.symmetry_reduction = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_dimension(GroupKind::O, 3, order, order, opt));
}
BENCHMARK(Oracle)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
