// Copyright 2026 The gemkit Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "gemkit/amplitude.hpp"
#include "gemkit/batch.hpp"
#include "gemkit/generator.hpp"

namespace {

using gemkit::ColoredGraph;

// A connected p = 3 graph: 12 edges, 3^12 assignments over Z_3.
gemkit::FaceSystem p3_system() {
  return gemkit::face_system(gemkit::sample_vacuum_graph(3, 3, 4));
}

void BM_CountSolutionsSerial(benchmark::State& state) {
  const auto system = p3_system();
  const int modulus = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gemkit::count_solutions_serial(system, modulus));
  }
}
BENCHMARK(BM_CountSolutionsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CountSolutionsParallel(benchmark::State& state) {
  const auto system = p3_system();
  const int modulus = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gemkit::count_solutions(system, modulus));
  }
}
BENCHMARK(BM_CountSolutionsParallel)
    ->Arg(2)
    ->Arg(3)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_RankModPrime(benchmark::State& state) {
  const auto system = p3_system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gemkit::rank_mod_prime(system, 3));
  }
}
BENCHMARK(BM_RankModPrime);

std::vector<ColoredGraph> sample_batch(int count) {
  std::vector<ColoredGraph> graphs;
  graphs.reserve(count);
  for (int s = 0; s < count; ++s) {
    graphs.push_back(gemkit::sample_vacuum_graph(6, 3, s));
  }
  return graphs;
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto graphs = sample_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gemkit::classify_batch_serial(graphs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassifySerial)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ClassifyParallel(benchmark::State& state) {
  const auto graphs = sample_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gemkit::classify_batch(graphs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassifyParallel)
    ->Arg(2000)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_EnumerateSerial(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gemkit::collect_vacuum_graphs_serial(p, 3, {true, true}));
  }
}
BENCHMARK(BM_EnumerateSerial)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gemkit::collect_vacuum_graphs(p, 3, {true, true}));
  }
}
BENCHMARK(BM_EnumerateParallel)
    ->Arg(3)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
