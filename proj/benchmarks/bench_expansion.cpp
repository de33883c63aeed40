// Copyright 2026 The dyckcluster Authors.
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

#include "dyckcluster/expansion.hpp"
#include "dyckcluster/quantum.hpp"

namespace dc = dyckcluster;

static void BM_ClusterRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dc::cluster_recurrence(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClusterRecurrence)->DenseRange(4, 7, 1);

static void BM_ExpansionSubpaths(benchmark::State& state) {
  dc::FamilyContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dc::expansion_classical(ctx, dc::ExpansionFormula::Subpaths, dc::Direction::Forward));
  }
}
BENCHMARK(BM_ExpansionSubpaths)->Args({3, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_QuantumExpansion(benchmark::State& state) {
  dc::FamilyContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dc::quantum_expansion(ctx, dc::Direction::Forward));
}
BENCHMARK(BM_QuantumExpansion)->Args({2, 7})->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_WqAllpairs(benchmark::State& state) {
  dc::FamilyContext ctx(3, static_cast<int>(state.range(0)));
  auto word = dc::pair_word(dc::EdgePair(dc::build_family_path(ctx, dc::Family::C), 3));
  for (auto _ : state) benchmark::DoNotOptimize(dc::wq_allpairs(word, 3));
}
BENCHMARK(BM_WqAllpairs)->DenseRange(5, 8, 1);

BENCHMARK_MAIN();
