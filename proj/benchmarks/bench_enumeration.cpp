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

#include "dyckcluster/coloring.hpp"

namespace dc = dyckcluster;

static void BM_ForEachCollection(benchmark::State& state) {
  dc::FamilyContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = 0;
    dc::for_each_collection(ctx, dc::Framework::Simplified, [&](const dc::ColoredCollection&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["collections"] = static_cast<double>(count);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}
BENCHMARK(BM_ForEachCollection)->Args({2, 8})->Args({3, 5})->Args({4, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_LeeSchifflerCollections(benchmark::State& state) {
  dc::FamilyContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    dc::for_each_collection(ctx, dc::Framework::LeeSchiffler, [&](const dc::ColoredCollection&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_LeeSchifflerCollections)->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_FamilyContext(benchmark::State& state) {
  for (auto _ : state) {
    dc::FamilyContext ctx(3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ctx.edge_count());
  }
}
BENCHMARK(BM_FamilyContext)->DenseRange(6, 14, 4);

BENCHMARK_MAIN();
