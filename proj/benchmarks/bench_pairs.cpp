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

#include "dyckcluster/compat.hpp"

namespace dc = dyckcluster;

template <dc::PairStrategy Strategy>
static void BM_CompatiblePairs(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  dc::FamilyContext ctx(r, static_cast<int>(state.range(1)));
  dc::StepWord host = dc::build_family_path(ctx, dc::Family::C);
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = 0;
    dc::for_each_compatible_pair(host, r, Strategy, [&](const dc::EdgeSet&, const dc::EdgeSet&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["pairs"] = static_cast<double>(count);
}
BENCHMARK_TEMPLATE(BM_CompatiblePairs, dc::PairStrategy::BruteForce)
    ->Args({2, 6})
    ->Args({3, 5})
    ->Args({2, 7})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_CompatiblePairs, dc::PairStrategy::Pruned)
    ->Args({2, 6})
    ->Args({3, 5})
    ->Args({2, 7})
    ->Args({4, 5})
    ->Unit(benchmark::kMillisecond);

static void BM_IsCompatible(benchmark::State& state) {
  dc::FamilyContext ctx(3, 6);
  dc::StepWord host = dc::build_family_path(ctx, dc::Family::C);
  dc::EdgePair pair(host, 3);
  for (std::size_t i = 1; i <= pair.s1.universe(); i += 3) pair.s1.insert(i);
  for (auto _ : state) benchmark::DoNotOptimize(dc::is_compatible(pair));
}
BENCHMARK(BM_IsCompatible);

BENCHMARK_MAIN();
