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

#include "dyckcluster/expansion.hpp"

#include "dyckcluster/compat.hpp"

namespace dyckcluster {

namespace {

void require_expandable(const FamilyContext& ctx, const Limits& limits) {
  if (ctx.n() < 4) throw InvalidArgument("expansions need n >= 4");
  auto expected = expected_collection_count(ctx.r(), ctx.n());
  if (!expected || *expected > limits.max_objects) {
    throw GuardExceeded("expansion for r=" + std::to_string(ctx.r()) + ", n=" + std::to_string(ctx.n()) +
                        " sums more than " + std::to_string(limits.max_objects) + " terms");
  }
}

}  // namespace

const char* to_string(Direction direction) { return direction == Direction::Forward ? "forward" : "backward"; }

std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> collection_histogram(const FamilyContext& ctx,
                                                                                   const Limits& limits) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> out;
  for_each_collection(
      ctx, Framework::Simplified,
      [&](const ColoredCollection& beta) {
        CollectionStats s = collection_stats(beta);
        ++out[{s.corners, s.edges}];
      },
      limits);
  return out;
}

std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> pair_histogram(const FamilyContext& ctx,
                                                                             const Limits& limits) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> out;
  auto covered_total = static_cast<std::int64_t>(ctx.edge_count());
  for_each_compatible_pair(
      build_family_path(ctx, Family::C), ctx.r(), PairStrategy::Pruned,
      [&](const EdgeSet& s1, const EdgeSet& s2) {
        ++out[{static_cast<std::int64_t>(s2.size()), covered_total - static_cast<std::int64_t>(s1.size())}];
      },
      limits);
  return out;
}

LaurentPoly expansion_classical(const FamilyContext& ctx, ExpansionFormula formula, Direction direction,
                                const Limits& limits) {
  require_expandable(ctx, limits);
  auto hist = formula == ExpansionFormula::Subpaths ? collection_histogram(ctx, limits) : pair_histogram(ctx, limits);
  int n = ctx.n();
  std::int64_t r = ctx.r();
  std::int64_t c1 = ctx.c(n - 1);
  std::int64_t c2 = ctx.c(n - 2);
  LaurentPoly out(2);
  for (const auto& [stats, count] : hist) {
    auto [b1, b2] = stats;
    std::int64_t e1 = checked::sub(checked::mul(r, b1), c1);
    std::int64_t e2 = checked::sub(checked::mul(r, c1 - b2), c2);
    out.add_term(Exponents{e1, e2, 0, 0}, count);
  }
  return direction == Direction::Forward ? out : out.swap_variables(0, 1);
}

LaurentPoly expansion_with_coefficients(const FamilyContext& ctx, Direction direction, const Limits& limits) {
  require_expandable(ctx, limits);
  auto hist = collection_histogram(ctx, limits);
  int n = ctx.n();
  std::int64_t r = ctx.r();
  std::int64_t c1 = ctx.c(n - 1);
  std::int64_t c2 = ctx.c(n - 2);
  LaurentPoly out(4);
  for (const auto& [stats, count] : hist) {
    auto [b1, b2] = stats;
    std::int64_t e1 = checked::sub(checked::mul(r, b1), c1);
    std::int64_t e2 = checked::sub(checked::mul(r, c1 - b2), c2);
    if (direction == Direction::Forward) {
      out.add_term(Exponents{e1, e2, b2, b1}, count);
    } else {
      out.add_term(Exponents{e2, e1, -b1, -b2}, count);
    }
  }
  return out;
}

}  // namespace dyckcluster
