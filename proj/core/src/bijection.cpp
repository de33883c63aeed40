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

#include "dyckcluster/bijection.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "dyckcluster/laurent.hpp"

namespace dyckcluster {

namespace {

constexpr std::size_t kMaxMismatches = 20;

// S1 and S2 of Phi(beta). Horizontal edges of C_n correspond one-to-one to
// the edges of D_n, and vertical edges to the corners v_1 .. v_b.
void phi_sets(const FamilyContext& ctx, const ColoredCollection& beta, EdgeSet& s1, EdgeSet& s2) {
  std::size_t len = ctx.edge_count();
  s1 = EdgeSet(len);
  s2 = EdgeSet(ctx.last_corner());
  std::size_t next = 1;
  for (const Subpath& sp : beta.subpaths) {
    for (; next < sp.first_edge; ++next) s1.insert(next);
    next = sp.last_edge + 1;
    if (sp.is_span()) {
      for (std::size_t s = sp.start + 1; s <= sp.end; ++s) s2.insert(s);
    }
  }
  for (; next <= len; ++next) s1.insert(next);
}

void note(std::vector<std::string>& list, std::string message) {
  if (list.size() < kMaxMismatches) list.push_back(std::move(message));
}

}  // namespace

EdgePair phi_unchecked(const FamilyContext& ctx, const ColoredCollection& beta) {
  EdgeSet s1, s2;
  phi_sets(ctx, beta, s1, s2);
  return EdgePair(build_family_path(ctx, Family::C), ctx.r(), std::move(s1), std::move(s2));
}

EdgePair phi(const FamilyContext& ctx, const ColoredCollection& beta) {
  if (beta.framework != Framework::Simplified) throw InvalidArgument("Phi expects a simplified collection");
  if (auto why = collection_violation(ctx, beta)) throw InvalidArgument("not in F'(D_n): " + *why);
  return phi_unchecked(ctx, beta);
}

ColoredCollection phi_inverse(const FamilyContext& ctx, const EdgePair& pair) {
  if (pair.r != ctx.r() || pair.host != build_family_path(ctx, Family::C)) {
    throw InvalidArgument("pair does not live on C_n for this context");
  }
  if (!is_compatible(pair)) throw InvalidArgument("pair is not compatible");
  std::size_t len = ctx.edge_count();
  std::size_t b = ctx.last_corner();
  std::vector<char> covered(len + 1, 0);
  for (std::size_t s = 1; s <= len; ++s) covered[s] = pair.s1.contains(s) ? 0 : 1;

  std::vector<Subpath> members;
  std::vector<char> in_span(len + 1, 0);
  for (std::size_t j = 1; j <= b;) {
    if (!pair.s2.contains(j)) {
      ++j;
      continue;
    }
    std::size_t i = j - 1;
    std::size_t k = j;
    while (k + 1 <= b && pair.s2.contains(k + 1)) ++k;
    Subpath sp = classify_span(ctx, i, k, Framework::Simplified);
    for (std::size_t e = sp.first_edge; e <= sp.last_edge; ++e) {
      if (!covered[e]) throw InternalInvariantError("span " + to_string(sp) + " covers an edge whose eta is in S1");
      in_span[e] = 1;
    }
    members.push_back(sp);
    j = k + 1;
  }
  for (std::size_t e = 1; e <= len; ++e) {
    if (covered[e] && !in_span[e]) members.push_back(Subpath::single_edge(e));
  }
  std::sort(members.begin(), members.end(),
            [](const Subpath& x, const Subpath& y) { return x.first_edge < y.first_edge; });

  ColoredCollection beta{Framework::Simplified, std::move(members)};
  if (auto why = collection_violation(ctx, beta)) {
    throw InternalInvariantError("reconstruction of a compatible pair left F'(D_n): " + *why);
  }
  if (phi_unchecked(ctx, beta) != pair) throw InternalInvariantError("reconstruction does not map back to the pair");
  return beta;
}

BijectionReport verify_bijection(const FamilyContext& ctx, BijectionMode mode, const Limits& limits) {
  BijectionReport report;
  report.r = ctx.r();
  report.n = ctx.n();
  report.mode = mode;
  report.weight_preserving = true;
  auto len = static_cast<std::int64_t>(ctx.edge_count());

  std::set<std::pair<EdgeSet, EdgeSet>> images;
  std::vector<std::uint64_t> packed;
  bool use_packed = mode == BijectionMode::CountsOnly && ctx.edge_count() + ctx.last_corner() <= 64;
  std::uint64_t collisions_outside_packed = 0;
  EdgeSet s1, s2;
  for_each_collection(
      ctx, Framework::Simplified,
      [&](const ColoredCollection& beta) {
        ++report.count_collections;
        phi_sets(ctx, beta, s1, s2);
        CollectionStats st = collection_stats(beta);
        if (static_cast<std::int64_t>(s2.size()) != st.corners ||
            static_cast<std::int64_t>(s1.size()) != len - st.edges) {
          report.weight_preserving = false;
          note(report.mismatches, "weight mismatch for " + to_string(beta));
        }
        if (use_packed) {
          std::uint64_t key = 0;
          for (std::size_t i : s1.indices()) key |= std::uint64_t{1} << (i - 1);
          for (std::size_t j : s2.indices()) key |= std::uint64_t{1} << (ctx.edge_count() + j - 1);
          packed.push_back(key);
        } else if (!images.emplace(s1, s2).second) {
          ++collisions_outside_packed;
          note(report.mismatches, "Phi collision at " + to_string(beta));
        }
      },
      limits);

  if (use_packed) {
    std::sort(packed.begin(), packed.end());
    auto distinct = static_cast<std::uint64_t>(std::unique(packed.begin(), packed.end()) - packed.begin());
    report.injective = distinct == report.count_collections;
    if (!report.injective) note(report.mismatches, "Phi is not injective");
  } else {
    report.injective = collisions_outside_packed == 0;
  }

  if (mode == BijectionMode::CountsOnly) {
    report.count_pairs = static_cast<std::uint64_t>(cluster_recurrence(ctx.r(), ctx.n()).coefficient_sum());
    report.surjective = report.injective && report.count_pairs == report.count_collections;
    return report;
  }

  StepWord host = build_family_path(ctx, Family::C);
  std::set<std::pair<EdgeSet, EdgeSet>> pairs;
  for_each_compatible_pair(
      host, ctx.r(), PairStrategy::BruteForce,
      [&](const EdgeSet& a, const EdgeSet& b) { pairs.emplace(a, b); }, limits);
  report.count_pairs = pairs.size();
  report.surjective = true;
  for (const auto& p : pairs) {
    if (!images.contains(p)) {
      report.surjective = false;
      note(report.mismatches, "compatible pair " + to_string(EdgePair(host, ctx.r(), p.first, p.second)) +
                                  " is not an image");
    }
  }
  for (const auto& img : images) {
    if (!pairs.contains(img)) {
      report.surjective = false;
      note(report.mismatches, "image " + to_string(EdgePair(host, ctx.r(), img.first, img.second)) +
                                  " is not compatible");
    }
  }
  return report;
}

}  // namespace dyckcluster
