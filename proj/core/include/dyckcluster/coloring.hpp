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

#ifndef DYCKCLUSTER_COLORING_HPP_
#define DYCKCLUSTER_COLORING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyckcluster/error.hpp"
#include "dyckcluster/paths.hpp"

namespace dyckcluster {

enum class Framework { LeeSchiffler, Simplified };

enum class Color { Blue, Brown, Green, Red };

const char* to_string(Color color);
const char* to_string(Framework framework);

// A single edge alpha_s, or a colored span between corners v_i and v_k.
struct Subpath {
  enum class Kind { SingleEdge, CornerSpan };

  Kind kind = Kind::SingleEdge;
  std::size_t edge = 0;   // SingleEdge only
  std::size_t start = 0;  // CornerSpan only: i
  std::size_t end = 0;    // CornerSpan only: k
  Color color = Color::Blue;
  std::optional<MWPair> mw;  // Brown and Green
  // Covered edges, 1-based and inclusive.
  std::size_t first_edge = 0;
  std::size_t last_edge = 0;

  static Subpath single_edge(std::size_t s);

  bool is_span() const noexcept { return kind == Kind::CornerSpan; }
  std::size_t edge_count() const noexcept { return last_edge - first_edge + 1; }
  // k - i for spans, 0 for single edges.
  std::int64_t corner_weight() const noexcept {
    return is_span() ? static_cast<std::int64_t>(end - start) : 0;
  }

  friend bool operator==(const Subpath&, const Subpath&) = default;
};

std::string to_string(const Subpath& sp);

struct CollectionStats {
  std::int64_t corners = 0;  // |beta|_1
  std::int64_t edges = 0;    // |beta|_2

  friend bool operator==(const CollectionStats&, const CollectionStats&) = default;
};

// Members ordered left to right by first covered edge.
struct ColoredCollection {
  Framework framework = Framework::Simplified;
  std::vector<Subpath> subpaths;

  friend bool operator==(const ColoredCollection&, const ColoredCollection&) = default;
};

std::string to_string(const ColoredCollection& beta);

CollectionStats collection_stats(const ColoredCollection& beta);

Subpath classify_span(const FamilyContext& ctx, std::size_t i, std::size_t k, Framework framework);

// Number of edges immediately before v_i of which one must be covered when a
// Brown (simplified) or Green (Lee-Schiffler) span starts at v_i.
std::int64_t predecessor_requirement(int r, const Subpath& span, Framework framework);

// Reason the collection is not in F(D_n) / F'(D_n), or nullopt when it is.
std::optional<std::string> collection_violation(const FamilyContext& ctx, const ColoredCollection& beta);

bool is_member(const FamilyContext& ctx, const ColoredCollection& beta);

// |F'(D_n)| from the integer recurrence x_{k+1} = (x_k^r + 1) / x_{k-1}; nullopt
// when it does not fit in 64 bits.
std::optional<std::uint64_t> expected_collection_count(int r, int n);

using CollectionVisitor = std::function<void(const ColoredCollection&)>;

// Visits every member exactly once in canonical order: depth-first along the
// path, trying at each vertex "edge uncovered", then "single edge", then spans
// by increasing right end. The visited object is reused between calls. Throws
// GuardExceeded before visiting more than limits.max_objects collections.
void for_each_collection(const FamilyContext& ctx, Framework framework, const CollectionVisitor& visit,
                         const Limits& limits = {});

std::vector<ColoredCollection> enumerate_collections(const FamilyContext& ctx, Framework framework,
                                                     const Limits& limits = {});

// F(D_n) -> F'(D_n). Throws InvalidArgument when lsbeta is not in F(D_n).
ColoredCollection chi_map(const FamilyContext& ctx, const ColoredCollection& lsbeta);

struct ComplementPart {
  std::vector<std::size_t> edges;    // 1-based edge indices
  std::vector<std::size_t> corners;  // corner indices

  std::int64_t corner_count() const noexcept { return static_cast<std::int64_t>(corners.size()); }
  std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(edges.size()); }
};

struct ComplementaryDecomposition {
  std::vector<ComplementPart> parts;  // beta-bar_0 .. beta-bar_t
};

ComplementaryDecomposition complementary_decomposition(const FamilyContext& ctx, const ColoredCollection& beta);

// Splits a Blue or Brown span into atomic pieces: minimal Brown prefixes,
// then at most one Blue remainder.
std::vector<Subpath> atomic_decomposition(const FamilyContext& ctx, const Subpath& span);

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_COLORING_HPP_
