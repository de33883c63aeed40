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

#ifndef DYCKCLUSTER_COMPAT_HPP_
#define DYCKCLUSTER_COMPAT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "dyckcluster/error.hpp"
#include "dyckcluster/paths.hpp"

namespace dyckcluster {

// Set of 1-based indices drawn from {1, ..., universe}.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);
  EdgeSet(std::size_t universe, std::initializer_list<std::size_t> members);
  EdgeSet(std::size_t universe, const std::vector<std::size_t>& members);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t i) const noexcept;
  void insert(std::size_t i);
  void erase(std::size_t i);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  // Members in increasing order.
  std::vector<std::size_t> indices() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

std::string to_string(const EdgeSet& set, char prefix);

enum class Orientation { Horizontal, Vertical };

// (S1, S2) on a host path: S1 indexes horizontal edges eta_1.. west to east,
// S2 indexes vertical edges nu_1.. south to north.
struct EdgePair {
  StepWord host;
  int r = 2;
  EdgeSet s1;
  EdgeSet s2;

  // Empty sets sized to the host.
  EdgePair(StepWord host_word, int r_value);
  EdgePair(StepWord host_word, int r_value, EdgeSet horizontal, EdgeSet vertical);

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

std::string to_string(const EdgePair& pair);

struct Shadow {
  EdgeSet edges;
  Orientation orientation = Orientation::Horizontal;  // of the shadow's edges

  friend bool operator==(const Shadow&, const Shadow&) = default;
};

// Local shadow of eta_edge (side Horizontal, edge in S1) or nu_edge (side
// Vertical, edge in S2). Throws InvalidArgument when the edge is not selected.
Shadow local_shadow(const EdgePair& pair, std::size_t edge, Orientation side);

// Union of local shadows over a subset of S1 or S2.
Shadow shadow_of(const EdgePair& pair, const EdgeSet& subset, Orientation side);

// True when every local shadow of the pair closes without wrapping past the
// end of the host.
bool has_non_spanning_shadows(const EdgePair& pair);

bool is_compatible(const EdgePair& pair);

enum class PairStrategy {
  BruteForce,  // all 2^edges subsets, full predicate on each
  Pruned,      // depth-first with early rejection of non-wrapping violations
};

using PairVisitor = std::function<void(const EdgeSet& s1, const EdgeSet& s2)>;

// Every compatible pair in increasing order of the path-position bitmask
// (edge alpha_p is bit p-1). Both strategies visit the same sequence.
void for_each_compatible_pair(const StepWord& host, int r, PairStrategy strategy, const PairVisitor& visit,
                              const Limits& limits = {});

std::vector<EdgePair> enumerate_compatible_pairs(const StepWord& host, int r,
                                                 PairStrategy strategy = PairStrategy::BruteForce,
                                                 const Limits& limits = {});

// Splices inserted at lattice point (j1, j2) of host.host. Throws
// InvalidArgument when the point is not on the host or r differs.
EdgePair insert_pair(const EdgePair& host, const EdgePair& inserted, Point position);

// True when the spliced host word is the maximal path to the summed endpoint.
bool splice_is_maximal(const EdgePair& host, const EdgePair& inserted, Point position);

struct PairWord {
  std::string letters;  // over {h, v, H, V}

  friend bool operator==(const PairWord&, const PairWord&) = default;
};

PairWord pair_word(const EdgePair& pair);
EdgePair decode_pair_word(const PairWord& word, int r);

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_COMPAT_HPP_
