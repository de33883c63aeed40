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

#ifndef DYCKCLUSTER_BIJECTION_HPP_
#define DYCKCLUSTER_BIJECTION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dyckcluster/coloring.hpp"
#include "dyckcluster/compat.hpp"
#include "dyckcluster/error.hpp"
#include "dyckcluster/paths.hpp"

namespace dyckcluster {

// Phi: F'(D_n) -> compatible pairs on C_n. Throws InvalidArgument when beta
// is not in F'(D_n).
EdgePair phi(const FamilyContext& ctx, const ColoredCollection& beta);

// Phi without the membership check, for callers that enumerate F'(D_n).
EdgePair phi_unchecked(const FamilyContext& ctx, const ColoredCollection& beta);

// Reconstructs beta from a pair on C_n: maximal runs of S2 become spans, the
// remaining covered edges become single edges. Throws InternalInvariantError
// when the result is not a member of F'(D_n) or does not map back to pair.
ColoredCollection phi_inverse(const FamilyContext& ctx, const EdgePair& pair);

enum class BijectionMode {
  BruteForce,  // compare against every compatible pair on C_n
  CountsOnly,  // injectivity plus the recurrence count
};

struct BijectionReport {
  int r = 0;
  int n = 0;
  BijectionMode mode = BijectionMode::BruteForce;
  std::uint64_t count_collections = 0;
  std::uint64_t count_pairs = 0;
  bool injective = false;
  bool surjective = false;
  bool weight_preserving = false;
  std::vector<std::string> mismatches;

  bool pass() const noexcept {
    return count_collections == count_pairs && injective && surjective && weight_preserving;
  }
};

BijectionReport verify_bijection(const FamilyContext& ctx, BijectionMode mode, const Limits& limits = {});

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_BIJECTION_HPP_
