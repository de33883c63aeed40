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

#ifndef DYCKCLUSTER_EXPANSION_HPP_
#define DYCKCLUSTER_EXPANSION_HPP_

#include <cstdint>
#include <map>
#include <utility>

#include "dyckcluster/coloring.hpp"
#include "dyckcluster/error.hpp"
#include "dyckcluster/laurent.hpp"
#include "dyckcluster/paths.hpp"

namespace dyckcluster {

enum class ExpansionFormula {
  Subpaths,  // sum over F'(D_n)
  Pairs,     // sum over compatible pairs on C_n
};

enum class Direction {
  Forward,   // X_n
  Backward,  // X_{3-n}
};

const char* to_string(Direction direction);

// Multiplicity of each (|beta|_1, |beta|_2) over F'(D_n).
std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> collection_histogram(const FamilyContext& ctx,
                                                                                   const Limits& limits = {});

// Multiplicity of each (|S2|, c_{n-1} - |S1|) over compatible pairs on C_n,
// keyed like collection_histogram.
std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> pair_histogram(const FamilyContext& ctx,
                                                                             const Limits& limits = {});

// Requires n >= 4. Throws GuardExceeded when the sum is too large.
LaurentPoly expansion_classical(const FamilyContext& ctx, ExpansionFormula formula, Direction direction,
                                const Limits& limits = {});

// Four-variable expansion with principal coefficients. Requires n >= 4.
LaurentPoly expansion_with_coefficients(const FamilyContext& ctx, Direction direction, const Limits& limits = {});

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_EXPANSION_HPP_
