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

#ifndef DYCKCLUSTER_TESTS_SUPPORT_HPP_
#define DYCKCLUSTER_TESTS_SUPPORT_HPP_

#include <string>

#include "dyckcluster/dyckcluster.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

// Same format as oracle::key.
inline std::string key(const dyckcluster::ColoredCollection& beta) {
  std::string out;
  for (const auto& sp : beta.subpaths) {
    if (!out.empty()) out += ' ';
    if (!sp.is_span()) {
      out += "a" + std::to_string(sp.edge);
      continue;
    }
    out += "g" + std::to_string(sp.start) + "-" + std::to_string(sp.end) + ":" + to_string(sp.color);
    if (sp.mw) out += "(" + std::to_string(sp.mw->m) + "," + std::to_string(sp.mw->w) + ")";
  }
  return out;
}

// p(x1, x2[, y1, y2]) modulo the oracle prime.
inline std::uint64_t eval_mod(const dyckcluster::LaurentPoly& p, const std::array<std::uint64_t, 4>& at) {
  std::uint64_t total = 0;
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t term = oracle::mod_from(c);
    for (std::size_t i = 0; i < p.nvars(); ++i) term = oracle::mod_mul(term, oracle::mod_pow(at[i], e[i]));
    total = (total + term) % oracle::kPrime;
  }
  return total;
}

inline dyckcluster::ColoredCollection span_collection(const dyckcluster::FamilyContext& ctx,
                                                      std::initializer_list<std::pair<int, int>> items) {
  // (i, k) with k >= 0 is a span, (s, -1) is the single edge alpha_s.
  dyckcluster::ColoredCollection beta;
  for (auto [a, b] : items) {
    if (b < 0) {
      beta.subpaths.push_back(dyckcluster::Subpath::single_edge(static_cast<std::size_t>(a)));
    } else {
      beta.subpaths.push_back(dyckcluster::classify_span(ctx, static_cast<std::size_t>(a),
                                                         static_cast<std::size_t>(b),
                                                         dyckcluster::Framework::Simplified));
    }
  }
  return beta;
}

}  // namespace testing_support

#endif  // DYCKCLUSTER_TESTS_SUPPORT_HPP_
