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

#ifndef DYCKCLUSTER_QUANTUM_HPP_
#define DYCKCLUSTER_QUANTUM_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dyckcluster/coloring.hpp"
#include "dyckcluster/compat.hpp"
#include "dyckcluster/error.hpp"
#include "dyckcluster/expansion.hpp"
#include "dyckcluster/laurent.hpp"
#include "dyckcluster/paths.hpp"

namespace dyckcluster {

// Integer Laurent polynomial in q.
class QLaurent {
 public:
  QLaurent() = default;
  static QLaurent monomial(std::int64_t exponent, std::int64_t coeff = 1);

  const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(std::int64_t exponent, std::int64_t coeff);
  QLaurent shifted(std::int64_t k) const;
  std::int64_t at_one() const;

  QLaurent& operator+=(const QLaurent& other);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

std::string to_string(const QLaurent& f);

// Sum of f_{a,b}(q) Z1^a Z2^b in normal order, with Z1 Z2 = q^2 Z2 Z1.
class QuantumElement {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;

  QuantumElement() = default;
  static QuantumElement monomial(std::int64_t a, std::int64_t b, std::int64_t q_exponent = 0, std::int64_t coeff = 1);
  static QuantumElement constant(std::int64_t c);

  const std::map<Key, QLaurent>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(std::int64_t a, std::int64_t b, const QLaurent& f);

  // Sets q = 1.
  LaurentPoly specialize_q_one() const;

  QuantumElement& operator+=(const QuantumElement& other);
  friend QuantumElement operator+(QuantumElement a, const QuantumElement& b) { return a += b; }
  friend QuantumElement operator*(const QuantumElement& a, const QuantumElement& b);
  friend bool operator==(const QuantumElement&, const QuantumElement&) = default;

 private:
  std::map<Key, QLaurent> terms_;
};

// Terms by (a, b), each as (c*q^k + ...)*Z1^a*Z2^b.
std::string to_string(const QuantumElement& x);

QuantumElement add(const QuantumElement& x, const QuantumElement& y);
QuantumElement mul(const QuantumElement& x, const QuantumElement& y);
QuantumElement pow(const QuantumElement& x, int k);  // k >= 0
QuantumElement q_shift(const QuantumElement& x, std::int64_t k);

// Pairwise weights on the letters h, v, H, V.
class WeightTable {
 public:
  explicit WeightTable(int r);
  std::int64_t weight(char first, char second) const;
  int r() const noexcept { return r_; }

 private:
  int r_;
  std::array<std::array<std::int64_t, 4>, 4> table_{};
};

// Sum of table weights over all position pairs p < p'.
std::int64_t wq_allpairs(const PairWord& word, int r);

// Closed form over the complementary decomposition. Member i (1-based) and gap
// j (0-based) contribute with sign -1 when i <= j.
std::int64_t wq_closed(const FamilyContext& ctx, const ColoredCollection& beta);

// The same sum with sign -1 only when i < j. Kept for comparison; it does not
// agree with wq_allpairs in general.
std::int64_t wq_closed_literal(const FamilyContext& ctx, const ColoredCollection& beta);

std::int64_t uq(const FamilyContext& ctx, const ColoredCollection& beta);

// Forward gives Z_n, backward Z_{3-n}. Requires n >= 4.
QuantumElement quantum_expansion(const FamilyContext& ctx, Direction direction, const Limits& limits = {});

// Z_k: seeds for 0 <= k <= 3, the expansion otherwise.
QuantumElement quantum_variable(int r, int k, const Limits& limits = {});

// Z_{n+1} Z_{n-1} == q^{-r} Z_n^r + 1 for n >= 2.
bool verify_quantum_recurrence(int r, int n, const Limits& limits = {});

// The same identity at an index k <= 1, reaching into the backward family.
bool verify_quantum_recurrence_backward(int r, int k, const Limits& limits = {});

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_QUANTUM_HPP_
