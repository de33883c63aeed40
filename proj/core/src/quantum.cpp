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

#include "dyckcluster/quantum.hpp"

#include <tuple>
#include <vector>

namespace dyckcluster {

QLaurent QLaurent::monomial(std::int64_t exponent, std::int64_t coeff) {
  QLaurent f;
  f.add_term(exponent, coeff);
  return f;
}

void QLaurent::add_term(std::int64_t exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

QLaurent QLaurent::shifted(std::int64_t k) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked::add(e, k), c);
  return out;
}

std::int64_t QLaurent::at_one() const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) total = checked::add(total, c);
  return total;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(checked::add(ea, eb), checked::mul(ca, cb));
  }
  return out;
}

std::string to_string(const QLaurent& f) {
  if (f.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    out += std::to_string(c) + "*q^" + std::to_string(e);
  }
  return out + ")";
}

QuantumElement QuantumElement::monomial(std::int64_t a, std::int64_t b, std::int64_t q_exponent, std::int64_t coeff) {
  QuantumElement x;
  x.add_term(a, b, QLaurent::monomial(q_exponent, coeff));
  return x;
}

QuantumElement QuantumElement::constant(std::int64_t c) { return monomial(0, 0, 0, c); }

void QuantumElement::add_term(std::int64_t a, std::int64_t b, const QLaurent& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly QuantumElement::specialize_q_one() const {
  LaurentPoly out(2);
  for (const auto& [key, f] : terms_) out.add_term(Exponents{key.first, key.second, 0, 0}, f.at_one());
  return out;
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& other) {
  for (const auto& [key, f] : other.terms_) add_term(key.first, key.second, f);
  return *this;
}

QuantumElement operator*(const QuantumElement& x, const QuantumElement& y) {
  QuantumElement out;
  for (const auto& [kx, fx] : x.terms_) {
    for (const auto& [ky, fy] : y.terms_) {
      // Z2^b Z1^c = q^{-2bc} Z1^c Z2^b
      std::int64_t twist = checked::mul(-2, checked::mul(kx.second, ky.first));
      out.add_term(checked::add(kx.first, ky.first), checked::add(kx.second, ky.second), (fx * fy).shifted(twist));
    }
  }
  return out;
}

std::string to_string(const QuantumElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, f] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(f);
    if (key.first != 0) out += "*Z1^" + std::to_string(key.first);
    if (key.second != 0) out += "*Z2^" + std::to_string(key.second);
  }
  return out;
}

QuantumElement add(const QuantumElement& x, const QuantumElement& y) { return x + y; }

QuantumElement mul(const QuantumElement& x, const QuantumElement& y) { return x * y; }

QuantumElement pow(const QuantumElement& x, int k) {
  if (k < 0) throw InvalidArgument("negative powers are not supported in the quantum torus");
  QuantumElement result = QuantumElement::constant(1);
  for (int i = 0; i < k; ++i) result = result * x;
  return result;
}

QuantumElement q_shift(const QuantumElement& x, std::int64_t k) {
  QuantumElement out;
  for (const auto& [key, f] : x.terms()) out.add_term(key.first, key.second, f.shifted(k));
  return out;
}

namespace {

int letter_index(char ch) {
  switch (ch) {
    case 'h':
      return 0;
    case 'v':
      return 1;
    case 'H':
      return 2;
    case 'V':
      return 3;
    default:
      throw InvalidArgument(std::string("pair word letter must be one of hvHV, got '") + ch + "'");
  }
}

}  // namespace

WeightTable::WeightTable(int r) : r_(r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  auto set = [&](char x, char y, std::int64_t w) {
    table_[letter_index(x)][letter_index(y)] = w;
    table_[letter_index(y)][letter_index(x)] = -w;
  };
  std::int64_t rr = r;
  set('h', 'v', 1);
  set('H', 'v', 1);
  set('h', 'V', 1);
  set('H', 'h', rr);
  set('v', 'V', rr);
  set('V', 'H', rr * rr - 1);
}

std::int64_t WeightTable::weight(char first, char second) const {
  return table_[letter_index(first)][letter_index(second)];
}

std::int64_t wq_allpairs(const PairWord& word, int r) {
  WeightTable table(r);
  const std::string& s = word.letters;
  std::int64_t total = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    for (std::size_t q = p + 1; q < s.size(); ++q) total = checked::add(total, table.weight(s[p], s[q]));
  }
  return total;
}

namespace {

// Evaluates the closed form with O(t) work per collection.
class ClosedForm {
 public:
  explicit ClosedForm(const FamilyContext& ctx) : ctx_(ctx), corner_prefix_(ctx.edge_count() + 1, 0) {
    for (std::size_t p = 0; p <= ctx.edge_count(); ++p) {
      corner_prefix_[p] = (p > 0 ? corner_prefix_[p - 1] : 0) + (ctx.corner_at(p) >= 0 ? 1 : 0);
    }
    base_ = ctx.c(ctx.n() - 1) + ctx.c(ctx.n() - 2) - 1;
  }

  std::int64_t base() const noexcept { return base_; }

  std::int64_t evaluate(const ColoredCollection& beta, bool inclusive) {
    const auto& m = beta.subpaths;
    std::size_t t = m.size();
    std::int64_t r = ctx_.r();
    edge_prefix_.assign(t + 1, 0);
    corner_weight_prefix_.assign(t + 1, 0);
    for (std::size_t i = 1; i <= t; ++i) {
      edge_prefix_[i] = edge_prefix_[i - 1] + static_cast<std::int64_t>(m[i - 1].edge_count());
      corner_weight_prefix_[i] = corner_weight_prefix_[i - 1] + m[i - 1].corner_weight();
    }
    std::int64_t total = base_;
    for (std::size_t j = 0; j <= t; ++j) {
      std::size_t lo = j == 0 ? 0 : m[j - 1].last_edge;
      std::size_t hi = j == t ? ctx_.edge_count() : m[j].first_edge - 1;
      auto gap_edges = static_cast<std::int64_t>(hi - lo);
      std::int64_t gap_corners = corner_prefix_[hi] - (lo > 0 ? corner_prefix_[lo - 1] : 0);
      bool skip_lo = j == 0 || m[j - 1].is_span();
      if (skip_lo && ctx_.corner_at(lo) >= 0) --gap_corners;
      // Members with index i in the negative range: i <= j, or i < j.
      std::size_t neg = inclusive ? j : (j == 0 ? 0 : j - 1);
      std::int64_t edge_sum = edge_prefix_[t] - 2 * edge_prefix_[neg];
      std::int64_t corner_sum = corner_weight_prefix_[t] - 2 * corner_weight_prefix_[neg];
      std::int64_t term = checked::add(checked::mul(checked::mul(r, gap_edges), edge_sum),
                                       checked::mul(r * gap_corners - r * r * gap_edges, corner_sum));
      total = checked::add(total, term);
    }
    return total;
  }

 private:
  const FamilyContext& ctx_;
  std::vector<std::int64_t> corner_prefix_;
  std::vector<std::int64_t> edge_prefix_;
  std::vector<std::int64_t> corner_weight_prefix_;
  std::int64_t base_ = 0;
};

std::int64_t uq_from(const FamilyContext& ctx, std::int64_t wq, std::int64_t base, const CollectionStats& s) {
  std::int64_t r = ctx.r();
  int n = ctx.n();
  std::int64_t lhs = checked::sub(ctx.c(n - 1), checked::mul(r, s.corners));
  std::int64_t rhs = checked::sub(ctx.c(n), checked::mul(r, s.edges));
  return checked::add(wq - base, checked::mul(lhs, rhs));
}

void require_simplified(const ColoredCollection& beta) {
  if (beta.framework != Framework::Simplified) throw InvalidArgument("quantum weights use simplified collections");
}

}  // namespace

std::int64_t wq_closed(const FamilyContext& ctx, const ColoredCollection& beta) {
  require_simplified(beta);
  ClosedForm form(ctx);
  return form.evaluate(beta, true);
}

std::int64_t wq_closed_literal(const FamilyContext& ctx, const ColoredCollection& beta) {
  require_simplified(beta);
  ClosedForm form(ctx);
  return form.evaluate(beta, false);
}

std::int64_t uq(const FamilyContext& ctx, const ColoredCollection& beta) {
  require_simplified(beta);
  ClosedForm form(ctx);
  return uq_from(ctx, form.evaluate(beta, true), form.base(), collection_stats(beta));
}

QuantumElement quantum_expansion(const FamilyContext& ctx, Direction direction, const Limits& limits) {
  if (ctx.n() < 4) throw InvalidArgument("expansions need n >= 4");
  auto expected = expected_collection_count(ctx.r(), ctx.n());
  if (!expected || *expected > limits.max_objects) {
    throw GuardExceeded("quantum expansion for r=" + std::to_string(ctx.r()) + ", n=" + std::to_string(ctx.n()) +
                        " sums more than " + std::to_string(limits.max_objects) + " terms");
  }
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::int64_t> hist;
  ClosedForm form(ctx);
  for_each_collection(
      ctx, Framework::Simplified,
      [&](const ColoredCollection& beta) {
        CollectionStats s = collection_stats(beta);
        std::int64_t u = uq_from(ctx, form.evaluate(beta, true), form.base(), s);
        ++hist[{s.corners, s.edges, u}];
      },
      limits);
  int n = ctx.n();
  std::int64_t r = ctx.r();
  std::int64_t c1 = ctx.c(n - 1);
  std::int64_t c2 = ctx.c(n - 2);
  QuantumElement out;
  for (const auto& [key, count] : hist) {
    auto [b1, b2, u] = key;
    std::int64_t e1 = checked::sub(checked::mul(r, b1), c1);
    std::int64_t e2 = checked::sub(checked::mul(r, c1 - b2), c2);
    if (direction == Direction::Forward) {
      out.add_term(e1, e2, QLaurent::monomial(u, count));
    } else {
      out.add_term(e2, e1, QLaurent::monomial(u, count));
    }
  }
  return out;
}

QuantumElement quantum_variable(int r, int k, const Limits& limits) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  switch (k) {
    case 1:
      return QuantumElement::monomial(1, 0);
    case 2:
      return QuantumElement::monomial(0, 1);
    case 3:
      // (q^{-r} Z2^r + 1) Z1^{-1}
      return QuantumElement::monomial(-1, r, r) + QuantumElement::monomial(-1, 0);
    case 0:
      // Z2^{-1} (q^{-r} Z1^r + 1)
      return QuantumElement::monomial(r, -1, r) + QuantumElement::monomial(0, -1);
    default:
      break;
  }
  if (k >= 4) return quantum_expansion(FamilyContext(r, k), Direction::Forward, limits);
  return quantum_expansion(FamilyContext(r, 3 - k), Direction::Backward, limits);
}

namespace {

bool recurrence_holds(int r, int k, const Limits& limits) {
  QuantumElement below = quantum_variable(r, k - 1, limits);
  QuantumElement here = quantum_variable(r, k, limits);
  QuantumElement above = quantum_variable(r, k + 1, limits);
  QuantumElement rhs = q_shift(pow(here, r), -r) + QuantumElement::constant(1);
  return above * below == rhs;
}

}  // namespace

bool verify_quantum_recurrence(int r, int n, const Limits& limits) {
  if (n < 2) throw InvalidArgument("forward recurrence check needs n >= 2");
  return recurrence_holds(r, n, limits);
}

bool verify_quantum_recurrence_backward(int r, int k, const Limits& limits) {
  if (k > 1) throw InvalidArgument("backward recurrence check needs k <= 1");
  return recurrence_holds(r, k, limits);
}

}  // namespace dyckcluster
