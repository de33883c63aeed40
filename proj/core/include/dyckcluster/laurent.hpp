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

#ifndef DYCKCLUSTER_LAURENT_HPP_
#define DYCKCLUSTER_LAURENT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dyckcluster {

// Exponents of X1, X2 and, for four-variable polynomials, Y1, Y2. Unused
// trailing slots stay zero.
using Exponents = std::array<std::int64_t, 4>;

// Integer Laurent polynomial in 2 (X1, X2) or 4 (X1, X2, Y1, Y2) commuting
// variables. Terms are kept in ascending lexicographic exponent order and no
// zero coefficient is stored. Coefficient arithmetic is overflow-checked.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars = 2);

  static LaurentPoly constant(std::size_t nvars, std::int64_t c);
  static LaurentPoly monomial(std::size_t nvars, const Exponents& exps, std::int64_t coeff = 1);
  // The generator with 0-based index (0: X1, 1: X2, 2: Y1, 3: Y2).
  static LaurentPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::int64_t coefficient(const Exponents& exps) const;

  void add_term(const Exponents& exps, std::int64_t coeff);

  // Value with every variable set to 1.
  std::int64_t coefficient_sum() const;
  // Keeps the first `keep` variables and sets the rest to 1.
  LaurentPoly specialize_tail(std::size_t keep) const;
  // Exchanges two variables.
  LaurentPoly swap_variables(std::size_t a, std::size_t b) const;
  // Per-variable minimum / maximum exponent. Requires a nonzero polynomial.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check_compatible(const LaurentPoly& other) const;

  std::size_t nvars_;
  std::map<Exponents, std::int64_t> terms_;
};

const std::vector<std::string>& variable_names(std::size_t nvars);

// Canonical text: ascending terms joined by " + ", each as coeff*X1^a*X2^b with
// unit coefficients, zero exponents and unit exponents' "^1" omitted.
std::string to_string(const LaurentPoly& p);

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
// k >= 0, or any k for a monomial with coefficient +-1.
LaurentPoly pow(const LaurentPoly& p, int k);
// Exact quotient p / q; throws NotDivisible when a remainder would be left.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// X_m of the rank-2 recurrence X_{k+1} X_{k-1} = X_k^r + 1, any integer m.
LaurentPoly cluster_recurrence(int r, int m);

struct CoefficientVariable {
  LaurentPoly x;  // X-tilde_m, 4 variables
  LaurentPoly y;  // Y-tilde_m, a monomial in Y1, Y2
};

// Principal-coefficient recurrence, m >= 1.
CoefficientVariable coefficient_recurrence(int r, int m);

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_LAURENT_HPP_
