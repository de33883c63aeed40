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

#include "dyckcluster/laurent.hpp"

#include <algorithm>
#include <limits>

#include "dyckcluster/error.hpp"

namespace dyckcluster {

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(a[i], b[i]);
  return out;
}

Exponents sub_exps(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::sub(a[i], b[i]);
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars != 2 && nvars != 4) throw InvalidArgument("Laurent polynomials have 2 or 4 variables");
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, std::int64_t c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const Exponents& exps, std::int64_t coeff) {
  LaurentPoly p(nvars);
  for (std::size_t i = nvars; i < exps.size(); ++i) {
    if (exps[i] != 0) throw InvalidArgument("exponent given for a variable the polynomial does not have");
  }
  p.add_term(exps, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(nvars, e);
}

std::int64_t LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Exponents& exps, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (inserted) return;
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPoly::coefficient_sum() const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) total = checked::add(total, c);
  return total;
}

LaurentPoly LaurentPoly::specialize_tail(std::size_t keep) const {
  if (keep != 2 && keep != nvars_) throw InvalidArgument("can only specialize down to 2 variables");
  LaurentPoly out(keep);
  for (const auto& [e, c] : terms_) {
    Exponents k = e;
    for (std::size_t i = keep; i < k.size(); ++i) k[i] = 0;
    out.add_term(k, c);
  }
  return out;
}

LaurentPoly LaurentPoly::swap_variables(std::size_t a, std::size_t b) const {
  if (a >= nvars_ || b >= nvars_) throw InvalidArgument("variable index out of range");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents k = e;
    std::swap(k[a], k[b]);
    out.add_term(k, c);
  }
  return out;
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no exponents");
  Exponents out = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], e[i]);
  }
  return out;
}

Exponents LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no exponents");
  Exponents out = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
  if (nvars_ != other.nvars_) throw InvalidArgument("polynomials have different variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, checked::sub(0, c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exps(ea, eb), checked::mul(ca, cb));
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, checked::sub(0, c));
  return out;
}

const std::vector<std::string>& variable_names(std::size_t nvars) {
  static const std::vector<std::string> kTwo{"X1", "X2"};
  static const std::vector<std::string> kFour{"X1", "X2", "Y1", "Y2"};
  return nvars == 4 ? kFour : kTwo;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const auto& names = variable_names(p.nvars());
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += "-" + factors;
    } else {
      out += std::to_string(c) + "*" + factors;
    }
  }
  return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly pow(const LaurentPoly& p, int k) {
  if (k < 0) {
    if (!p.is_monomial() || (p.terms().begin()->second != 1 && p.terms().begin()->second != -1)) {
      throw InvalidArgument("negative powers need a unit monomial");
    }
    const auto& [e, c] = *p.terms().begin();
    Exponents inv{};
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = checked::mul(-e[i], -k);
    return LaurentPoly::monomial(p.nvars(), inv, (k % 2 != 0) ? c : 1);
  }
  LaurentPoly result = LaurentPoly::constant(p.nvars(), 1);
  LaurentPoly base = p;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars()) throw InvalidArgument("polynomials have different variable counts");
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  LaurentPoly quotient(p.nvars());
  if (p.is_zero()) return quotient;
  if (q.is_monomial()) {
    const auto& [qe, qc] = *q.terms().begin();
    for (const auto& [e, c] : p.terms()) {
      if (c % qc != 0) throw NotDivisible("coefficient " + std::to_string(c) + " is not divisible by " + std::to_string(qc));
      quotient.add_term(sub_exps(e, qe), c / qc);
    }
    return quotient;
  }
  // Long division on lex-leading terms. A true quotient s has
  // min(p) = min(q) + min(s) and max(p) = max(q) + max(s) in every variable, so
  // any quotient term outside that box proves a nonzero remainder.
  Exponents lo = sub_exps(p.min_exponents(), q.min_exponents());
  Exponents hi = sub_exps(p.max_exponents(), q.max_exponents());
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    if (rc % lead_c != 0) throw NotDivisible("leading coefficient does not divide");
    Exponents te = sub_exps(re, lead_e);
    for (std::size_t i = 0; i < te.size(); ++i) {
      if (te[i] < lo[i] || te[i] > hi[i]) throw NotDivisible("quotient term leaves the exponent box");
    }
    LaurentPoly term = LaurentPoly::monomial(p.nvars(), te, rc / lead_c);
    quotient += term;
    rem -= term * q;
  }
  return quotient;
}

LaurentPoly cluster_recurrence(int r, int m) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  LaurentPoly x1 = LaurentPoly::variable(2, 0);
  LaurentPoly x2 = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, 1);
  if (m == 1) return x1;
  if (m == 2) return x2;
  if (m > 2) {
    LaurentPoly prev = x1;
    LaurentPoly cur = x2;
    for (int k = 2; k < m; ++k) {
      LaurentPoly next = exact_div(pow(cur, r) + one, prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // X_{k-1} = (X_k^r + 1) / X_{k+1}
  LaurentPoly above = x2;
  LaurentPoly cur = x1;
  for (int k = 1; k > m; --k) {
    LaurentPoly next = exact_div(pow(cur, r) + one, above);
    above = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CoefficientVariable coefficient_recurrence(int r, int m) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (m < 1) throw InvalidArgument("coefficient recurrence index must be at least 1");
  CoefficientVariable first{LaurentPoly::variable(4, 0), LaurentPoly::variable(4, 2)};
  CoefficientVariable second{LaurentPoly::variable(4, 1), LaurentPoly::monomial(4, Exponents{0, 0, r, 1})};
  if (m == 1) return first;
  if (m == 2) return second;
  CoefficientVariable prev = first;
  CoefficientVariable cur = second;
  for (int k = 2; k < m; ++k) {
    CoefficientVariable next{exact_div(pow(cur.x, r) + prev.y, prev.x), exact_div(pow(cur.y, r), prev.y)};
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace dyckcluster
