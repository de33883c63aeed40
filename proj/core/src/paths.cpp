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

#include "dyckcluster/paths.hpp"

#include <utility>

#include "dyckcluster/error.hpp"

namespace dyckcluster {

StepWord::StepWord(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_) {
    if (ch == 'E') {
      ++endpoint_.x;
    } else if (ch == 'N') {
      ++endpoint_.y;
    } else {
      throw InvalidArgument(std::string("step word letter must be E or N, got '") + ch + "'");
    }
  }
}

std::vector<Point> StepWord::vertices() const {
  std::vector<Point> out;
  out.reserve(letters_.size() + 1);
  Point p;
  out.push_back(p);
  for (char ch : letters_) {
    if (ch == 'E') {
      ++p.x;
    } else {
      ++p.y;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<std::int64_t> c_sequence(int r, int n) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (n < 1) throw InvalidArgument("n must be at least 1");
  std::vector<std::int64_t> c;
  c.reserve(static_cast<std::size_t>(n));
  c.push_back(0);
  if (n >= 2) c.push_back(1);
  for (int k = 3; k <= n; ++k) {
    std::int64_t prev = c[static_cast<std::size_t>(k - 2)];
    std::int64_t prev2 = c[static_cast<std::size_t>(k - 3)];
    c.push_back(checked::sub(checked::mul(r, prev), prev2));
  }
  return c;
}

std::int64_t c_value(int r, int k) {
  if (k < 1) throw InvalidArgument("c-sequence index must be at least 1");
  return c_sequence(r, k).back();
}

std::int64_t a_value(int r, int m, int w) {
  if (m < 2) throw InvalidArgument("a_{m,w} needs m >= 2");
  auto c = c_sequence(r, m);
  return checked::sub(c[static_cast<std::size_t>(m - 1)],
                      checked::mul(w, c[static_cast<std::size_t>(m - 2)]));
}

StepWord build_maximal_path(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw InvalidArgument("path endpoint must be non-negative");
  if (a == 0 && b == 0) throw InvalidArgument("path endpoint must not be the origin");
  std::string letters;
  letters.reserve(static_cast<std::size_t>(checked::add(a, b)));
  if (a == 0) {
    letters.assign(static_cast<std::size_t>(b), 'N');
    return StepWord(std::move(letters));
  }
  std::int64_t height = 0;
  for (std::int64_t x = 1; x <= a; ++x) {
    letters.push_back('E');
    auto target = static_cast<std::int64_t>(static_cast<__int128>(b) * x / a);
    for (; height < target; ++height) letters.push_back('N');
  }
  return StepWord(std::move(letters));
}

FamilyContext::FamilyContext(int r, int n) : r_(r), n_(n) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (n < 3) throw InvalidArgument("n must be at least 3");
  c_ = c_sequence(r, n);
  std::int64_t c1 = c(n - 1);
  std::int64_t c2 = c(n - 2);
  if (c1 > kMaxPathLength) {
    throw GuardExceeded("D_n has " + std::to_string(c1) + " edges, above the path length limit");
  }
  diagonal_ = Slope{c2, c1 - c2};
  path_ = build_maximal_path(c1 - c2, c2);
  vertices_ = path_.vertices();
  corner_at_.assign(vertices_.size(), -1);
  for (const Vertex& v : northwest_corners(path_)) {
    corner_at_[v.path_index] = static_cast<std::int64_t>(corner_positions_.size());
    corner_positions_.push_back(v.path_index);
  }
}

std::int64_t FamilyContext::c(int k) const {
  if (k < 1 || k > n_) throw InvalidArgument("c-sequence index out of range");
  return c_[static_cast<std::size_t>(k - 1)];
}

StepWord build_family_path(const FamilyContext& ctx, Family family) {
  if (family == Family::D) return ctx.dyck_path();
  int n = ctx.n();
  return build_maximal_path(ctx.c(n - 1), ctx.c(n - 2));
}

Morphism::Morphism(std::string name, std::map<char, std::string> images)
    : name_(std::move(name)), images_(std::move(images)) {}

Morphism Morphism::lambda(int r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  auto ur = static_cast<std::size_t>(r);
  return Morphism("lambda", {{'E', std::string(ur - 1, 'E') + "N"}, {'N', std::string(ur - 2, 'E') + "N"}});
}

Morphism Morphism::theta() { return Morphism("theta", {{'E', "E"}, {'N', "EN"}}); }

Morphism Morphism::psi() { return Morphism("psi", {{'H', "Hv"}, {'v', "v"}}); }

Morphism Morphism::kappa(int r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  auto ur = static_cast<std::size_t>(r);
  return Morphism("kappa", {{'H', std::string(ur, 'H') + "v"}, {'v', std::string(ur - 1, 'H') + "v"}});
}

Morphism Morphism::sigma() { return Morphism("sigma", {{'H', "h"}, {'v', "V"}}); }

std::string apply_morphism(std::string_view word, const Morphism& m) {
  std::string out;
  for (char ch : word) {
    auto it = m.images().find(ch);
    if (it == m.images().end()) {
      throw InvalidArgument(std::string("letter '") + ch + "' is outside the domain of " + m.name());
    }
    out += it->second;
  }
  return out;
}

StepWord apply_morphism(const StepWord& word, const Morphism& m) {
  return StepWord(apply_morphism(word.str(), m));
}

StepWord invert_theta(const StepWord& word) {
  const std::string& s = word.str();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'N') throw InvalidArgument("word is not in the image of theta");
    if (i + 1 < s.size() && s[i + 1] == 'N') {
      out.push_back('N');
      ++i;
    } else {
      out.push_back('E');
    }
  }
  return StepWord(std::move(out));
}

std::vector<Vertex> northwest_corners(const StepWord& word) {
  std::vector<Vertex> out;
  Point p;
  out.push_back(Vertex{p, 0, 0});
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'E') {
      ++p.x;
    } else {
      ++p.y;
      out.push_back(Vertex{p, i + 1, out.size()});
    }
  }
  return out;
}

Point mu_map(int r, Point v) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  return Point{checked::add(checked::mul(r - 1, v.x), checked::mul(r - 2, v.y)), checked::add(v.x, v.y)};
}

std::int64_t pi_value(const FamilyContext& ctx, std::size_t i) {
  if (i > ctx.edge_count()) throw InvalidArgument("vertex index out of range");
  int n = ctx.n();
  Point w = ctx.vertices()[i];
  return checked::sub(checked::mul(w.x, ctx.c(n - 2)), checked::mul(w.y, ctx.c(n - 1) - ctx.c(n - 2)));
}

std::strong_ordering slope_compare(Point u, Point w, Slope s) {
  if (u == w) throw InvalidArgument("slope of a degenerate segment");
  __int128 dx = w.x - u.x;
  __int128 dy = w.y - u.y;
  if (dx == 0) return dy > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  if (dx < 0) {
    dx = -dx;
    dy = -dy;
  }
  // s.run > 0 for every diagonal we build; a vertical s is handled for completeness.
  if (s.run == 0) return std::strong_ordering::less;
  __int128 lhs = dy * s.run;
  __int128 rhs = static_cast<__int128>(s.rise) * dx;
  if (s.run < 0) std::swap(lhs, rhs);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t d_index(const FamilyContext& ctx, std::size_t i) {
  if (i >= ctx.edge_count()) throw InvalidArgument("vertex index out of range");
  const auto& v = ctx.vertices();
  for (std::size_t j = i + 1; j < v.size(); ++j) {
    if (slope_compare(v[i], v[j], ctx.diagonal()) != std::strong_ordering::less) return j;
  }
  throw InternalInvariantError("d(i) does not exist");
}

std::optional<MWPair> decompose_distance(int r, std::int64_t delta) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (r == 2) {
    if (delta == 1) return MWPair{3, 1};
    return std::nullopt;
  }
  std::int64_t prev = 1;  // c_2
  std::int64_t cur = r;   // c_3
  for (int m = 3;; ++m) {
    for (int w = 2; w <= r - 1; ++w) {
      if (cur - w * prev == delta) return MWPair{m, w};
    }
    if (m >= 4 && cur - (r - 1) * prev > delta) return std::nullopt;
    std::int64_t next = checked::sub(checked::mul(r, cur), prev);
    prev = cur;
    cur = next;
  }
}

std::optional<TDecomposition> t_decomposition(const FamilyContext& ctx, std::size_t i) {
  std::size_t b = ctx.last_corner();
  if (i >= b) throw InvalidArgument("corner index out of range");
  const auto& pos = ctx.corner_positions();
  const auto& v = ctx.vertices();
  for (std::size_t t = i + 1; t <= b; ++t) {
    if (slope_compare(v[pos[i]], v[pos[t]], ctx.diagonal()) == std::strong_ordering::greater) {
      auto mw = decompose_distance(ctx.r(), static_cast<std::int64_t>(t - i));
      if (!mw) {
        throw InternalInvariantError("t(i) - i = " + std::to_string(t - i) + " has no (m,w) decomposition");
      }
      return TDecomposition{t, *mw, mw->m > ctx.n() - 2};
    }
  }
  return std::nullopt;
}

}  // namespace dyckcluster
