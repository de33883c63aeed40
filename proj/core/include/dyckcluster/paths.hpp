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

#ifndef DYCKCLUSTER_PATHS_HPP_
#define DYCKCLUSTER_PATHS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyckcluster/error.hpp"

namespace dyckcluster {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// Exact slope rise/run. run may be zero only for a vertical slope.
struct Slope {
  std::int64_t rise = 0;
  std::int64_t run = 1;
};

// A lattice path as a word over {E, N}.
class StepWord {
 public:
  StepWord() = default;
  // Throws InvalidArgument if a letter is not E or N.
  explicit StepWord(std::string letters);

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // 0-based letter access; letter i is the edge alpha_{i+1}.
  char operator[](std::size_t i) const { return letters_[i]; }

  std::int64_t east_count() const noexcept { return endpoint_.x; }
  std::int64_t north_count() const noexcept { return endpoint_.y; }
  Point endpoint() const noexcept { return endpoint_; }

  // Vertices w_0 .. w_len.
  std::vector<Point> vertices() const;

  friend bool operator==(const StepWord& a, const StepWord& b) { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  Point endpoint_;
};

// c_1 .. c_n. Throws InvalidArgument for r < 2 or n < 1, OverflowError when
// a term does not fit in 64 bits.
std::vector<std::int64_t> c_sequence(int r, int n);

// The single term c_k, k >= 1.
std::int64_t c_value(int r, int k);

// a_{m,w} = c_m - w c_{m-1}.
std::int64_t a_value(int r, int m, int w);

// P(a,b): height after x east steps is floor(b x / a).
StepWord build_maximal_path(std::int64_t a, std::int64_t b);

enum class Family { D, C };

// The pair (r, n) together with the c-sequence and the D_n geometry.
class FamilyContext {
 public:
  // Longest D_n a context will materialize.
  static constexpr std::int64_t kMaxPathLength = std::int64_t{1} << 24;

  FamilyContext(int r, int n);

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  // 1-based c_k for 1 <= k <= n.
  std::int64_t c(int k) const;
  const std::vector<std::int64_t>& c_values() const noexcept { return c_; }

  // (c_{n-2}, c_{n-1} - c_{n-2}).
  Slope diagonal() const noexcept { return diagonal_; }

  const StepWord& dyck_path() const noexcept { return path_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  // Path index of each corner v_0 .. v_b.
  const std::vector<std::size_t>& corner_positions() const noexcept { return corner_positions_; }
  // Corner index at a path index, or -1.
  std::int64_t corner_at(std::size_t path_index) const { return corner_at_[path_index]; }

  std::size_t edge_count() const noexcept { return path_.size(); }
  // b = c_{n-2}, the index of the last corner.
  std::size_t last_corner() const noexcept { return corner_positions_.size() - 1; }

 private:
  int r_;
  int n_;
  std::vector<std::int64_t> c_;
  Slope diagonal_;
  StepWord path_;
  std::vector<Point> vertices_;
  std::vector<std::size_t> corner_positions_;
  std::vector<std::int64_t> corner_at_;
};

StepWord build_family_path(const FamilyContext& ctx, Family family);

// Letter substitution. Letters without an image are rejected on apply.
class Morphism {
 public:
  Morphism(std::string name, std::map<char, std::string> images);

  static Morphism lambda(int r);  // E -> E^{r-1}N, N -> E^{r-2}N
  static Morphism theta();        // E -> E, N -> EN
  static Morphism psi();          // H -> Hv, v fixed
  static Morphism kappa(int r);   // H -> H^r v, v -> H^{r-1} v
  static Morphism sigma();        // H -> h, v -> V

  const std::string& name() const noexcept { return name_; }
  const std::map<char, std::string>& images() const noexcept { return images_; }

 private:
  std::string name_;
  std::map<char, std::string> images_;
};

// Throws InvalidArgument on a letter outside the morphism's domain.
std::string apply_morphism(std::string_view word, const Morphism& m);
StepWord apply_morphism(const StepWord& word, const Morphism& m);

// Inverse of theta: every N must be preceded by an E it absorbs.
StepWord invert_theta(const StepWord& word);

struct Vertex {
  Point coords;
  std::size_t path_index = 0;
  std::optional<std::size_t> corner_index;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Leftmost vertex at each height, southwest to northeast.
std::vector<Vertex> northwest_corners(const StepWord& word);

// ((r-1)x + (r-2)y, x + y).
Point mu_map(int r, Point v);

std::int64_t pi_value(const FamilyContext& ctx, std::size_t i);

// Compares the slope of u -> w against s. Vertical segments going up are
// greater than any finite slope. Throws InvalidArgument when u == w.
std::strong_ordering slope_compare(Point u, Point w, Slope s);

// Minimal j > i with slope(w_i, w_j) >= diagonal.
std::size_t d_index(const FamilyContext& ctx, std::size_t i);

struct MWPair {
  int m = 0;
  int w = 0;

  friend bool operator==(const MWPair&, const MWPair&) = default;
};

// The (m, w), m >= 3 and 2 <= w <= r-1, with c_m - w c_{m-1} = delta. For
// r = 2 the only admissible distance is 1, tagged (3, 1).
std::optional<MWPair> decompose_distance(int r, std::int64_t delta);

struct TDecomposition {
  std::size_t t = 0;
  MWPair mw;
  // m exceeded n - 2.
  bool beyond_stated_bound = false;
};

// Minimal corner t > i whose slope from v_i exceeds the diagonal, with its
// (m, w). Empty when no such corner exists. Throws InternalInvariantError
// when t - i has no decomposition.
std::optional<TDecomposition> t_decomposition(const FamilyContext& ctx, std::size_t i);

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_PATHS_HPP_
