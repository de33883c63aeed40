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

#include "dyckcluster/compat.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace dyckcluster {

EdgeSet::EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

EdgeSet::EdgeSet(std::size_t universe, std::initializer_list<std::size_t> members) : EdgeSet(universe) {
  for (std::size_t i : members) insert(i);
}

EdgeSet::EdgeSet(std::size_t universe, const std::vector<std::size_t>& members) : EdgeSet(universe) {
  for (std::size_t i : members) insert(i);
}

bool EdgeSet::contains(std::size_t i) const noexcept {
  if (i < 1 || i > universe_) return false;
  return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U;
}

void EdgeSet::insert(std::size_t i) {
  if (i < 1 || i > universe_) {
    throw InvalidArgument("edge index " + std::to_string(i) + " outside 1.." + std::to_string(universe_));
  }
  words_[(i - 1) / 64] |= std::uint64_t{1} << ((i - 1) % 64);
}

void EdgeSet::erase(std::size_t i) {
  if (i < 1 || i > universe_) return;
  words_[(i - 1) / 64] &= ~(std::uint64_t{1} << ((i - 1) % 64));
}

std::size_t EdgeSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::size_t> EdgeSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)) + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::size_t EdgeSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const EdgeSet& set, char prefix) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.indices()) {
    if (!first) out += ",";
    out += prefix + std::to_string(i);
    first = false;
  }
  return out + "}";
}

EdgePair::EdgePair(StepWord host_word, int r_value)
    : host(std::move(host_word)),
      r(r_value),
      s1(static_cast<std::size_t>(host.east_count())),
      s2(static_cast<std::size_t>(host.north_count())) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
}

EdgePair::EdgePair(StepWord host_word, int r_value, EdgeSet horizontal, EdgeSet vertical)
    : host(std::move(host_word)), r(r_value), s1(std::move(horizontal)), s2(std::move(vertical)) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (s1.universe() != static_cast<std::size_t>(host.east_count()) ||
      s2.universe() != static_cast<std::size_t>(host.north_count())) {
    throw InvalidArgument("edge sets do not match the host path");
  }
}

std::string to_string(const EdgePair& pair) {
  return "(" + to_string(pair.s1, 'h') + ", " + to_string(pair.s2, 'v') + ")";
}

namespace {

// Per-position view of a pair: position p (1-based) is the edge alpha_p.
struct PathView {
  std::size_t len = 0;
  std::vector<char> east;      // [p] letter is E
  std::vector<char> selected;  // [p] edge is in S1 or S2
  std::vector<std::size_t> horizontal_pos;  // eta_i -> p
  std::vector<std::size_t> vertical_pos;    // nu_j -> p
  std::vector<std::size_t> rank;            // p -> index within its orientation

  explicit PathView(const StepWord& host) : len(host.size()), east(len + 1, 0), selected(len + 1, 0), rank(len + 1, 0) {
    horizontal_pos.push_back(0);
    vertical_pos.push_back(0);
    for (std::size_t p = 1; p <= len; ++p) {
      if (host[p - 1] == 'E') {
        east[p] = 1;
        rank[p] = horizontal_pos.size();
        horizontal_pos.push_back(p);
      } else {
        rank[p] = vertical_pos.size();
        vertical_pos.push_back(p);
      }
    }
  }

  void load(const EdgePair& pair) {
    std::fill(selected.begin(), selected.end(), 0);
    for (std::size_t i : pair.s1.indices()) selected[horizontal_pos[i]] = 1;
    for (std::size_t j : pair.s2.indices()) selected[vertical_pos[j]] = 1;
  }
};

// Prefix counts over two laps of the path, so that cyclic walks become
// plain index ranges.
struct LapCounts {
  std::vector<std::int64_t> east, north, sel_east, sel_north;

  explicit LapCounts(const PathView& view) {
    std::size_t len = view.len;
    east.assign(2 * len + 1, 0);
    north = sel_east = sel_north = east;
    for (std::size_t x = 1; x <= 2 * len; ++x) {
      std::size_t p = (x - 1) % len + 1;
      bool e = view.east[p] != 0;
      bool s = view.selected[p] != 0;
      east[x] = east[x - 1] + (e ? 1 : 0);
      north[x] = north[x - 1] + (e ? 0 : 1);
      sel_east[x] = sel_east[x - 1] + (e && s ? 1 : 0);
      sel_north[x] = sel_north[x - 1] + (!e && s ? 1 : 0);
    }
  }
};

// Some t strictly between u (after edge pu) and w (after edge pw), pu < pw.
bool pair_satisfied(const LapCounts& lc, std::size_t pu, std::size_t pw, std::int64_t r) {
  for (std::size_t pt = pu + 1; pt < pw; ++pt) {
    if (lc.east[pw] - lc.east[pt] == r * (lc.sel_north[pw] - lc.sel_north[pt])) return true;
    if (lc.north[pt] - lc.north[pu] == r * (lc.sel_east[pt] - lc.sel_east[pu])) return true;
  }
  return false;
}

bool compatible_view(const PathView& view, std::int64_t r) {
  LapCounts lc(view);
  std::size_t len = view.len;
  for (std::size_t h = 1; h <= len; ++h) {
    if (!view.east[h] || !view.selected[h]) continue;
    std::size_t pu = h - 1;
    for (std::size_t e = 1; e <= len; ++e) {
      if (view.east[e] || !view.selected[e]) continue;
      std::size_t pw = pu >= e ? e + len : e;
      if (!pair_satisfied(lc, pu, pw, r)) return false;
    }
  }
  return true;
}

// Walks from the selected edge at position p, backward for a vertical edge
// and forward for a horizontal one, until the opposite-orientation count is r
// times the selected count. Returns the positions collected, or nullopt when
// a full lap never closes. wrapped reports whether the walk left the path.
std::optional<std::vector<std::size_t>> shadow_walk(const PathView& view, std::size_t p, std::int64_t r,
                                                    bool& wrapped) {
  bool vertical = !view.east[p];
  std::size_t len = view.len;
  std::int64_t opposite = 0;
  std::int64_t chosen = 0;
  std::vector<std::size_t> out;
  wrapped = false;
  for (std::size_t k = 0; k < len; ++k) {
    std::size_t q;
    if (vertical) {
      q = p > k ? p - k : p + len - k;
      if (k >= p) wrapped = true;
    } else {
      q = p + k <= len ? p + k : p + k - len;
      if (p + k > len) wrapped = true;
    }
    bool q_east = view.east[q] != 0;
    if (view.selected[q] && q_east != vertical) ++chosen;
    if (q_east == vertical) {
      ++opposite;
      out.push_back(q);
    }
    if (opposite == r * chosen) return out;
  }
  wrapped = true;
  return std::nullopt;
}

}  // namespace

Shadow local_shadow(const EdgePair& pair, std::size_t edge, Orientation side) {
  PathView view(pair.host);
  view.load(pair);
  bool horizontal = side == Orientation::Horizontal;
  if (!(horizontal ? pair.s1 : pair.s2).contains(edge)) {
    throw InvalidArgument("edge " + std::to_string(edge) + " is not in the selected set");
  }
  std::size_t p = horizontal ? view.horizontal_pos[edge] : view.vertical_pos[edge];
  Shadow out;
  out.orientation = horizontal ? Orientation::Vertical : Orientation::Horizontal;
  out.edges = EdgeSet(static_cast<std::size_t>(horizontal ? pair.host.north_count() : pair.host.east_count()));
  bool wrapped = false;
  auto walk = shadow_walk(view, p, pair.r, wrapped);
  if (walk) {
    for (std::size_t q : *walk) out.edges.insert(view.rank[q]);
  } else {
    for (std::size_t i = 1; i <= out.edges.universe(); ++i) out.edges.insert(i);
  }
  return out;
}

Shadow shadow_of(const EdgePair& pair, const EdgeSet& subset, Orientation side) {
  Shadow out;
  bool horizontal = side == Orientation::Horizontal;
  out.orientation = horizontal ? Orientation::Vertical : Orientation::Horizontal;
  out.edges = EdgeSet(static_cast<std::size_t>(horizontal ? pair.host.north_count() : pair.host.east_count()));
  for (std::size_t i : subset.indices()) {
    for (std::size_t q : local_shadow(pair, i, side).edges.indices()) out.edges.insert(q);
  }
  return out;
}

bool has_non_spanning_shadows(const EdgePair& pair) {
  PathView view(pair.host);
  view.load(pair);
  for (std::size_t p = 1; p <= view.len; ++p) {
    if (!view.selected[p]) continue;
    bool wrapped = false;
    auto walk = shadow_walk(view, p, pair.r, wrapped);
    if (!walk || wrapped) return false;
  }
  return true;
}

bool is_compatible(const EdgePair& pair) {
  PathView view(pair.host);
  view.load(pair);
  return compatible_view(view, pair.r);
}

namespace {

void check_host(const StepWord& host, int r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (host.empty()) throw InvalidArgument("host path is empty");
}

void emit_from_view(const PathView& view, std::size_t east_total, std::size_t north_total, const PairVisitor& visit,
                    EdgeSet& s1, EdgeSet& s2) {
  s1 = EdgeSet(east_total);
  s2 = EdgeSet(north_total);
  for (std::size_t p = 1; p <= view.len; ++p) {
    if (!view.selected[p]) continue;
    if (view.east[p]) {
      s1.insert(view.rank[p]);
    } else {
      s2.insert(view.rank[p]);
    }
  }
  visit(s1, s2);
}

class PrunedPairWalker {
 public:
  PrunedPairWalker(const StepWord& host, int r, const PairVisitor& visit, const Limits& limits)
      : view_(host),
        r_(r),
        visit_(visit),
        limits_(limits),
        east_total_(static_cast<std::size_t>(host.east_count())),
        north_total_(static_cast<std::size_t>(host.north_count())) {
    std::size_t len = view_.len;
    east_suffix_.assign(len + 1, 0);
    north_suffix_.assign(len + 1, 0);
    for (std::size_t x = len; x-- > 0;) {
      east_suffix_[x] = east_suffix_[x + 1] + (view_.east[x + 1] ? 1 : 0);
      north_suffix_[x] = north_suffix_[x + 1] + (view_.east[x + 1] ? 0 : 1);
    }
    sel_east_suffix_.assign(len + 1, 0);
    sel_north_suffix_.assign(len + 1, 0);
  }

  void run() { descend(view_.len); }

 private:
  // Positions > p are decided; decide p.
  void descend(std::size_t p) {
    if (p == 0) {
      if (!wrap_pairs_ok()) return;
      if (++emitted_ > limits_.max_objects) {
        throw GuardExceeded("pair enumeration exceeded " + std::to_string(limits_.max_objects) + " objects");
      }
      emit_from_view(view_, east_total_, north_total_, visit_, s1_, s2_);
      return;
    }
    bool e = view_.east[p] != 0;
    view_.selected[p] = 0;
    sel_east_suffix_[p - 1] = sel_east_suffix_[p];
    sel_north_suffix_[p - 1] = sel_north_suffix_[p];
    descend(p - 1);

    view_.selected[p] = 1;
    sel_east_suffix_[p - 1] = sel_east_suffix_[p] + (e ? 1 : 0);
    sel_north_suffix_[p - 1] = sel_north_suffix_[p] + (e ? 0 : 1);
    if (e) {
      for (std::size_t q : selected_verticals_) {
        if (!forward_pair_ok(p - 1, q)) {
          view_.selected[p] = 0;
          return;
        }
      }
      descend(p - 1);
    } else {
      selected_verticals_.push_back(p);
      descend(p - 1);
      selected_verticals_.pop_back();
    }
    view_.selected[p] = 0;
  }

  // Counts over (a, b] for decided positions a >= current frontier.
  std::int64_t east_in(std::size_t a, std::size_t b) const { return east_suffix_[a] - east_suffix_[b]; }
  std::int64_t north_in(std::size_t a, std::size_t b) const { return north_suffix_[a] - north_suffix_[b]; }
  std::int64_t sel_east_in(std::size_t a, std::size_t b) const { return sel_east_suffix_[a] - sel_east_suffix_[b]; }
  std::int64_t sel_north_in(std::size_t a, std::size_t b) const {
    return sel_north_suffix_[a] - sel_north_suffix_[b];
  }

  bool forward_pair_ok(std::size_t pu, std::size_t pw) const {
    for (std::size_t pt = pu + 1; pt < pw; ++pt) {
      if (east_in(pt, pw) == r_ * sel_north_in(pt, pw)) return true;
      if (north_in(pu, pt) == r_ * sel_east_in(pu, pt)) return true;
    }
    return false;
  }

  bool wrap_pairs_ok() const {
    bool any = false;
    for (std::size_t p = 1; p <= view_.len && !any; ++p) any = view_.selected[p] && view_.east[p];
    if (!any || selected_verticals_.empty()) return true;
    LapCounts lc(view_);
    for (std::size_t h = 1; h <= view_.len; ++h) {
      if (!view_.east[h] || !view_.selected[h]) continue;
      for (std::size_t q : selected_verticals_) {
        if (q > h - 1) continue;
        if (!pair_satisfied(lc, h - 1, q + view_.len, r_)) return false;
      }
    }
    return true;
  }

  PathView view_;
  std::int64_t r_;
  const PairVisitor& visit_;
  Limits limits_;
  std::size_t east_total_;
  std::size_t north_total_;
  std::vector<std::int64_t> east_suffix_, north_suffix_, sel_east_suffix_, sel_north_suffix_;
  std::vector<std::size_t> selected_verticals_;
  EdgeSet s1_, s2_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

void for_each_compatible_pair(const StepWord& host, int r, PairStrategy strategy, const PairVisitor& visit,
                              const Limits& limits) {
  check_host(host, r);
  if (strategy == PairStrategy::Pruned) {
    PrunedPairWalker walker(host, r, visit, limits);
    walker.run();
    return;
  }
  std::size_t len = host.size();
  if (len >= 63 || (std::uint64_t{1} << len) > limits.max_subsets) {
    throw GuardExceeded("brute-force scan of " + std::to_string(len) + " edges exceeds " +
                        std::to_string(limits.max_subsets) + " subsets");
  }
  PathView view(host);
  EdgeSet s1, s2;
  std::uint64_t emitted = 0;
  std::uint64_t total = std::uint64_t{1} << len;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t p = 1; p <= len; ++p) view.selected[p] = static_cast<char>((mask >> (p - 1)) & 1U);
    if (!compatible_view(view, r)) continue;
    if (++emitted > limits.max_objects) {
      throw GuardExceeded("pair enumeration exceeded " + std::to_string(limits.max_objects) + " objects");
    }
    emit_from_view(view, static_cast<std::size_t>(host.east_count()), static_cast<std::size_t>(host.north_count()),
                   visit, s1, s2);
  }
}

std::vector<EdgePair> enumerate_compatible_pairs(const StepWord& host, int r, PairStrategy strategy,
                                                 const Limits& limits) {
  std::vector<EdgePair> out;
  for_each_compatible_pair(
      host, r, strategy, [&](const EdgeSet& s1, const EdgeSet& s2) { out.emplace_back(host, r, s1, s2); }, limits);
  return out;
}

namespace {

std::size_t vertex_index_of(const StepWord& word, Point position) {
  auto verts = word.vertices();
  auto it = std::find(verts.begin(), verts.end(), position);
  if (it == verts.end()) throw InvalidArgument("insertion point is not a vertex of the host path");
  return static_cast<std::size_t>(it - verts.begin());
}

EdgeSet splice(const EdgeSet& own, const EdgeSet& inserted, std::size_t j) {
  std::size_t shift = inserted.universe();
  EdgeSet out(own.universe() + shift);
  for (std::size_t i : own.indices()) out.insert(i <= j ? i : i + shift);
  for (std::size_t i : inserted.indices()) out.insert(i + j);
  return out;
}

}  // namespace

EdgePair insert_pair(const EdgePair& host, const EdgePair& inserted, Point position) {
  if (host.r != inserted.r) throw InvalidArgument("inserted pair uses a different r");
  vertex_index_of(host.host, position);
  StepWord word = build_maximal_path(host.host.east_count() + inserted.host.east_count(),
                                     host.host.north_count() + inserted.host.north_count());
  return EdgePair(std::move(word), host.r, splice(host.s1, inserted.s1, static_cast<std::size_t>(position.x)),
                  splice(host.s2, inserted.s2, static_cast<std::size_t>(position.y)));
}

bool splice_is_maximal(const EdgePair& host, const EdgePair& inserted, Point position) {
  std::size_t at = vertex_index_of(host.host, position);
  const std::string& h = host.host.str();
  std::string spliced = h.substr(0, at) + inserted.host.str() + h.substr(at);
  StepWord target = build_maximal_path(host.host.east_count() + inserted.host.east_count(),
                                       host.host.north_count() + inserted.host.north_count());
  return spliced == target.str();
}

PairWord pair_word(const EdgePair& pair) {
  PairWord out;
  out.letters.reserve(pair.host.size());
  std::size_t h = 0;
  std::size_t v = 0;
  for (std::size_t p = 0; p < pair.host.size(); ++p) {
    if (pair.host[p] == 'E') {
      out.letters.push_back(pair.s1.contains(++h) ? 'H' : 'h');
    } else {
      out.letters.push_back(pair.s2.contains(++v) ? 'V' : 'v');
    }
  }
  return out;
}

EdgePair decode_pair_word(const PairWord& word, int r) {
  std::string steps;
  steps.reserve(word.letters.size());
  for (char ch : word.letters) {
    if (ch == 'h' || ch == 'H') {
      steps.push_back('E');
    } else if (ch == 'v' || ch == 'V') {
      steps.push_back('N');
    } else {
      throw InvalidArgument(std::string("pair word letter must be one of hvHV, got '") + ch + "'");
    }
  }
  EdgePair out(StepWord(std::move(steps)), r);
  std::size_t h = 0;
  std::size_t v = 0;
  for (char ch : word.letters) {
    if (ch == 'h' || ch == 'H') {
      ++h;
      if (ch == 'H') out.s1.insert(h);
    } else {
      ++v;
      if (ch == 'V') out.s2.insert(v);
    }
  }
  return out;
}

}  // namespace dyckcluster
