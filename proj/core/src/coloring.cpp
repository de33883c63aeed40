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

#include "dyckcluster/coloring.hpp"

#include <algorithm>

namespace dyckcluster {

namespace {

constexpr std::int64_t kNoCorner = -1;

void check_span_indices(const FamilyContext& ctx, std::size_t i, std::size_t k) {
  if (i >= k || k > ctx.last_corner()) {
    throw InvalidArgument("span corners must satisfy 0 <= i < k <= " + std::to_string(ctx.last_corner()));
  }
}

// Green (m, w) with 3 <= m <= n-2 and 1 <= w <= r-2 such that a_{m,w} = delta.
std::optional<MWPair> green_form(const FamilyContext& ctx, std::int64_t delta) {
  int r = ctx.r();
  for (int m = 3; m <= ctx.n() - 2; ++m) {
    for (int w = 1; w <= r - 2; ++w) {
      if (ctx.c(m) - w * ctx.c(m - 1) == delta) return MWPair{m, w};
    }
  }
  return std::nullopt;
}

Subpath make_span(const FamilyContext& ctx, std::size_t i, std::size_t k, Color color, std::optional<MWPair> mw,
                  bool starts_below) {
  const auto& pos = ctx.corner_positions();
  Subpath sp;
  sp.kind = Subpath::Kind::CornerSpan;
  sp.start = i;
  sp.end = k;
  sp.color = color;
  sp.mw = mw;
  sp.first_edge = pos[i] + (starts_below ? 0 : 1);
  sp.last_edge = pos[k];
  return sp;
}

// Per-corner classification data shared by all spans starting at v_i.
struct CornerInfo {
  std::optional<TDecomposition> td;
  std::optional<MWPair> green;  // Lee-Schiffler only
};

std::vector<CornerInfo> corner_table(const FamilyContext& ctx, Framework framework) {
  std::vector<CornerInfo> table(ctx.last_corner());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i].td = t_decomposition(ctx, i);
    if (framework == Framework::LeeSchiffler && table[i].td) {
      table[i].green = green_form(ctx, static_cast<std::int64_t>(table[i].td->t - i));
    }
  }
  return table;
}

Subpath classify_with(const FamilyContext& ctx, const CornerInfo& info, std::size_t i, std::size_t k,
                      Framework framework) {
  if (!info.td || info.td->t > k) return make_span(ctx, i, k, Color::Blue, std::nullopt, false);
  if (framework == Framework::Simplified) return make_span(ctx, i, k, Color::Brown, info.td->mw, false);
  if (info.green) return make_span(ctx, i, k, Color::Green, info.green, false);
  if (ctx.corner_positions()[i] == 0) throw InternalInvariantError("red span would start before the origin");
  return make_span(ctx, i, k, Color::Red, std::nullopt, true);
}

bool window_covered(const std::vector<std::int64_t>& covered_prefix, std::size_t anchor, std::int64_t need) {
  auto lo = static_cast<std::int64_t>(anchor) - need;
  if (lo < 0) lo = 0;
  return covered_prefix[anchor] - covered_prefix[static_cast<std::size_t>(lo)] > 0;
}

}  // namespace

const char* to_string(Color color) {
  switch (color) {
    case Color::Blue:
      return "blue";
    case Color::Brown:
      return "brown";
    case Color::Green:
      return "green";
    case Color::Red:
      return "red";
  }
  return "?";
}

const char* to_string(Framework framework) {
  return framework == Framework::LeeSchiffler ? "ls" : "simplified";
}

Subpath Subpath::single_edge(std::size_t s) {
  Subpath sp;
  sp.kind = Kind::SingleEdge;
  sp.edge = s;
  sp.first_edge = s;
  sp.last_edge = s;
  return sp;
}

std::string to_string(const Subpath& sp) {
  if (!sp.is_span()) return "alpha" + std::to_string(sp.edge);
  std::string out = "(" + std::to_string(sp.start) + "," + std::to_string(sp.end) + ")[";
  out += to_string(sp.color);
  if (sp.mw) out += "(" + std::to_string(sp.mw->m) + "," + std::to_string(sp.mw->w) + ")";
  return out + "]";
}

std::string to_string(const ColoredCollection& beta) {
  std::string out = "{";
  for (std::size_t j = 0; j < beta.subpaths.size(); ++j) {
    if (j > 0) out += ", ";
    out += to_string(beta.subpaths[j]);
  }
  return out + "}";
}

CollectionStats collection_stats(const ColoredCollection& beta) {
  CollectionStats stats;
  for (const Subpath& sp : beta.subpaths) {
    stats.corners += sp.corner_weight();
    stats.edges += static_cast<std::int64_t>(sp.edge_count());
  }
  return stats;
}

Subpath classify_span(const FamilyContext& ctx, std::size_t i, std::size_t k, Framework framework) {
  check_span_indices(ctx, i, k);
  CornerInfo info;
  info.td = t_decomposition(ctx, i);
  if (framework == Framework::LeeSchiffler && info.td) {
    info.green = green_form(ctx, static_cast<std::int64_t>(info.td->t - i));
  }
  return classify_with(ctx, info, i, k, framework);
}

std::int64_t predecessor_requirement(int r, const Subpath& span, Framework framework) {
  if (!span.is_span() || !span.mw) return 0;
  bool needs = (framework == Framework::Simplified && span.color == Color::Brown) ||
               (framework == Framework::LeeSchiffler && span.color == Color::Green);
  if (!needs) return 0;
  return a_value(r, span.mw->m - 1, span.mw->w);
}

std::optional<std::string> collection_violation(const FamilyContext& ctx, const ColoredCollection& beta) {
  std::size_t len = ctx.edge_count();
  std::vector<std::int64_t> prefix(len + 1, 0);
  const Subpath* prev = nullptr;
  for (const Subpath& sp : beta.subpaths) {
    if (sp.is_span()) {
      if (sp.start >= sp.end || sp.end > ctx.last_corner()) return "span " + to_string(sp) + " out of range";
      if (classify_span(ctx, sp.start, sp.end, beta.framework) != sp) {
        return "span " + to_string(sp) + " does not match its recomputed color";
      }
    } else {
      if (sp.edge < 1 || sp.edge > len) return "edge " + to_string(sp) + " out of range";
      if (Subpath::single_edge(sp.edge) != sp) return "malformed single edge " + to_string(sp);
    }
    if (prev != nullptr) {
      if (prev->last_edge >= sp.first_edge) return "members " + to_string(*prev) + " and " + to_string(sp) + " overlap or are unordered";
      if (prev->is_span() && sp.is_span() && prev->end == sp.start) {
        return "spans " + to_string(*prev) + " and " + to_string(sp) + " meet at a corner";
      }
    }
    for (std::size_t e = sp.first_edge; e <= sp.last_edge; ++e) prefix[e] = 1;
    prev = &sp;
  }
  for (std::size_t e = 1; e <= len; ++e) prefix[e] += prefix[e - 1];
  for (const Subpath& sp : beta.subpaths) {
    std::int64_t need = predecessor_requirement(ctx.r(), sp, beta.framework);
    if (need > 0 && !window_covered(prefix, ctx.corner_positions()[sp.start], need)) {
      return "no covered edge among the " + std::to_string(need) + " edges before " + to_string(sp);
    }
  }
  return std::nullopt;
}

bool is_member(const FamilyContext& ctx, const ColoredCollection& beta) {
  return !collection_violation(ctx, beta).has_value();
}

std::optional<std::uint64_t> expected_collection_count(int r, int n) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (n < 1) throw InvalidArgument("n must be at least 1");
  unsigned __int128 prev = 1;
  unsigned __int128 cur = 1;
  constexpr unsigned __int128 kMax = ~std::uint64_t{0};
  for (int k = 2; k < n; ++k) {
    unsigned __int128 power = 1;
    for (int j = 0; j < r; ++j) {
      power *= cur;
      if (power > kMax) return std::nullopt;
    }
    unsigned __int128 next = (power + 1) / prev;
    prev = cur;
    cur = next;
  }
  return static_cast<std::uint64_t>(cur);
}

namespace {

struct Candidate {
  Subpath span;
  std::size_t anchor = 0;  // path index of v_i
  std::int64_t need = 0;
};

class CollectionWalker {
 public:
  CollectionWalker(const FamilyContext& ctx, Framework framework, const CollectionVisitor& visit,
                   const Limits& limits)
      : len_(ctx.edge_count()), visit_(visit), limits_(limits), starts_(ctx.edge_count()) {
    current_.framework = framework;
    auto table = corner_table(ctx, framework);
    const auto& pos = ctx.corner_positions();
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t k = i + 1; k <= ctx.last_corner(); ++k) {
        Candidate cand;
        cand.span = classify_with(ctx, table[i], i, k, framework);
        cand.anchor = pos[i];
        cand.need = predecessor_requirement(ctx.r(), cand.span, framework);
        starts_[cand.span.first_edge - 1].push_back(cand);
      }
    }
    for (auto& list : starts_) {
      std::stable_sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
        return a.span.last_edge < b.span.last_edge;
      });
    }
    prefix_.assign(len_ + 1, 0);
  }

  void run() { descend(0, kNoCorner); }

 private:
  void descend(std::size_t pos, std::int64_t blocked) {
    if (pos == len_) {
      if (++emitted_ > limits_.max_objects) {
        throw GuardExceeded("collection enumeration exceeded " + std::to_string(limits_.max_objects) + " objects");
      }
      visit_(current_);
      return;
    }
    prefix_[pos + 1] = prefix_[pos];
    descend(pos + 1, kNoCorner);

    prefix_[pos + 1] = prefix_[pos] + 1;
    current_.subpaths.push_back(Subpath::single_edge(pos + 1));
    descend(pos + 1, kNoCorner);
    current_.subpaths.pop_back();

    for (const Candidate& cand : starts_[pos]) {
      if (static_cast<std::int64_t>(cand.span.start) == blocked) continue;
      if (cand.need > 0 && !window_covered(prefix_, cand.anchor, cand.need)) continue;
      for (std::size_t e = pos + 1; e <= cand.span.last_edge; ++e) prefix_[e] = prefix_[e - 1] + 1;
      current_.subpaths.push_back(cand.span);
      descend(cand.span.last_edge, static_cast<std::int64_t>(cand.span.end));
      current_.subpaths.pop_back();
    }
  }

  std::size_t len_;
  const CollectionVisitor& visit_;
  Limits limits_;
  std::vector<std::vector<Candidate>> starts_;
  std::vector<std::int64_t> prefix_;
  ColoredCollection current_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

void for_each_collection(const FamilyContext& ctx, Framework framework, const CollectionVisitor& visit,
                         const Limits& limits) {
  auto expected = expected_collection_count(ctx.r(), ctx.n());
  if (!expected || *expected > limits.max_objects) {
    throw GuardExceeded("F(D_n) for r=" + std::to_string(ctx.r()) + ", n=" + std::to_string(ctx.n()) +
                        " has more than " + std::to_string(limits.max_objects) + " collections");
  }
  CollectionWalker walker(ctx, framework, visit, limits);
  walker.run();
}

std::vector<ColoredCollection> enumerate_collections(const FamilyContext& ctx, Framework framework,
                                                     const Limits& limits) {
  std::vector<ColoredCollection> out;
  for_each_collection(ctx, framework, [&](const ColoredCollection& beta) { out.push_back(beta); }, limits);
  return out;
}

ColoredCollection chi_map(const FamilyContext& ctx, const ColoredCollection& lsbeta) {
  if (lsbeta.framework != Framework::LeeSchiffler) throw InvalidArgument("chi expects a Lee-Schiffler collection");
  if (auto why = collection_violation(ctx, lsbeta)) throw InvalidArgument("not in F(D_n): " + *why);
  ColoredCollection out;
  out.framework = Framework::Simplified;
  for (const Subpath& sp : lsbeta.subpaths) {
    if (!sp.is_span()) {
      out.subpaths.push_back(sp);
      continue;
    }
    if (sp.color == Color::Red) out.subpaths.push_back(Subpath::single_edge(sp.first_edge));
    out.subpaths.push_back(classify_span(ctx, sp.start, sp.end, Framework::Simplified));
  }
  return out;
}

ComplementaryDecomposition complementary_decomposition(const FamilyContext& ctx, const ColoredCollection& beta) {
  if (beta.framework != Framework::Simplified) {
    throw InvalidArgument("complementary decomposition expects a simplified collection");
  }
  const auto& members = beta.subpaths;
  std::size_t t = members.size();
  ComplementaryDecomposition out;
  out.parts.resize(t + 1);
  for (std::size_t j = 0; j <= t; ++j) {
    std::size_t lo = j == 0 ? 0 : members[j - 1].last_edge;
    std::size_t hi = j == t ? ctx.edge_count() : members[j].first_edge - 1;
    ComplementPart& part = out.parts[j];
    for (std::size_t e = lo + 1; e <= hi; ++e) part.edges.push_back(e);
    bool skip_lo = j == 0 || members[j - 1].is_span();
    for (std::size_t p = lo; p <= hi; ++p) {
      std::int64_t corner = ctx.corner_at(p);
      if (corner < 0 || (p == lo && skip_lo)) continue;
      part.corners.push_back(static_cast<std::size_t>(corner));
    }
  }
  return out;
}

std::vector<Subpath> atomic_decomposition(const FamilyContext& ctx, const Subpath& span) {
  if (!span.is_span() || (span.color != Color::Blue && span.color != Color::Brown)) {
    throw InvalidArgument("atomic decomposition expects a blue or brown span");
  }
  check_span_indices(ctx, span.start, span.end);
  std::vector<Subpath> out;
  std::size_t cur = span.start;
  while (cur < span.end) {
    auto td = t_decomposition(ctx, cur);
    if (!td || td->t > span.end) {
      out.push_back(make_span(ctx, cur, span.end, Color::Blue, std::nullopt, false));
      break;
    }
    out.push_back(make_span(ctx, cur, td->t, Color::Brown, td->mw, false));
    cur = td->t;
  }
  return out;
}

}  // namespace dyckcluster
