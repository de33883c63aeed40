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

#include <gtest/gtest.h>

#include <set>

#include "dyckcluster/coloring.hpp"
#include "support.hpp"

namespace dc = dyckcluster;
using testing_support::key;
using testing_support::span_collection;

namespace {

struct Grid {
  int r;
  int n;
};

// Small enough for the subset oracle.
const std::vector<Grid> kOracleGrid = {{2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 3}, {3, 4},
                                       {3, 5}, {4, 3}, {4, 4}, {4, 5}, {5, 4}, {6, 4}};

std::set<std::string> library_keys(const dc::FamilyContext& ctx, dc::Framework fw) {
  std::set<std::string> out;
  dc::for_each_collection(ctx, fw, [&](const dc::ColoredCollection& beta) {
    EXPECT_TRUE(out.insert(key(beta)).second) << "repeated " << key(beta);
  });
  return out;
}

std::set<std::string> oracle_keys(int r, int n, oracle::Rule rule) {
  std::set<std::string> out;
  for (const auto& c : oracle::collections(r, n, rule)) out.insert(oracle::key(c));
  return out;
}

dc::ColoredCollection ls_collection(const dc::FamilyContext& ctx, std::initializer_list<std::pair<int, int>> items) {
  dc::ColoredCollection beta;
  beta.framework = dc::Framework::LeeSchiffler;
  for (auto [a, b] : items) {
    if (b < 0) {
      beta.subpaths.push_back(dc::Subpath::single_edge(static_cast<std::size_t>(a)));
    } else {
      beta.subpaths.push_back(dc::classify_span(ctx, static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                                dc::Framework::LeeSchiffler));
    }
  }
  std::sort(beta.subpaths.begin(), beta.subpaths.end(),
            [](const dc::Subpath& x, const dc::Subpath& y) { return x.first_edge < y.first_edge; });
  return beta;
}

TEST(Classify, Examples) {
  dc::FamilyContext d5(3, 5);
  EXPECT_EQ(dc::classify_span(d5, 0, 1, dc::Framework::Simplified).color, dc::Color::Blue);
  auto brown = dc::classify_span(d5, 2, 3, dc::Framework::Simplified);
  EXPECT_EQ(brown.color, dc::Color::Brown);
  EXPECT_EQ(brown.mw, (dc::MWPair{3, 2}));
  dc::FamilyContext d6(3, 6);
  auto red = dc::classify_span(d6, 2, 5, dc::Framework::LeeSchiffler);
  EXPECT_EQ(red.color, dc::Color::Red);
  EXPECT_EQ(red.first_edge, d6.corner_positions()[2]);
  EXPECT_THROW(dc::classify_span(d5, 2, 2, dc::Framework::Simplified), dc::InvalidArgument);
  EXPECT_THROW(dc::classify_span(d5, 0, 4, dc::Framework::Simplified), dc::InvalidArgument);
}

TEST(Classify, FullSpanIsBlue) {
  for (int r = 2; r <= 5; ++r) {
    for (int n = 4; n <= 7; ++n) {
      dc::FamilyContext ctx(r, n);
      for (auto fw : {dc::Framework::Simplified, dc::Framework::LeeSchiffler}) {
        EXPECT_EQ(dc::classify_span(ctx, 0, ctx.last_corner(), fw).color, dc::Color::Blue);
      }
    }
  }
}

TEST(Enumerate, SmallCounts) {
  auto d3 = dc::enumerate_collections(dc::FamilyContext(3, 3), dc::Framework::Simplified);
  ASSERT_EQ(d3.size(), 2u);
  EXPECT_EQ(key(d3[0]), "");
  EXPECT_EQ(key(d3[1]), "a1");
  EXPECT_EQ(dc::enumerate_collections(dc::FamilyContext(3, 4), dc::Framework::Simplified).size(), 9u);
  EXPECT_EQ(dc::enumerate_collections(dc::FamilyContext(3, 5), dc::Framework::Simplified).size(), 365u);
}

TEST(Enumerate, SimplifiedMatchesSubsetOracle) {
  for (auto [r, n] : kOracleGrid) {
    auto got = library_keys(dc::FamilyContext(r, n), dc::Framework::Simplified);
    EXPECT_EQ(got, oracle_keys(r, n, oracle::Rule::Simplified)) << "r=" << r << " n=" << n;
    EXPECT_EQ(got.size(), *oracle::recurrence_count(r, n));
  }
}

TEST(Enumerate, LeeSchifflerMatchesSubsetOracle) {
  for (auto [r, n] : kOracleGrid) {
    auto got = library_keys(dc::FamilyContext(r, n), dc::Framework::LeeSchiffler);
    EXPECT_EQ(got, oracle_keys(r, n, oracle::Rule::LeeSchiffler)) << "r=" << r << " n=" << n;
    EXPECT_EQ(got.size(), *oracle::recurrence_count(r, n));
  }
}

TEST(Enumerate, CountsMatchRecurrenceOnLargerGrid) {
  for (Grid g : std::vector<Grid>{{2, 9}, {2, 10}, {3, 6}, {4, 5}, {5, 4}}) {
    dc::FamilyContext ctx(g.r, g.n);
    std::uint64_t count = 0;
    dc::for_each_collection(ctx, dc::Framework::Simplified, [&](const dc::ColoredCollection&) { ++count; });
    EXPECT_EQ(count, *oracle::recurrence_count(g.r, g.n)) << "r=" << g.r << " n=" << g.n;
    EXPECT_EQ(dc::expected_collection_count(g.r, g.n), oracle::recurrence_count(g.r, g.n));
  }
}

TEST(Enumerate, EveryVisitedCollectionIsAMember) {
  for (int r = 2; r <= 4; ++r) {
    for (int n = 3; n <= 5; ++n) {
      dc::FamilyContext ctx(r, n);
      for (auto fw : {dc::Framework::Simplified, dc::Framework::LeeSchiffler}) {
        for (const auto& beta : dc::enumerate_collections(ctx, fw)) {
          ASSERT_EQ(dc::collection_violation(ctx, beta), std::nullopt) << key(beta);
        }
      }
    }
  }
}

TEST(Enumerate, OrderIsDeterministic) {
  dc::FamilyContext ctx(3, 5);
  auto a = dc::enumerate_collections(ctx, dc::Framework::Simplified);
  auto b = dc::enumerate_collections(ctx, dc::Framework::Simplified);
  EXPECT_EQ(a, b);
}

TEST(Enumerate, GuardAbortsInsteadOfTruncating) {
  dc::FamilyContext ctx(3, 5);
  dc::Limits tight;
  tight.max_objects = 100;
  EXPECT_THROW(dc::enumerate_collections(ctx, dc::Framework::Simplified, tight), dc::GuardExceeded);
  EXPECT_THROW(dc::enumerate_collections(dc::FamilyContext(3, 9), dc::Framework::Simplified), dc::GuardExceeded);
}

TEST(Membership, RejectsBrokenCollections) {
  dc::FamilyContext d5(3, 5);
  // Brown gamma(2,3) needs one of the a_{2,2} = 1 edges before v_2 covered.
  EXPECT_FALSE(dc::is_member(d5, span_collection(d5, {{2, 3}})));
  EXPECT_FALSE(dc::is_member(d5, span_collection(d5, {{5, -1}, {2, 3}})));
  EXPECT_TRUE(dc::is_member(d5, span_collection(d5, {{6, -1}, {2, 3}})));
  // Overlapping members.
  EXPECT_FALSE(dc::is_member(d5, span_collection(d5, {{1, -1}, {0, 1}})));
  // Two spans meeting at v_1.
  EXPECT_FALSE(dc::is_member(d5, span_collection(d5, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(dc::is_member(d5, span_collection(d5, {{0, 1}, {6, -1}, {2, 3}})));
}

TEST(Stats, Examples) {
  dc::FamilyContext d5(3, 5);
  EXPECT_EQ(dc::collection_stats(span_collection(d5, {{0, 1}, {6, -1}, {2, 3}})), (dc::CollectionStats{2, 6}));
  EXPECT_EQ(dc::collection_stats(dc::ColoredCollection{}), (dc::CollectionStats{0, 0}));
  dc::FamilyContext d6(3, 6);
  auto six = span_collection(d6, {{0, 1}, {4, -1}, {6, -1}, {2, 5}, {16, -1}, {6, 8}});
  EXPECT_TRUE(dc::is_member(d6, six));
  EXPECT_EQ(dc::collection_stats(six), (dc::CollectionStats{6, 19}));
}

TEST(Chi, Example) {
  dc::FamilyContext d6(3, 6);
  auto ls = ls_collection(d6, {{0, 1}, {4, -1}, {2, 5}, {16, -1}, {6, 8}});
  ASSERT_TRUE(dc::is_member(d6, ls));
  auto got = dc::chi_map(d6, ls);
  auto expect = span_collection(d6, {{0, 1}, {4, -1}, {6, -1}, {2, 5}, {16, -1}, {6, 8}});
  EXPECT_EQ(key(got), key(expect));
  EXPECT_EQ(dc::chi_map(d6, dc::ColoredCollection{dc::Framework::LeeSchiffler, {}}).subpaths.size(), 0u);
  dc::FamilyContext d5(3, 5);
  auto blue = ls_collection(d5, {{0, 1}});
  EXPECT_EQ(key(dc::chi_map(d5, blue)), "g0-1:blue");
}

TEST(Chi, BijectionPreservingStatistics) {
  for (auto [r, n] : std::vector<Grid>{{2, 6}, {2, 7}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 4}}) {
    dc::FamilyContext ctx(r, n);
    auto simplified = library_keys(ctx, dc::Framework::Simplified);
    std::set<std::string> image;
    dc::for_each_collection(ctx, dc::Framework::LeeSchiffler, [&](const dc::ColoredCollection& ls) {
      auto s = dc::chi_map(ctx, ls);
      EXPECT_EQ(dc::collection_stats(s), dc::collection_stats(ls));
      EXPECT_TRUE(dc::is_member(ctx, s)) << key(ls);
      image.insert(key(s));
    });
    EXPECT_EQ(image, simplified) << "r=" << r << " n=" << n;
  }
}

TEST(Complement, Examples) {
  dc::FamilyContext d5(3, 5);
  auto parts = dc::complementary_decomposition(d5, span_collection(d5, {{0, 1}, {6, -1}, {2, 3}})).parts;
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_TRUE(parts[0].edges.empty() && parts[0].corners.empty());
  EXPECT_EQ(parts[1].edges, (std::vector<std::size_t>{4, 5}));
  EXPECT_TRUE(parts[1].corners.empty());
  EXPECT_EQ(parts[2].corners, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(parts[2].edges.empty());
  EXPECT_TRUE(parts[3].edges.empty() && parts[3].corners.empty());

  dc::FamilyContext d6(3, 6);
  auto six = span_collection(d6, {{0, 1}, {4, -1}, {6, -1}, {2, 5}, {16, -1}, {6, 8}});
  auto p6 = dc::complementary_decomposition(d6, six).parts;
  ASSERT_EQ(p6.size(), 7u);
  std::vector<std::pair<std::int64_t, std::int64_t>> counts;
  for (const auto& p : p6) counts.emplace_back(p.corner_count(), p.edge_count());
  EXPECT_EQ(counts, (std::vector<std::pair<std::int64_t, std::int64_t>>{
                        {0, 0}, {0, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 0}}));
  EXPECT_EQ(p6[2].edges, (std::vector<std::size_t>{5}));
  EXPECT_EQ(p6[3].corners, (std::vector<std::size_t>{2}));
  EXPECT_EQ(p6[4].edges, (std::vector<std::size_t>{15}));
  EXPECT_EQ(p6[5].corners, (std::vector<std::size_t>{6}));

  auto empty = dc::complementary_decomposition(d6, dc::ColoredCollection{}).parts;
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].edge_count(), d6.c(5));
  EXPECT_EQ(empty[0].corner_count(), d6.c(4));
}

TEST(Complement, EdgeTotals) {
  for (int r = 2; r <= 4; ++r) {
    for (int n = 3; n <= 5; ++n) {
      dc::FamilyContext ctx(r, n);
      dc::for_each_collection(ctx, dc::Framework::Simplified, [&](const dc::ColoredCollection& beta) {
        auto parts = dc::complementary_decomposition(ctx, beta).parts;
        std::int64_t edges = 0;
        for (const auto& p : parts) edges += p.edge_count();
        EXPECT_EQ(edges, ctx.c(n - 1) - dc::collection_stats(beta).edges);
        EXPECT_EQ(parts.size(), beta.subpaths.size() + 1);
        EXPECT_TRUE(std::find(parts[0].corners.begin(), parts[0].corners.end(), 0) == parts[0].corners.end());
      });
    }
  }
}

TEST(Atomic, Examples) {
  dc::FamilyContext d6(3, 6);
  auto parts = dc::atomic_decomposition(d6, dc::classify_span(d6, 2, 5, dc::Framework::Simplified));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(key({dc::Framework::Simplified, {parts[0]}}), "g2-3:brown(3,2)");
  EXPECT_EQ(key({dc::Framework::Simplified, {parts[1]}}), "g3-5:blue");
  dc::FamilyContext d5(3, 5);
  auto blue = dc::classify_span(d5, 0, 1, dc::Framework::Simplified);
  EXPECT_EQ(dc::atomic_decomposition(d5, blue), std::vector<dc::Subpath>{blue});
  auto brown = dc::classify_span(d5, 2, 3, dc::Framework::Simplified);
  EXPECT_EQ(dc::atomic_decomposition(d5, brown), std::vector<dc::Subpath>{brown});
}

// Every Brown(m, w) atom is lambda^{m-2}(E^{r-w-1} N), of length a_{m+1,w}; the
// a_{m-1,w} edges before it read like a Brown(m-2, w) atom, or E^{a-1} N when
// a_{m-1,w} < r.
TEST(Atomic, BrownAtomStructure) {
  for (int r = 3; r <= 5; ++r) {
    for (int n = 4; n <= 7; ++n) {
      dc::FamilyContext ctx(r, n);
      const std::string& word = ctx.dyck_path().str();
      auto atom_word = [&](int m, int w) {
        std::string s = std::string(static_cast<std::size_t>(r - w - 1), 'E') + "N";
        for (int j = 0; j < m - 2; ++j) s = dc::apply_morphism(s, dc::Morphism::lambda(r));
        return s;
      };
      int seen = 0;
      for (std::size_t i = 0; i < ctx.last_corner(); ++i) {
        for (std::size_t k = i + 1; k <= ctx.last_corner(); ++k) {
          auto span = dc::classify_span(ctx, i, k, dc::Framework::Simplified);
          auto atoms = dc::atomic_decomposition(ctx, span);
          for (std::size_t a = 0; a + 1 < atoms.size(); ++a) EXPECT_EQ(atoms[a].color, dc::Color::Brown);
          for (std::size_t a = 0; a + 1 < atoms.size(); ++a) EXPECT_EQ(atoms[a].end, atoms[a + 1].start);
          EXPECT_EQ(atoms.front().start, i);
          EXPECT_EQ(atoms.back().end, k);
          for (const auto& atom : atoms) {
            if (atom.color != dc::Color::Brown) continue;
            ++seen;
            auto [m, w] = *atom.mw;
            std::string got = word.substr(atom.first_edge - 1, atom.edge_count());
            EXPECT_EQ(got, atom_word(m, w)) << "r=" << r << " n=" << n << " " << dc::to_string(atom);
            EXPECT_EQ(static_cast<std::int64_t>(atom.edge_count()), dc::a_value(r, m + 1, w));
            std::int64_t before = dc::a_value(r, m - 1, w);
            std::size_t anchor = ctx.corner_positions()[atom.start];
            if (static_cast<std::int64_t>(anchor) < before) continue;
            std::string prefix = word.substr(anchor - static_cast<std::size_t>(before), static_cast<std::size_t>(before));
            std::string expect =
                before < r ? std::string(static_cast<std::size_t>(before - 1), 'E') + "N" : atom_word(m - 2, w);
            EXPECT_EQ(prefix, expect) << "r=" << r << " n=" << n << " " << dc::to_string(atom);
          }
        }
      }
      if (n >= 5) EXPECT_GT(seen, 0) << "r=" << r << " n=" << n;
    }
  }
}

TEST(PredecessorRule, WeightedWindowMatchesRecurrence) {
  // The window c_{m-1} - w c_{m-2} reproduces the recurrence counts. The
  // fixed window c_{m-1} - 2 c_{m-2} agrees when every Brown span has w = 2;
  // the counts it produces are recorded for r >= 4.
  for (auto [r, n] : std::vector<Grid>{{3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 4}, {6, 4}}) {
    auto expect = *oracle::recurrence_count(r, n);
    EXPECT_EQ(oracle::collections(r, n, oracle::Rule::Simplified).size(), expect);
    auto literal = oracle::collections(r, n, oracle::Rule::SimplifiedLiteral).size();
    if (r == 3) EXPECT_EQ(literal, expect);
    if (r == 4 && n == 5) EXPECT_EQ(literal, 41765u);
    RecordProperty("fixed_window_r" + std::to_string(r) + "_n" + std::to_string(n), static_cast<int>(literal));
  }
}

}  // namespace
