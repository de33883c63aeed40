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

#include <map>
#include <random>

#include "dyckcluster/bijection.hpp"
#include "dyckcluster/compat.hpp"
#include "support.hpp"

namespace dc = dyckcluster;

namespace {

dc::EdgePair make_pair(const std::string& host, int r, std::vector<std::size_t> s1, std::vector<std::size_t> s2) {
  dc::StepWord w(host);
  return dc::EdgePair(w, r, dc::EdgeSet(static_cast<std::size_t>(w.east_count()), s1),
                      dc::EdgeSet(static_cast<std::size_t>(w.north_count()), s2));
}

std::string c_of(int r, int n) { return dc::build_family_path(dc::FamilyContext(r, n), dc::Family::C).str(); }

// Maximal paths with a + b <= max_len, a >= 1.
std::vector<std::string> small_hosts(int max_len) {
  std::vector<std::string> out;
  for (int a = 1; a <= max_len; ++a) {
    for (int b = 0; a + b <= max_len; ++b) out.push_back(dc::build_maximal_path(a, b).str());
  }
  return out;
}

TEST(EdgeSetTest, Basics) {
  dc::EdgeSet s(70, {1, 64, 70});
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.size(), 3u);
  s.erase(64);
  s.insert(2);
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{1, 2, 70}));
  EXPECT_THROW(s.insert(71), dc::InvalidArgument);
  EXPECT_THROW(s.insert(0), dc::InvalidArgument);
  EXPECT_EQ(dc::to_string(dc::EdgeSet(5, {2, 4}), 'h'), "{h2,h4}");
  EXPECT_LT(dc::EdgeSet(3, {1}), dc::EdgeSet(3, {2}));
}

TEST(EdgePairTest, ValidatesUniverses) {
  dc::StepWord w("EEN");
  EXPECT_THROW(dc::EdgePair(w, 3, dc::EdgeSet(3), dc::EdgeSet(1)), dc::InvalidArgument);
  EXPECT_NO_THROW(dc::EdgePair(w, 3, dc::EdgeSet(2), dc::EdgeSet(1)));
}

TEST(Shadow, Examples) {
  auto p = make_pair("EEEN", 3, {}, {1});
  auto sh = dc::local_shadow(p, 1, dc::Orientation::Vertical);
  EXPECT_EQ(sh.edges.indices(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(sh.orientation, dc::Orientation::Horizontal);

  auto q = make_pair("EEEN", 3, {3}, {});
  auto sv = dc::local_shadow(q, 3, dc::Orientation::Horizontal);
  EXPECT_EQ(sv.edges.indices(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(sv.orientation, dc::Orientation::Vertical);

  for (const auto& host : small_hosts(8)) {
    dc::StepWord w(host);
    for (int r = 2; r <= 3; ++r) {
      auto first = make_pair(host, r, {1}, {});
      auto expect = std::min<std::int64_t>(w.north_count(), r);
      EXPECT_EQ(static_cast<std::int64_t>(dc::local_shadow(first, 1, dc::Orientation::Horizontal).edges.size()),
                expect)
          << host;
    }
  }
  EXPECT_THROW(dc::local_shadow(q, 2, dc::Orientation::Horizontal), dc::InvalidArgument);
}

TEST(Compatible, Examples) {
  EXPECT_TRUE(dc::is_compatible(make_pair("EENEN", 3, {}, {})));
  EXPECT_FALSE(dc::is_compatible(make_pair("EEEN", 3, {1}, {1})));
  EXPECT_TRUE(dc::is_compatible(make_pair(c_of(3, 5), 3, {4, 5}, {1, 3})));
}

TEST(Compatible, AgreesWithDefinitionOnSmallHosts) {
  for (const auto& host : small_hosts(9)) {
    dc::StepWord w(host);
    std::size_t len = host.size();
    for (int r = 2; r <= 3; ++r) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::vector<std::size_t> s1, s2;
        std::size_t h = 0, v = 0;
        for (std::size_t p = 0; p < len; ++p) {
          bool east = host[p] == 'E';
          std::size_t idx = east ? ++h : ++v;
          if (mask >> p & 1) (east ? s1 : s2).push_back(idx);
        }
        ASSERT_EQ(dc::is_compatible(make_pair(host, r, s1, s2)), oracle::compatible(host, r, s1, s2))
            << host << " r=" << r << " mask=" << mask;
      }
    }
  }
}

TEST(EnumeratePairs, Examples) {
  auto c3 = dc::enumerate_compatible_pairs(dc::StepWord(c_of(3, 3)), 3);
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_TRUE(c3[0].s1.empty() && c3[0].s2.empty());
  EXPECT_EQ(c3[1].s1.indices(), (std::vector<std::size_t>{1}));

  auto c4 = dc::enumerate_compatible_pairs(dc::StepWord(c_of(3, 4)), 3);
  ASSERT_EQ(c4.size(), 9u);
  int with_vertical = 0;
  for (const auto& p : c4) {
    if (p.s2.empty()) continue;
    ++with_vertical;
    EXPECT_TRUE(p.s1.empty());
    EXPECT_EQ(p.s2.indices(), (std::vector<std::size_t>{1}));
  }
  EXPECT_EQ(with_vertical, 1);
  EXPECT_EQ(dc::enumerate_compatible_pairs(dc::StepWord(c_of(3, 5)), 3).size(), 365u);
}

TEST(EnumeratePairs, StrategiesAndOracleAgree) {
  std::vector<std::pair<std::string, int>> hosts;
  for (const auto& h : small_hosts(9)) {
    hosts.emplace_back(h, 2);
    hosts.emplace_back(h, 3);
  }
  hosts.emplace_back(c_of(3, 5), 3);
  hosts.emplace_back(c_of(2, 7), 2);
  hosts.emplace_back(c_of(4, 4), 4);
  for (const auto& [host, r] : hosts) {
    dc::StepWord w(host);
    auto brute = dc::enumerate_compatible_pairs(w, r, dc::PairStrategy::BruteForce);
    auto pruned = dc::enumerate_compatible_pairs(w, r, dc::PairStrategy::Pruned);
    ASSERT_EQ(brute, pruned) << host << " r=" << r;
    auto expect = oracle::compatible_pairs(host, r);
    ASSERT_EQ(brute.size(), expect.size()) << host << " r=" << r;
    for (std::size_t i = 0; i < expect.size(); ++i) {
      EXPECT_EQ(brute[i].s1.indices(), expect[i].first);
      EXPECT_EQ(brute[i].s2.indices(), expect[i].second);
    }
  }
}

TEST(EnumeratePairs, PrunedMatchesCountsOnFamilyHosts) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 8}, {3, 5}, {4, 5}}) {
    std::uint64_t count = 0;
    dc::for_each_compatible_pair(dc::StepWord(c_of(r, n)), r, dc::PairStrategy::Pruned,
                                 [&](const dc::EdgeSet&, const dc::EdgeSet&) { ++count; });
    EXPECT_EQ(count, *oracle::recurrence_count(r, n)) << "r=" << r << " n=" << n;
  }
}

TEST(EnumeratePairs, GuardAborts) {
  dc::Limits tight;
  tight.max_subsets = 1 << 10;
  EXPECT_THROW(dc::enumerate_compatible_pairs(dc::StepWord(c_of(3, 5)), 3, dc::PairStrategy::BruteForce, tight),
               dc::GuardExceeded);
  dc::Limits few;
  few.max_objects = 50;
  EXPECT_THROW(dc::enumerate_compatible_pairs(dc::StepWord(c_of(3, 5)), 3, dc::PairStrategy::Pruned, few),
               dc::GuardExceeded);
}

TEST(Shadow, LengthLawForWholeSides) {
  int checked = 0;
  for (const auto& host : small_hosts(9)) {
    dc::StepWord w(host);
    for (int r = 2; r <= 3; ++r) {
      for (const auto& p : dc::enumerate_compatible_pairs(w, r)) {
        auto h = dc::shadow_of(p, p.s1, dc::Orientation::Horizontal);
        auto v = dc::shadow_of(p, p.s2, dc::Orientation::Vertical);
        auto r64 = static_cast<std::int64_t>(r);
        EXPECT_EQ(static_cast<std::int64_t>(h.edges.size()),
                  std::min(w.north_count(), r64 * static_cast<std::int64_t>(p.s1.size())));
        EXPECT_EQ(static_cast<std::int64_t>(v.edges.size()),
                  std::min(w.east_count(), r64 * static_cast<std::int64_t>(p.s2.size())));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Shadow, AtomicBrownImageSpan) {
  int seen = 0;
  for (int r = 3; r <= 4; ++r) {
    for (int n = 5; n <= 6; ++n) {
      dc::FamilyContext ctx(r, n);
      dc::StepWord host = dc::build_family_path(ctx, dc::Family::C);
      for (std::size_t i = 0; i < ctx.last_corner(); ++i) {
        for (std::size_t k = i + 1; k <= ctx.last_corner(); ++k) {
          auto span = dc::classify_span(ctx, i, k, dc::Framework::Simplified);
          if (span.color != dc::Color::Brown || dc::atomic_decomposition(ctx, span).size() != 1) continue;
          ++seen;
          dc::EdgePair p(host, r);
          for (std::size_t s = i + 1; s <= k; ++s) p.s2.insert(s);
          auto [m, w] = *span.mw;
          auto sh = dc::shadow_of(p, p.s2, dc::Orientation::Vertical);
          EXPECT_EQ(static_cast<std::int64_t>(sh.edges.size()), dc::a_value(r, m + 1, w) + dc::a_value(r, m - 1, w))
              << "r=" << r << " n=" << n << " " << dc::to_string(span);
        }
      }
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Compatible, ClosedUnderDeletion) {
  for (const auto& host : small_hosts(9)) {
    dc::StepWord w(host);
    for (int r = 2; r <= 3; ++r) {
      for (const auto& p : dc::enumerate_compatible_pairs(w, r)) {
        for (std::size_t i : p.s1.indices()) {
          auto q = p;
          q.s1.erase(i);
          ASSERT_TRUE(dc::is_compatible(q)) << dc::to_string(p);
        }
        for (std::size_t j : p.s2.indices()) {
          auto q = p;
          q.s2.erase(j);
          ASSERT_TRUE(dc::is_compatible(q)) << dc::to_string(p);
        }
      }
    }
  }
}

TEST(Insert, Examples) {
  auto empty_edge = make_pair("E", 3, {}, {});
  auto host = make_pair(c_of(3, 4), 3, {1, 3}, {1});
  auto spliced = dc::insert_pair(host, empty_edge, {0, 0});
  EXPECT_EQ(spliced.host.str(), "E" + c_of(3, 4));
  EXPECT_EQ(spliced.s1.indices(), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(spliced.s2.indices(), (std::vector<std::size_t>{1}));

  auto one = make_pair("E", 3, {1}, {});
  auto doubled = dc::insert_pair(one, one, {1, 0});
  EXPECT_EQ(doubled.host.str(), "EE");
  EXPECT_EQ(doubled.s1.indices(), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(doubled.s2.empty());

  EXPECT_THROW(dc::insert_pair(host, one, {1, 1}), dc::InvalidArgument);
  EXPECT_THROW(dc::insert_pair(host, make_pair("E", 2, {}, {}), {0, 0}), dc::InvalidArgument);
}

TEST(Insert, PreservesCompatibilityUnderPreconditions) {
  std::mt19937_64 rng(20240607);
  std::vector<std::string> hosts = small_hosts(8);
  std::map<std::pair<std::string, int>, std::vector<dc::EdgePair>> cache;
  int cases = 0;
  int attempts = 0;
  while (cases < 1500 && attempts < 400000) {
    ++attempts;
    int r = 2 + static_cast<int>(rng() % 2);
    const std::string& hw = hosts[rng() % hosts.size()];
    const std::string& iw = hosts[rng() % hosts.size()];
    dc::StepWord host_word(hw);
    dc::StepWord ins_word(iw);
    auto verts = host_word.vertices();
    dc::Point at = verts[rng() % verts.size()];
    auto pairs_of = [&](const std::string& w) -> const std::vector<dc::EdgePair>& {
      auto key = std::make_pair(w, r);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, dc::enumerate_compatible_pairs(dc::StepWord(w), r)).first;
      return it->second;
    };
    const auto& host_pairs = pairs_of(hw);
    const auto& ins_pairs = pairs_of(iw);
    const auto& hp = host_pairs[rng() % host_pairs.size()];
    const auto& ip = ins_pairs[rng() % ins_pairs.size()];
    if (!dc::splice_is_maximal(hp, ip, at) || !dc::has_non_spanning_shadows(ip)) continue;
    auto out = dc::insert_pair(hp, ip, at);
    ASSERT_TRUE(oracle::compatible(out.host.str(), r, out.s1.indices(), out.s2.indices()))
        << dc::to_string(hp) << " + " << dc::to_string(ip) << " at (" << at.x << "," << at.y << ")";
    EXPECT_EQ(out.s1.size(), hp.s1.size() + ip.s1.size());
    EXPECT_EQ(out.s2.size(), hp.s2.size() + ip.s2.size());
    ++cases;
  }
  EXPECT_GE(cases, 1000);
}

TEST(PairWordTest, Examples) {
  dc::FamilyContext d6(3, 6);
  auto empty = dc::phi(d6, dc::ColoredCollection{});
  EXPECT_EQ(dc::pair_word(empty).letters, "HHHvHHHvHHvHHHvHHHvHHvHHHvHHv");
  auto six = testing_support::span_collection(d6, {{0, 1}, {4, -1}, {6, -1}, {2, 5}, {16, -1}, {6, 8}});
  EXPECT_EQ(dc::pair_word(dc::phi(d6, six)).letters, "hhhVhHhvhhVhhhVhhhVHhvhhhVhhV");
  EXPECT_EQ(dc::pair_word(make_pair(c_of(3, 4), 3, {}, {})).letters, "hhhv");
  EXPECT_THROW(dc::decode_pair_word({"hxv"}, 3), dc::InvalidArgument);
}

TEST(PairWordTest, RoundTrips) {
  for (const auto& host : small_hosts(7)) {
    for (const auto& p : dc::enumerate_compatible_pairs(dc::StepWord(host), 3)) {
      EXPECT_EQ(dc::decode_pair_word(dc::pair_word(p), 3), p);
    }
  }
}

}  // namespace
