// Copyright 2026 The pancyc Authors
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

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pancyc/cycle_geometry.hpp"

namespace pancyc {
namespace {

TEST(CircDistance, Examples) {
  EXPECT_EQ(circ_distance(3, 10), 3);
  EXPECT_EQ(circ_distance(7, 10), 3);
  EXPECT_EQ(circ_distance(0, 10), 0);
  EXPECT_EQ(circ_distance(-3, 10), 3);
  EXPECT_EQ(circ_distance(25, 10), 5);
}

TEST(DirectionOf, Examples) {
  EXPECT_EQ(direction_of(Edge{2, 5}, 10), 7);
  EXPECT_EQ(direction_of(Edge{3, 7}, 10), 0);
  EXPECT_EQ(direction_of(Edge{0, 1}, 10), 1);
}

TEST(ScaledLength, FloorsWithGuard) {
  EXPECT_EQ(scaled_length(0.1, 50), 5);
  EXPECT_EQ(scaled_length(0.2, 10), 2);
  EXPECT_EQ(scaled_length(0.001, 10), 1);
}

TEST(DirectionSlice, EvenDirectionOfTen) {
  const auto s = direction_slice(10, 0);
  const std::vector<Edge> want{{1, 9}, {2, 8}, {3, 7}, {4, 6}};
  EXPECT_EQ(s.ordered_edges, want);
  const auto w = s.window(1, scaled_length(0.2, 10));
  EXPECT_EQ(std::vector<Edge>(w.begin(), w.end()), (std::vector<Edge>{{1, 9}, {2, 8}}));
}

TEST(DirectionSlice, MiddleDropsBothEnds) {
  const auto s = direction_slice(40, 0);  // 19 edges
  const auto m = s.middle(scaled_length(0.2, 40));
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.front(), s.ordered_edges[8]);
  EXPECT_EQ(m.back(), s.ordered_edges[10]);
  EXPECT_TRUE(direction_slice(10, 0).middle(2).empty());
}

TEST(DirectionSlice, WindowClampsAtEnd) {
  const auto s = direction_slice(10, 3);
  EXPECT_EQ(s.window(s.size(), 4).size(), 1u);
  EXPECT_EQ(s.window(s.size() + 3, 4).size(), 0u);
  EXPECT_THROW((void)s.window(0, 2), std::invalid_argument);
}

// Slices partition the non-loop pairs, are sorted outward from i/2, and
// rank_in_direction inverts them.
TEST(DirectionSlice, PartitionOrderAndRanks) {
  for (int n : {7, 8, 10, 13, 30}) {
    std::set<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i) {
      const auto s = direction_slice(n, i);
      int prev = -1;
      for (int r = 0; r < s.size(); ++r) {
        const Edge& e = s.ordered_edges[static_cast<std::size_t>(r)];
        EXPECT_EQ((e.u + e.v) % n, i);
        EXPECT_TRUE(all.emplace(e.u, e.v).second);
        EXPECT_EQ(rank_in_direction(e, n), r);
        // doubled circular distance of an endpoint from the point i/2
        const int twice = std::min(((2 * e.u - i) % (2 * n) + 2 * n) % (2 * n),
                                   ((i - 2 * e.u) % (2 * n) + 2 * n) % (2 * n));
        EXPECT_GT(twice, prev);
        prev = twice;
      }
    }
    EXPECT_EQ(static_cast<int>(all.size()), n * (n - 1) / 2);
  }
}

TEST(Crossing, Examples) {
  EXPECT_TRUE(is_crossing(Edge{0, 4}, Edge{2, 6}, 8));
  EXPECT_FALSE(is_crossing(Edge{0, 4}, Edge{1, 2}, 8));
  EXPECT_FALSE(is_crossing(Edge{0, 4}, Edge{4, 6}, 8));
  EXPECT_TRUE(is_close_crossing(Edge{0, 50}, Edge{1, 60}, 100, 0.05));
  EXPECT_FALSE(is_close_crossing(Edge{0, 50}, Edge{20, 70}, 100, 0.05));
  EXPECT_TRUE(is_close_crossing(Edge{0, 50}, Edge{20, 70}, 100, 0.25));
}

TEST(Crossing, AgreesWithRotationOracle) {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 5000; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 40);
    auto pick = [&] {
      int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % n);
      while (b == a) b = static_cast<int>(rng() % n);
      return Edge::make(a, b);
    };
    const Edge e = pick();
    const Edge f = pick();
    EXPECT_EQ(is_crossing(e, f, n), oracle::crosses(e, f, n));
    EXPECT_EQ(is_crossing(e, f, n), is_crossing(f, e, n));
    const double beta = 0.01 + (rng() % 100) / 700.0;
    EXPECT_EQ(is_close_crossing(e, f, n, beta), oracle::close_cross(e, f, n, scaled_length(beta, n)));
  }
}

TEST(Shortcut, ValidationExamples) {
  const Shortcut s1{ShortcutVariant::I, 0, 4, 8, 14, 0};
  EXPECT_TRUE(validate_shortcut(s1, 20));
  EXPECT_EQ(s1.points(20), (std::array<Vertex, 8>{0, 1, 4, 5, 8, 9, 14, 15}));
  EXPECT_FALSE(validate_shortcut(Shortcut{ShortcutVariant::I, 0, 1, 8, 14, 0}, 20));
  const Shortcut s2{ShortcutVariant::II, 0, 4, 17, 9, 3};
  EXPECT_EQ(s2.points(20), (std::array<Vertex, 8>{0, 1, 4, 5, 9, 13, 17, 18}));
  EXPECT_TRUE(validate_shortcut(s2, 20));
  EXPECT_FALSE(validate_shortcut(Shortcut{ShortcutVariant::II, 0, 4, 12, 9, 3}, 20));
  EXPECT_FALSE(validate_shortcut(s1, 7));
}

TEST(Shortcut, VariantOneExampleCycles) {
  const int n = 20;
  const Shortcut s{ShortcutVariant::I, 0, 4, 8, 14, 0};
  const auto [small, big] = cycles_from_shortcut(s, n);
  EXPECT_EQ(small.vertices, (std::vector<Vertex>{0, 8, 9, 5, 4, 15, 14, 1}));
  EXPECT_EQ(big.t, 20);
  Graph g = Graph::cycle(n);
  for (const Edge& e : s.edges(n)) g.add_edge(e);
  const auto lab = CycleLabeling::identity(n);
  EXPECT_TRUE(verify_certificate(g, lab, small));
  EXPECT_TRUE(verify_certificate(g, lab, big));
  EXPECT_TRUE(oracle::certificate_ok(g, lab, big));
}

TEST(Shortcut, RejectsInvalidInput) {
  EXPECT_THROW(cycles_from_shortcut(Shortcut{ShortcutVariant::I, 0, 1, 8, 14, 0}, 20),
               std::invalid_argument);
}

// Every valid shortcut up to n = 14: both certificates live in C_n plus the
// four chords and have lengths l+8 and n-l; brute force agrees the lengths
// are cycle lengths of C_n plus the chords.
TEST(Shortcut, ExhaustiveSmallInstances) {
  for (int n = 8; n <= 12; ++n) {
    const auto lab = CycleLabeling::identity(n);
    for (int l = 0; 2 * l <= n; ++l) {
      for (auto var : {ShortcutVariant::I, ShortcutVariant::II}) {
        for (int i2 = 0; i2 < n; ++i2)
          for (int i3 = 0; i3 < n; ++i3)
            for (int i4 = 0; i4 < n; ++i4) {
              const Shortcut s{var, 0, i2, i3, i4, l};
              if (!validate_shortcut(s, n)) continue;
              Graph g = Graph::cycle(n);
              for (const Edge& e : s.edges(n)) g.add_edge(e);
              const auto [small, big] = cycles_from_shortcut(s, n);
              ASSERT_EQ(small.t, l + 8);
              ASSERT_EQ(big.t, n - l);
              ASSERT_TRUE(oracle::certificate_ok(g, lab, small));
              ASSERT_TRUE(oracle::certificate_ok(g, lab, big));
              const auto lengths = oracle::all_cycle_lengths(g);
              ASSERT_TRUE(lengths.count(l + 8) && lengths.count(n - l));
            }
      }
    }
  }
}

TEST(CrossingCycles, TenVertexExample) {
  const int n = 10;
  const auto cp = make_crossing_pair(Edge{1, 9}, Edge{0, 3}, n, 0.1);
  EXPECT_EQ(cp.i, 0);
  EXPECT_EQ(cp.l, 3);
  const auto [near, far] = cycles_from_crossing(cp, n);
  Graph g = Graph::cycle(n);
  g.add_edge(1, 9);
  g.add_edge(0, 3);
  const auto lab = CycleLabeling::identity(n);
  // same cycles as [9,1,2,3,0] and [0,3,4,5,6,7,8,9,1], up to rotation
  auto canonical = [](std::vector<Vertex> v) {
    std::vector<Vertex> best = v;
    for (int flip = 0; flip < 2; ++flip) {
      for (std::size_t r = 0; r < v.size(); ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        best = std::min(best, v);
      }
      std::reverse(v.begin(), v.end());
    }
    return best;
  };
  EXPECT_EQ(canonical(near.vertices), canonical({9, 1, 2, 3, 0}));
  EXPECT_EQ(canonical(far.vertices), canonical({0, 3, 4, 5, 6, 7, 8, 9, 1}));
  EXPECT_TRUE(verify_certificate(g, lab, near));
  EXPECT_TRUE(verify_certificate(g, lab, far));
}

TEST(CrossingCycles, HalfwayOffsetGivesEqualLengths) {
  const int n = 12;
  const auto cp = make_crossing_pair(Edge{0, 4}, Edge{2, 8}, n, 0.1);
  ASSERT_EQ(cp.l, 6);
  const auto [a, b] = cycles_from_crossing(cp, n);
  EXPECT_EQ(a.t, n / 2 + 2);
  EXPECT_EQ(b.t, n / 2 + 2);
}

TEST(CrossingCycles, RejectsBadPairs) {
  EXPECT_THROW(cycles_from_crossing(make_crossing_pair(Edge{0, 4}, Edge{1, 2}, 8, 0.1), 8),
               std::invalid_argument);
  auto cp = make_crossing_pair(Edge{0, 4}, Edge{2, 6}, 8, 0.1);
  cp.l += 1;
  EXPECT_THROW(cycles_from_crossing(cp, 8), std::invalid_argument);
}

TEST(CrossingCycles, RandomPairsHaveLawfulLengths) {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 3000; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 200);
    std::set<int> pts;
    while (pts.size() < 4) pts.insert(static_cast<int>(rng() % n));
    std::vector<int> p(pts.begin(), pts.end());
    Edge e1 = Edge::make(p[0], p[2]);
    Edge e2 = Edge::make(p[1], p[3]);
    if (rng() % 2) std::swap(e1, e2);
    const auto cp = make_crossing_pair(e1, e2, n, 0.1);
    const int l = (((e2.u + e2.v) - (e1.u + e1.v)) % n + n) % n;
    const auto [near, far] = cycles_from_crossing(cp, n);
    ASSERT_EQ(near.t, l + 2);
    ASSERT_EQ(far.t, n - l + 2);
    Graph g = Graph::cycle(n);
    g.add_edge(e1);
    g.add_edge(e2);
    const auto lab = CycleLabeling::identity(n);
    ASSERT_TRUE(oracle::certificate_ok(g, lab, near));
    ASSERT_TRUE(oracle::certificate_ok(g, lab, far));
  }
}

TEST(CloseCrossingRanks, CountsAndCoveringWindows) {
  const int n = 50;
  const double beta = 0.1;
  const int reach = scaled_length(beta, n);
  for (int i = 0; i < n; ++i) {
    const auto s = direction_slice(n, i);
    for (int l = 2 * reach + 1; l < n - 2 * reach; l += 7) {
      const int dir = (i + l) % n;
      const auto other = direction_slice(n, dir);
      for (const Edge& e : s.ordered_edges) {
        std::vector<int> brute;
        for (int r = 0; r < other.size(); ++r) {
          if (oracle::close_cross(e, other.ordered_edges[static_cast<std::size_t>(r)], n, reach)) brute.push_back(r);
        }
        const auto ranks = close_crossing_ranks(e, dir, n, beta);
        ASSERT_EQ(ranks, brute);
        ASSERT_LE(static_cast<int>(ranks.size()), 2 * reach);
        const auto cover = covering_windows(ranks, reach);
        ASSERT_TRUE(cover.has_value());
        for (int r : ranks) {
          const bool in1 = r >= cover->first - 1 && r < cover->first - 1 + reach;
          const bool in2 = r >= cover->second - 1 && r < cover->second - 1 + reach;
          ASSERT_TRUE(in1 || in2);
        }
      }
    }
  }
}

TEST(CoveringWindows, EdgeCases) {
  EXPECT_EQ(covering_windows({}, 3), (std::pair{1, 1}));
  EXPECT_EQ(covering_windows({4, 5, 6}, 3), (std::pair{5, 5}));
  EXPECT_EQ(covering_windows({0, 10}, 3), (std::pair{1, 11}));
  EXPECT_FALSE(covering_windows({0, 10, 20}, 3).has_value());
}

}  // namespace
}  // namespace pancyc
