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

#include "pancyc/graph_props.hpp"

#include <bit>
#include <deque>

namespace pancyc {

namespace {

int and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  const int words = g.words_per_row();
  for (Vertex a = 0; a < g.n(); ++a) {
    const auto ra = g.row(a);
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      const auto rb = g.row(b);
      // first common neighbour above b
      for (int w = b / 64; w < words; ++w) {
        std::uint64_t common = ra[static_cast<std::size_t>(w)] & rb[static_cast<std::size_t>(w)];
        if (w == b / 64) common &= ~((std::uint64_t{2} << (b % 64)) - 1);
        if (common != 0) return std::array<Vertex, 3>{a, b, w * 64 + std::countr_zero(common)};
      }
    }
  }
  return std::nullopt;
}

std::int64_t count_triangles(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) total += and_popcount(g.row(e.u), g.row(e.v));
  return total / 3;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        auto& cy = color[static_cast<std::size_t>(y)];
        if (cy == -1) {
          cy = 1 - color[static_cast<std::size_t>(x)];
          queue.push_back(y);
        } else if (cy == color[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

int codegree(const Graph& g, Vertex a, Vertex b) { return and_popcount(g.row(a), g.row(b)); }

std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v) {
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(g.words_per_row()), 0);
  for (Vertex x : g.neighbors(v)) {
    const auto r = g.row(x);
    for (std::size_t w = 0; w < reach.size(); ++w) reach[w] |= r[w];
  }
  const auto own = g.row(v);
  for (std::size_t w = 0; w < reach.size(); ++w) reach[w] &= ~own[w];
  reach[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64));
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < reach.size(); ++w) {
    std::uint64_t bits = reach[w];
    while (bits != 0) {
      out.push_back(static_cast<Vertex>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::int64_t edges_inside(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(g.words_per_row()), 0);
  for (Vertex x : set) mask[static_cast<std::size_t>(x / 64)] |= std::uint64_t{1} << (x % 64);
  std::int64_t twice = 0;
  for (Vertex x : set) twice += and_popcount(g.row(x), mask);
  return twice / 2;
}

}  // namespace pancyc
