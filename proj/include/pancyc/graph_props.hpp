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


#ifndef PANCYC_GRAPH_PROPS_HPP_
#define PANCYC_GRAPH_PROPS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

// Lexicographically first triangle (a < b < c), if any.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

std::int64_t count_triangles(const Graph& g);

// Proper 2-coloring (0/1 per vertex), or nothing if an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// |N(a) ∩ N(b)|.
int codegree(const Graph& g, Vertex a, Vertex b);

// Vertices at distance exactly 2 from v.
std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v);

// Number of edges with both ends in `set`.
std::int64_t edges_inside(const Graph& g, const std::vector<Vertex>& set);

}  // namespace pancyc

#endif  // PANCYC_GRAPH_PROPS_HPP_
