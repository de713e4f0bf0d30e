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


#ifndef PANCYC_APPENDIX_HPP_
#define PANCYC_APPENDIX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pancyc/cycle_finder.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/random_graphs.hpp"

namespace pancyc {

// The maximal subgraph of minimum degree >= d, kept on the same vertex ids.
struct PeeledCore {
  std::vector<Vertex> vertices;  // ascending
  Graph graph;                   // edges inside `vertices` only
};

// Repeatedly deletes vertices of degree < d. Empty core gives nothing.
std::optional<PeeledCore> peel_min_degree(const Graph& g, int d);

// Induced subgraph renumbered 0..k-1 in the order of `vertices` (k >= 3).
Graph compact_induced(const Graph& g, const std::vector<Vertex>& vertices);

struct PosaPath {
  std::vector<Vertex> path;  // path.front() is the requested endpoint
  int length() const { return static_cast<int>(path.size()) - 1; }
};

// A set X that was checked against |N(X) \ X| >= 2|X| - 1.
struct ExpansionFailure {
  std::vector<Vertex> set;
  int boundary = 0;        // |N(X) \ X|
  bool violates = false;   // boundary < 2|X| - 1
  std::string found_by;    // "exact", "sampled" or "rotation"
};

using PosaResult = std::variant<PosaPath, ExpansionFailure>;

struct PosaOptions {
  int sampled_sets = 256;  // random connected sets per size in 4..t
  std::uint64_t seed = 0x5eed;
  long long dfs_budget = 2000000;
};

// Rotation-extension from v until the path has 3t - 2 edges. All |X| <= 3
// are checked first (only sets of low-degree vertices can fail), larger X
// are sampled, and a stuck rotation hands back its endpoint set.
PosaResult posa_path(const Graph& g, Vertex v, int t, const PosaOptions& opt = {});

// |N(X) \ X|.
int outer_boundary(const Graph& g, const std::vector<Vertex>& set);

// Random connected sets of size 1..max_size; counts those with
// |N(X) \ X| < 2|X|.
struct ExpansionSample {
  int samples = 0;
  int failures = 0;
  std::optional<std::vector<Vertex>> first_failure;
};
ExpansionSample sample_expansion(const Graph& g, int max_size, int samples, RngSeed seed);

struct SpecialVertex {
  Vertex w = 0;
  std::int64_t second_edges = 0;  // e(N^(2)(w))
  double threshold = 0;           // (eps/16) n^2 p
  bool threshold_met = false;
  std::string branch;             // "v0", "v1" or "argmax"
  std::optional<std::string> warning;
};

SpecialVertex find_special_vertex(const Graph& g, double eps, double p);

struct ShortCycleOptions {
  // Replaces the eps*n/25600 length cap and switches to the relaxed layering
  // in which the reserve of neighbours of w is split off N(w) itself.
  std::optional<int> cap_override;
};

// Cycles of lengths 5..cap through a special vertex w, as certificates under
// the identity labeling. Never assumes a Hamilton cycle.
CycleSpectrum short_cycles_without_hamilton(const Graph& g, double eps, double p,
                                            const ShortCycleOptions& opt = {});

}  // namespace pancyc

#endif  // PANCYC_APPENDIX_HPP_
