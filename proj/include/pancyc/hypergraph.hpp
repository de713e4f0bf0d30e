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


#ifndef PANCYC_HYPERGRAPH_HPP_
#define PANCYC_HYPERGRAPH_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pancyc/cycle_geometry.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/random_graphs.hpp"

namespace pancyc {

inline constexpr int kDefaultGuardN = 60;

// Row-major index of {u, v} (u < v) in the upper triangle of K_n.
int edge_index(const Edge& e, int n);
Edge edge_at(int index, int n);

// 4-uniform hypergraph on E(K_n) whose hyperedges are the l-shortcuts.
struct ShortcutHypergraph {
  int n = 0;
  int l = 0;
  std::vector<std::array<std::int32_t, 4>> hyperedges;  // sorted, unique

  std::int64_t vertex_count() const { return static_cast<std::int64_t>(n) * (n - 1) / 2; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(hyperedges.size()); }
  double density_constant() const;  // |E| / n^4
};

// Throws std::invalid_argument when n exceeds guard_n or l is out of range.
ShortcutHypergraph build_shortcut_hypergraph(int n, int l, int guard_n = kDefaultGuardN);

// Distinct l-shortcuts with all four chords in g.
std::int64_t count_shortcuts(const Graph& g, const CycleLabeling& labeling, int l,
                             int guard_n = kDefaultGuardN);

// Hypergraph vertices (edge indices) of g in label space.
std::vector<std::int32_t> edge_indices_of(const Graph& g, const CycleLabeling& labeling);

struct DensityReport {
  double alpha = 0.5;
  double eps = 0;
  double f_eps = 0;  // (eps/16)^8
  std::int64_t subset_size = 0;
  std::int64_t induced = 0;
  std::int64_t total = 0;
  bool pass = false;

  nlohmann::json to_json() const;
};

// Requires |U| >= (1/2 + eps)|V(H)|; throws std::invalid_argument otherwise.
DensityReport check_density(const ShortcutHypergraph& h, const std::vector<std::int32_t>& subset,
                            double eps);

struct BoundednessEstimate {
  int i = 1;
  double q = 1;
  int trials = 1;
  double mean = 0;        // of sum_v deg_i(v, V_q)^2
  double std_error = 0;
  double unit = 0;        // q^{2i} |E|^2 / |V|
  double k_estimate = 0;  // mean / unit

  nlohmann::json to_json() const;
};

// Monte-Carlo estimate of E[sum_v deg_i(v, V_q)^2] for i in {1, 2, 3}.
// Requires p <= q <= 1 and trials >= 1.
BoundednessEstimate estimate_boundedness(const ShortcutHypergraph& h, double p, double q, int i,
                                         int trials, RngSeed seed);

// Same samples for i = 1, 2, 3 at once; index k holds i = k + 1.
std::array<BoundednessEstimate, 3> estimate_boundedness_all(const ShortcutHypergraph& h, double p,
                                                            double q, int trials, RngSeed seed);

// Appends "n,l,edges,c" to a CSV file, writing the header for a new file.
void append_regression_row(const std::string& path, const ShortcutHypergraph& h);

}  // namespace pancyc

#endif  // PANCYC_HYPERGRAPH_HPP_
