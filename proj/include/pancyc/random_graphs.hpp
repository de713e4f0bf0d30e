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


#ifndef PANCYC_RANDOM_GRAPHS_HPP_
#define PANCYC_RANDOM_GRAPHS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "json.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

std::uint64_t splitmix64(std::uint64_t x);

// (seed, stream_id) pins down every random choice of one trial.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  // Independent stream for a named sub-task of the same trial.
  RngSeed derive(std::uint64_t purpose) const;
};

// mt19937_64 seeded from seed ^ splitmix64(stream_id). Bounded draws use our
// own rejection so results do not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(RngSeed s);

  std::uint64_t next() { return engine_(); }
  bool bernoulli(double p);
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1).
  double uniform();

 private:
  std::mt19937_64 engine_;
};

struct GnpParams {
  int n = 0;
  double p = 0.0;
  std::optional<double> C;  // set when p came from C * n^{-1/2}

  static GnpParams explicit_p(int n, double p);
  // p = min(1, C / sqrt(n)).
  static GnpParams threshold(int n, double C);
  void validate() const;
};

enum class AdversaryKind { TriangleBreaker, BipartiteEven, NearBipartiteOdd, UniformThin };

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::UniformThin;
  double keep_fraction = 1.0;  // UniformThin only

  void validate(int n) const;
};

std::string to_string(AdversaryKind kind);
// Accepts the CamelCase names and the kebab-case CLI spellings.
AdversaryKind adversary_from_string(const std::string& name);

Graph sample_gnp(const GnpParams& params, RngSeed seed);

struct PlantedGraph {
  Graph graph;
  CycleLabeling labeling;
  // Cycle edges that were not already in the random sample.
  std::int64_t planted_edges = 0;
};

// G(n,p) plus the cycle 0-1-...-(n-1) under the identity labeling.
PlantedGraph plant_hamilton(const GnpParams& params, RngSeed seed);

// Keeps each edge independently with probability q.
Graph subsample_coupling(const Graph& g, double q, RngSeed seed);

// Deletes one non-cycle edge from every triangle until none is left.
Graph adversary_triangle_breaker(const Graph& g, const CycleLabeling& labeling);
// Removes edges between equal-parity labels. Even n only.
Graph adversary_bipartite_even(const Graph& g, const CycleLabeling& labeling);
// Parity coloring with the single odd edge {0, n-1}. Odd n only.
Graph adversary_near_bipartite_odd(const Graph& g, const CycleLabeling& labeling);
// Cycle edges plus a random subset of the other edges, ceil(keep * e(G))
// edges in total (at least n). For a fixed seed the kept sets are nested in
// keep_fraction.
Graph adversary_uniform_thin(const Graph& g, const CycleLabeling& labeling, double keep_fraction,
                             RngSeed seed);

struct AdversaryOutcome {
  Graph graph;
  nlohmann::json record;  // {"kind", "removed", "kept", "seed"}
};

AdversaryOutcome apply_adversary(const Graph& g, const CycleLabeling& labeling,
                                 const AdversarySpec& adversary, RngSeed seed);

// exp(-eps^2 * mean / 3).
double chernoff_tail(double mean, double eps);

}  // namespace pancyc

#endif  // PANCYC_RANDOM_GRAPHS_HPP_
