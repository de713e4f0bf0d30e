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

#include "pancyc/random_graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pancyc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngSeed RngSeed::derive(std::uint64_t purpose) const {
  return RngSeed{seed ^ splitmix64(purpose ^ 0xD1B54A32D192ED03ULL), stream_id};
}

Rng::Rng(RngSeed s) : engine_(s.seed ^ splitmix64(s.stream_id)) {}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const long double scaled = std::ldexp(static_cast<long double>(p), 64);
  const auto threshold = static_cast<std::uint64_t>(scaled);
  return next() < threshold;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

GnpParams GnpParams::explicit_p(int n, double p) {
  GnpParams g{n, p, std::nullopt};
  g.validate();
  return g;
}

GnpParams GnpParams::threshold(int n, double C) {
  if (!(C > 0.0)) throw std::invalid_argument("threshold constant C must be positive");
  GnpParams g{n, std::min(1.0, C / std::sqrt(static_cast<double>(n))), C};
  g.validate();
  return g;
}

void GnpParams::validate() const {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (C && !(*C > 0.0)) throw std::invalid_argument("C must be positive");
}

void AdversarySpec::validate(int n) const {
  switch (kind) {
    case AdversaryKind::BipartiteEven:
      if (n % 2 != 0) throw std::invalid_argument("bipartite-even adversary needs even n");
      break;
    case AdversaryKind::NearBipartiteOdd:
      if (n % 2 == 0) throw std::invalid_argument("near-bipartite-odd adversary needs odd n");
      break;
    case AdversaryKind::TriangleBreaker:
      if (n <= 3) throw std::invalid_argument("triangle-breaker adversary needs n > 3");
      break;
    case AdversaryKind::UniformThin:
      break;
  }
  if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
    throw std::invalid_argument("keep fraction must lie in (0, 1]");
  }
}

std::string to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::TriangleBreaker: return "TriangleBreaker";
    case AdversaryKind::BipartiteEven: return "BipartiteEven";
    case AdversaryKind::NearBipartiteOdd: return "NearBipartiteOdd";
    case AdversaryKind::UniformThin: return "UniformThin";
  }
  return "?";
}

AdversaryKind adversary_from_string(const std::string& name) {
  if (name == "TriangleBreaker" || name == "triangle-breaker") return AdversaryKind::TriangleBreaker;
  if (name == "BipartiteEven" || name == "bipartite-even") return AdversaryKind::BipartiteEven;
  if (name == "NearBipartiteOdd" || name == "near-bipartite-odd") {
    return AdversaryKind::NearBipartiteOdd;
  }
  if (name == "UniformThin" || name == "uniform-thin") return AdversaryKind::UniformThin;
  throw std::invalid_argument("unknown adversary '" + name + "'");
}

Graph sample_gnp(const GnpParams& params, RngSeed seed) {
  params.validate();
  Graph g(params.n);
  if (params.p <= 0.0) return g;
  if (params.p >= 1.0) return Graph::complete(params.n);
  Rng rng(seed.derive(1));
  for (Vertex u = 0; u < params.n; ++u) {
    for (Vertex v = u + 1; v < params.n; ++v) {
      if (rng.bernoulli(params.p)) g.add_edge(u, v);
    }
  }
  return g;
}

PlantedGraph plant_hamilton(const GnpParams& params, RngSeed seed) {
  Graph g = sample_gnp(params, seed);
  std::int64_t planted = 0;
  for (Vertex u = 0; u < params.n; ++u) {
    if (g.add_edge(u, (u + 1) % params.n)) ++planted;
  }
  return PlantedGraph{std::move(g), CycleLabeling::identity(params.n), planted};
}

Graph subsample_coupling(const Graph& g, double q, RngSeed seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
  Graph out(g.n());
  Rng rng(seed.derive(2));
  for (const Edge& e : g.edges()) {
    if (rng.bernoulli(q)) out.add_edge(e);
  }
  return out;
}

namespace {

void require_witness(const Graph& g, const CycleLabeling& labeling) {
  if (!labeling.is_hamilton_witness(g)) {
    throw std::invalid_argument("labeling does not witness a Hamilton cycle of the graph");
  }
}

bool label_cycle_edge(const CycleLabeling& labeling, Vertex a, Vertex b) {
  return is_cycle_edge(Edge::make(labeling.label(a), labeling.label(b)), labeling.size());
}

}  // namespace

Graph adversary_triangle_breaker(const Graph& g, const CycleLabeling& labeling) {
  require_witness(g, labeling);
  if (g.n() <= 3) throw std::invalid_argument("triangle-breaker adversary needs n > 3");
  const int n = g.n();
  Graph h = labeling.to_label_space(g);
  const int words = h.words_per_row();
  std::vector<std::uint64_t> common(static_cast<std::size_t>(words));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : h.neighbors(a)) {
      if (b <= a) continue;
      const auto ra = h.row(a);
      const auto rb = h.row(b);
      for (int w = 0; w < words; ++w) {
        common[static_cast<std::size_t>(w)] = ra[static_cast<std::size_t>(w)] & rb[static_cast<std::size_t>(w)];
      }
      for (int w = b / 64; w < words && h.has_edge(a, b); ++w) {
        std::uint64_t bits = common[static_cast<std::size_t>(w)];
        if (w == b / 64) bits &= ~((std::uint64_t{2} << (b % 64)) - 1);
        while (bits != 0 && h.has_edge(a, b)) {
          const Vertex c = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (!h.has_edge(a, c) || !h.has_edge(b, c)) continue;
          // lexicographically largest non-cycle edge of a < b < c
          if (!is_cycle_edge(Edge{b, c}, n)) {
            h.remove_edge(b, c);
          } else if (!is_cycle_edge(Edge{a, c}, n)) {
            h.remove_edge(a, c);
          } else {
            h.remove_edge(a, b);
          }
        }
      }
    }
  }
  return labeling.from_label_space(h);
}

Graph adversary_bipartite_even(const Graph& g, const CycleLabeling& labeling) {
  if (g.n() % 2 != 0) throw std::invalid_argument("bipartite-even adversary needs even n");
  require_witness(g, labeling);
  Graph out = g;
  for (const Edge& e : g.edges()) {
    if (labeling.label(e.u) % 2 == labeling.label(e.v) % 2) out.remove_edge(e);
  }
  return out;
}

Graph adversary_near_bipartite_odd(const Graph& g, const CycleLabeling& labeling) {
  const int n = g.n();
  if (n % 2 == 0) throw std::invalid_argument("near-bipartite-odd adversary needs odd n");
  require_witness(g, labeling);
  const Vertex x = 0;
  const Vertex y = n - 1;
  const Edge odd_edge{x, y};
  const Edge at_x{0, 1};
  const Edge at_y{n - 2, n - 1};
  Graph out = g;
  for (const Edge& e : g.edges()) {
    const Edge le = Edge::make(labeling.label(e.u), labeling.label(e.v));
    if (le == odd_edge || le == at_x || le == at_y) continue;
    const bool same_class = le.u % 2 == le.v % 2;
    if (same_class || le.touches(x) || le.touches(y)) out.remove_edge(e);
  }
  return out;
}

Graph adversary_uniform_thin(const Graph& g, const CycleLabeling& labeling, double keep_fraction,
                             RngSeed seed) {
  if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
    throw std::invalid_argument("keep fraction must lie in (0, 1]");
  }
  require_witness(g, labeling);
  const std::int64_t total = g.edge_count();
  auto target = static_cast<std::int64_t>(std::ceil(keep_fraction * static_cast<double>(total) - 1e-9));
  target = std::clamp<std::int64_t>(target, g.n(), total);

  Graph out(g.n());
  std::vector<std::pair<std::uint64_t, Edge>> keyed;
  Rng rng(seed.derive(3));
  for (const Edge& e : g.edges()) {
    // every edge draws a key so the stream does not depend on the fraction
    const std::uint64_t key = rng.next();
    if (label_cycle_edge(labeling, e.u, e.v)) {
      out.add_edge(e);
    } else {
      keyed.emplace_back(key, e);
    }
  }
  const auto extra = static_cast<std::size_t>(target - g.n());
  std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(extra), keyed.end());
  for (std::size_t k = 0; k < extra; ++k) out.add_edge(keyed[k].second);
  return out;
}

AdversaryOutcome apply_adversary(const Graph& g, const CycleLabeling& labeling,
                                 const AdversarySpec& adversary, RngSeed seed) {
  adversary.validate(g.n());
  Graph out = [&] {
    switch (adversary.kind) {
      case AdversaryKind::TriangleBreaker: return adversary_triangle_breaker(g, labeling);
      case AdversaryKind::BipartiteEven: return adversary_bipartite_even(g, labeling);
      case AdversaryKind::NearBipartiteOdd: return adversary_near_bipartite_odd(g, labeling);
      case AdversaryKind::UniformThin:
        return adversary_uniform_thin(g, labeling, adversary.keep_fraction, seed);
    }
    throw std::logic_error("unhandled adversary kind");
  }();
  nlohmann::json record = {{"kind", to_string(adversary.kind)},
                           {"removed", g.edge_count() - out.edge_count()},
                           {"kept", out.edge_count()},
                           {"seed", seed.seed}};
  return AdversaryOutcome{std::move(out), std::move(record)};
}

double chernoff_tail(double mean, double eps) {
  if (mean < 0.0 || eps < 0.0) throw std::invalid_argument("chernoff_tail needs mean, eps >= 0");
  return std::exp(-eps * eps * mean / 3.0);
}

}  // namespace pancyc
