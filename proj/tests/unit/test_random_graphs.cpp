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

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pancyc/random_graphs.hpp"

namespace pancyc {
namespace {

bool contains_cycle_edges(const Graph& g, const CycleLabeling& lab) { return lab.is_hamilton_witness(g); }

bool is_subgraph(const Graph& small, const Graph& big) {
  for (const Edge& e : small.edges()) {
    if (!big.has_edge(e)) return false;
  }
  return true;
}

// Planted graph relabeled by a random permutation, so the labeling is not the
// identity.
PlantedGraph shuffled_plant(int n, double p, std::uint64_t seed) {
  PlantedGraph pg = plant_hamilton(GnpParams::explicit_p(n, p), RngSeed{seed, 0});
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  // vertex x of the identity-labeled graph becomes perm[x], keeping label x
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) label[static_cast<std::size_t>(perm[x])] = x;
  return PlantedGraph{pg.graph.relabeled(perm), CycleLabeling(label), pg.planted_edges};
}

TEST(Rng, DeterministicPerSeedAndStream) {
  Rng a(RngSeed{42, 0});
  Rng b(RngSeed{42, 0});
  Rng c(RngSeed{42, 1});
  bool differs = false;
  for (int k = 0; k < 16; ++k) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
  const RngSeed base{42, 0};
  EXPECT_NE(base.derive(1).seed, base.derive(2).seed);
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng r(RngSeed{7, 0});
  for (int k = 0; k < 10000; ++k) {
    EXPECT_LT(r.below(13), 13u);
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_FALSE(r.bernoulli(0.0));
  EXPECT_TRUE(r.bernoulli(1.0));
  EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(GnpParams, ThresholdAndValidation) {
  const auto g = GnpParams::threshold(900, 3.0);
  EXPECT_DOUBLE_EQ(g.p, 0.1);
  EXPECT_DOUBLE_EQ(GnpParams::threshold(4, 3.0).p, 1.0);
  EXPECT_THROW(GnpParams::explicit_p(10, 1.5), std::invalid_argument);
  EXPECT_THROW(GnpParams::explicit_p(2, 0.5), std::invalid_argument);
  EXPECT_THROW(GnpParams::threshold(10, 0.0), std::invalid_argument);
}

TEST(SampleGnp, ExtremeProbabilities) {
  EXPECT_EQ(sample_gnp(GnpParams::explicit_p(30, 0.0), RngSeed{1, 0}).edge_count(), 0);
  EXPECT_EQ(sample_gnp(GnpParams::explicit_p(30, 1.0), RngSeed{1, 0}), Graph::complete(30));
}

TEST(SampleGnp, ReproducibleForFixedSeed) {
  const auto params = GnpParams::explicit_p(100, 0.3);
  EXPECT_EQ(sample_gnp(params, RngSeed{5, 2}), sample_gnp(params, RngSeed{5, 2}));
  EXPECT_NE(sample_gnp(params, RngSeed{5, 2}), sample_gnp(params, RngSeed{5, 3}));
}

TEST(SampleGnp, EdgeCountConcentratesAtThreshold) {
  const int n = 2000;
  const auto params = GnpParams::threshold(n, 3.0);
  const double mu = n * (n - 1) / 2.0 * params.p;
  int outliers = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const double e = static_cast<double>(sample_gnp(params, RngSeed{s, 0}).edge_count());
    if (std::abs(e - mu) > 5.0 * std::sqrt(mu)) ++outliers;
  }
  EXPECT_LE(outliers, 2);
  // relative deviation 5/sqrt(mu) has a Chernoff tail far below 2/100
  EXPECT_LT(2.0 * chernoff_tail(mu, 5.0 / std::sqrt(mu)), 0.02);
}

TEST(PlantHamilton, Extremes) {
  const auto empty = plant_hamilton(GnpParams::explicit_p(12, 0.0), RngSeed{1, 0});
  EXPECT_EQ(empty.graph, Graph::cycle(12));
  EXPECT_EQ(empty.planted_edges, 12);
  const auto full = plant_hamilton(GnpParams::explicit_p(12, 1.0), RngSeed{1, 0});
  EXPECT_EQ(full.graph, Graph::complete(12));
  EXPECT_EQ(full.labeling, CycleLabeling::identity(12));
  EXPECT_EQ(full.planted_edges, 0);
}

TEST(PlantHamilton, LabelingAlwaysWitnesses) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto pg = plant_hamilton(GnpParams::explicit_p(40, 0.1), RngSeed{s, 0});
    EXPECT_TRUE(pg.labeling.is_hamilton_witness(pg.graph));
    const Graph base = sample_gnp(GnpParams::explicit_p(40, 0.1), RngSeed{s, 0});
    EXPECT_EQ(pg.graph.edge_count(), base.edge_count() + pg.planted_edges);
  }
}

TEST(SubsampleCoupling, Extremes) {
  const Graph g = sample_gnp(GnpParams::explicit_p(50, 0.4), RngSeed{3, 0});
  EXPECT_EQ(subsample_coupling(g, 1.0, RngSeed{9, 0}), g);
  EXPECT_EQ(subsample_coupling(g, 0.0, RngSeed{9, 0}).edge_count(), 0);
  EXPECT_TRUE(is_subgraph(subsample_coupling(g, 0.5, RngSeed{9, 0}), g));
}

TEST(SubsampleCoupling, TwoRoundMeanMatchesProduct) {
  const int n = 500;
  const int trials = 200;
  const double pairs = n * (n - 1) / 2.0;
  double sum = 0;
  for (int k = 0; k < trials; ++k) {
    const Graph g = sample_gnp(GnpParams::explicit_p(n, 0.2), RngSeed{static_cast<std::uint64_t>(k), 0});
    sum += static_cast<double>(subsample_coupling(g, 0.5, RngSeed{static_cast<std::uint64_t>(k), 1}).edge_count());
  }
  const double mean = sum / trials;
  const double sigma_of_mean = std::sqrt(pairs * 0.1 * 0.9 / trials);
  EXPECT_NEAR(mean, pairs * 0.1, 3.0 * sigma_of_mean);
}

TEST(Adversary, NamesRoundTrip) {
  for (auto kind : {AdversaryKind::TriangleBreaker, AdversaryKind::BipartiteEven,
                    AdversaryKind::NearBipartiteOdd, AdversaryKind::UniformThin}) {
    EXPECT_EQ(adversary_from_string(to_string(kind)), kind);
  }
  EXPECT_EQ(adversary_from_string("triangle-breaker"), AdversaryKind::TriangleBreaker);
  EXPECT_EQ(adversary_from_string("uniform-thin"), AdversaryKind::UniformThin);
  EXPECT_THROW(adversary_from_string("nope"), std::invalid_argument);
}

TEST(Adversary, RejectsNonWitnessLabeling) {
  const Graph g = Graph::complete(6).induced(std::vector<Vertex>{0, 1, 2, 3, 4});
  EXPECT_THROW(adversary_triangle_breaker(g, CycleLabeling::identity(6)), std::invalid_argument);
}

TEST(TriangleBreaker, SmallExamples) {
  const auto id7 = CycleLabeling::identity(7);
  EXPECT_EQ(adversary_triangle_breaker(Graph::cycle(7), id7), Graph::cycle(7));
  Graph g = Graph::cycle(5);
  g.add_edge(0, 2);
  EXPECT_EQ(adversary_triangle_breaker(g, CycleLabeling::identity(5)), Graph::cycle(5));
}

TEST(TriangleBreaker, RandomInstancesAgainstOracles) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 5 + static_cast<int>(s % 30);
    const auto pg = shuffled_plant(n, 0.5, s);
    const Graph out = adversary_triangle_breaker(pg.graph, pg.labeling);
    EXPECT_FALSE(oracle::has_triangle(out));
    EXPECT_TRUE(contains_cycle_edges(out, pg.labeling));
    EXPECT_TRUE(is_subgraph(out, pg.graph));
  }
}

TEST(TriangleBreaker, SparseRegimeRemovesFewEdges) {
  const int n = 400;
  const double p = std::pow(n, -0.6);
  const auto pg = plant_hamilton(GnpParams::explicit_p(n, p), RngSeed{1, 0});
  const Graph out = adversary_triangle_breaker(pg.graph, pg.labeling);
  EXPECT_FALSE(oracle::has_triangle(out));
  const double removed = static_cast<double>(pg.graph.edge_count() - out.edge_count());
  EXPECT_LE(removed / static_cast<double>(pg.graph.edge_count()), 0.15);
  EXPECT_LE(removed, 3.0 * std::pow(n * p, 3));
}

TEST(BipartiteEven, SmallExamples) {
  EXPECT_EQ(adversary_bipartite_even(Graph::cycle(8), CycleLabeling::identity(8)), Graph::cycle(8));
  Graph k4 = Graph::complete(4);
  EXPECT_EQ(adversary_bipartite_even(k4, CycleLabeling::identity(4)), Graph::cycle(4));
  EXPECT_THROW(adversary_bipartite_even(Graph::cycle(7), CycleLabeling::identity(7)), std::invalid_argument);
}

TEST(BipartiteEven, RandomInstancesAreBipartite) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 4 + 2 * static_cast<int>(s % 20);
    const auto pg = shuffled_plant(n, 0.6, s);
    const Graph out = adversary_bipartite_even(pg.graph, pg.labeling);
    EXPECT_TRUE(oracle::bipartite(out));
    EXPECT_TRUE(contains_cycle_edges(out, pg.labeling));
  }
}

TEST(BipartiteEven, KeepsAboutHalfOfTheRandomEdges) {
  const int n = 1000;
  const auto pg = plant_hamilton(GnpParams::threshold(n, 3.0), RngSeed{4, 0});
  const Graph out = adversary_bipartite_even(pg.graph, pg.labeling);
  const double random_before = static_cast<double>(pg.graph.edge_count() - n);
  const double random_after = static_cast<double>(out.edge_count() - n);
  EXPECT_GE(random_after / random_before, 0.45);
  EXPECT_LE(random_after / random_before, 0.55);
}

TEST(NearBipartiteOdd, SmallExamples) {
  EXPECT_EQ(adversary_near_bipartite_odd(Graph::cycle(9), CycleLabeling::identity(9)), Graph::cycle(9));
  EXPECT_THROW(adversary_near_bipartite_odd(Graph::cycle(8), CycleLabeling::identity(8)), std::invalid_argument);
}

TEST(NearBipartiteOdd, RandomInstancesAreTriangleFreeWithOneOddEdge) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 5 + 2 * static_cast<int>(s % 20);
    const auto pg = shuffled_plant(n, 0.6, s);
    const Graph out = adversary_near_bipartite_odd(pg.graph, pg.labeling);
    EXPECT_FALSE(oracle::has_triangle(out));
    EXPECT_TRUE(contains_cycle_edges(out, pg.labeling));
    EXPECT_FALSE(oracle::bipartite(out));
    Graph without = out;
    without.remove_edge(pg.labeling.vertex(0), pg.labeling.vertex(n - 1));
    EXPECT_TRUE(oracle::bipartite(without));
  }
}

TEST(NearBipartiteOdd, RetainsAtLeastFortyFivePercent) {
  const int n = 1001;
  const auto pg = plant_hamilton(GnpParams::threshold(n, 3.0), RngSeed{8, 0});
  const Graph out = adversary_near_bipartite_odd(pg.graph, pg.labeling);
  EXPECT_GE(static_cast<double>(out.edge_count()), 0.45 * static_cast<double>(pg.graph.edge_count()));
}

TEST(UniformThin, ExtremesAndExactCount) {
  const auto pg = plant_hamilton(GnpParams::explicit_p(60, 0.3), RngSeed{2, 0});
  const RngSeed seed{5, 0};
  EXPECT_EQ(adversary_uniform_thin(pg.graph, pg.labeling, 1.0, seed), pg.graph);
  EXPECT_EQ(adversary_uniform_thin(pg.graph, pg.labeling, 1e-9, seed), Graph::cycle(60));
  const double e = static_cast<double>(pg.graph.edge_count());
  for (double keep : {0.1, 0.25, 0.5, 0.77, 0.9}) {
    const double target = std::clamp(std::ceil(keep * e - 1e-9), 60.0, e);
    const Graph out = adversary_uniform_thin(pg.graph, pg.labeling, keep, seed);
    EXPECT_EQ(static_cast<double>(out.edge_count()), target) << keep;
    EXPECT_TRUE(contains_cycle_edges(out, pg.labeling));
  }
  EXPECT_THROW(adversary_uniform_thin(pg.graph, pg.labeling, 0.0, seed), std::invalid_argument);
}

TEST(UniformThin, KeptSetsAreNested) {
  const auto pg = shuffled_plant(80, 0.3, 12);
  const RngSeed seed{13, 0};
  Graph prev = adversary_uniform_thin(pg.graph, pg.labeling, 0.3, seed);
  for (double keep : {0.4, 0.5, 0.6, 0.8, 1.0}) {
    const Graph cur = adversary_uniform_thin(pg.graph, pg.labeling, keep, seed);
    EXPECT_TRUE(is_subgraph(prev, cur)) << keep;
    prev = cur;
  }
}

TEST(ApplyAdversary, RecordsCounts) {
  const auto pg = plant_hamilton(GnpParams::explicit_p(40, 0.3), RngSeed{2, 0});
  const auto out = apply_adversary(pg.graph, pg.labeling, AdversarySpec{AdversaryKind::BipartiteEven, 1.0},
                                   RngSeed{1, 0});
  EXPECT_EQ(out.record["kind"], to_string(AdversaryKind::BipartiteEven));
  EXPECT_EQ(out.record["kept"].get<std::int64_t>(), out.graph.edge_count());
  EXPECT_EQ(out.record["removed"].get<std::int64_t>(), pg.graph.edge_count() - out.graph.edge_count());
  EXPECT_THROW(apply_adversary(pg.graph, pg.labeling, AdversarySpec{AdversaryKind::NearBipartiteOdd, 1.0},
                               RngSeed{1, 0}),
               std::invalid_argument);
}

TEST(ChernoffTail, FormulaAndShape) {
  EXPECT_NEAR(chernoff_tail(100, 0.5), std::exp(-25.0 / 3.0), 1e-15);
  EXPECT_NEAR(chernoff_tail(100, 0.5), 2.4e-4, 0.05e-4);
  EXPECT_NEAR(chernoff_tail(100, 1e-9), 1.0, 1e-12);
  double prev = 1.0;
  for (double mean = 1; mean < 1000; mean *= 2) {
    const double cur = chernoff_tail(mean, 0.3);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
  EXPECT_THROW(chernoff_tail(-1, 0.1), std::invalid_argument);
}

}  // namespace
}  // namespace pancyc
