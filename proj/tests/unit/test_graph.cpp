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

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pancyc/certificate.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/graph_props.hpp"

namespace pancyc {
namespace {

TEST(Edge, CanonicalizesAndRejectsLoops) {
  EXPECT_EQ(Edge::make(5, 2), (Edge{2, 5}));
  EXPECT_THROW(Edge::make(3, 3), std::invalid_argument);
}

TEST(Graph, RejectsTinyOrder) { EXPECT_THROW(Graph(2), std::invalid_argument); }

TEST(Graph, AddRemoveTracksDegreesAndCount) {
  Graph g(70);  // spans two words per row
  EXPECT_TRUE(g.add_edge(0, 69));
  EXPECT_FALSE(g.add_edge(69, 0));
  EXPECT_TRUE(g.add_edge(0, 64));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_TRUE(g.has_edge(64, 0));
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{64, 69}));
  EXPECT_TRUE(g.remove_edge(0, 69));
  EXPECT_FALSE(g.remove_edge(0, 69));
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.degree(69), 0);
  EXPECT_THROW(g.add_edge(0, 70), std::out_of_range);
}

TEST(Graph, CompleteAndCycleShapes) {
  const Graph k = Graph::complete(7);
  EXPECT_EQ(k.edge_count(), 21);
  EXPECT_EQ(k.min_degree(), 6);
  const Graph c = Graph::cycle(9);
  EXPECT_EQ(c.edge_count(), 9);
  EXPECT_EQ(c.max_degree(), 2);
  EXPECT_TRUE(c.has_edge(8, 0));
}

TEST(Graph, RelabelAndInduced) {
  const Graph c = Graph::cycle(5);
  const std::vector<Vertex> perm{2, 0, 4, 1, 3};
  const Graph r = c.relabeled(perm);
  for (const Edge& e : c.edges()) EXPECT_TRUE(r.has_edge(perm[e.u], perm[e.v]));
  EXPECT_EQ(r.edge_count(), 5);
  const std::vector<Vertex> keep{0, 1, 2};
  const Graph in = Graph::complete(6).induced(keep);
  EXPECT_EQ(in.n(), 6);
  EXPECT_EQ(in.edge_count(), 3);
}

TEST(CycleLabeling, RejectsNonPermutations) {
  EXPECT_THROW(CycleLabeling({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(CycleLabeling({0, 1, 3}), std::invalid_argument);
}

TEST(CycleLabeling, WitnessAndLabelSpace) {
  // vertex v sits at position label[v] of the cycle
  const CycleLabeling lab({3, 0, 4, 1, 2});
  Graph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(lab.vertex(i), lab.vertex((i + 1) % 5));
  EXPECT_TRUE(lab.is_hamilton_witness(g));
  EXPECT_FALSE(CycleLabeling::identity(5).is_hamilton_witness(g));
  EXPECT_EQ(lab.to_label_space(g), Graph::cycle(5));
  EXPECT_EQ(lab.from_label_space(lab.to_label_space(g)), g);
}

TEST(EdgeListIo, RoundTrip) {
  std::mt19937 rng(3);
  Graph g(30);
  for (int k = 0; k < 100; ++k) {
    const int a = static_cast<int>(rng() % 30);
    const int b = static_cast<int>(rng() % 30);
    if (a != b) g.add_edge(a, b);
  }
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeListIo, ReportsMalformedInput) {
  std::stringstream bad_header("2 0\n");
  EXPECT_THROW(read_edge_list(bad_header), std::runtime_error);
  std::stringstream reversed("4 1\n3 1\n");
  EXPECT_THROW(read_edge_list(reversed), std::runtime_error);
  std::stringstream dup("4 2\n0 1\n0 1\n");
  EXPECT_THROW(read_edge_list(dup), std::runtime_error);
  std::stringstream short_list("4 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), std::runtime_error);
}

TEST(LabelingIo, RoundTrip) {
  const CycleLabeling lab({2, 0, 1, 4, 3});
  std::stringstream ss;
  write_labeling(ss, lab);
  EXPECT_EQ(read_labeling(ss), lab);
  std::stringstream junk("0 1 x");
  EXPECT_THROW(read_labeling(junk), std::runtime_error);
}

TEST(Certificate, HamiltonCycleOfC5) {
  const Graph c5 = Graph::cycle(5);
  const auto lab = CycleLabeling::identity(5);
  const auto cert = make_certificate({0, 1, 2, 3, 4}, 5);
  EXPECT_TRUE(cert.extra_edges.empty());
  EXPECT_TRUE(verify_certificate(c5, lab, cert));
}

TEST(Certificate, RejectsMissingEdge) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_FALSE(verify_certificate(c5, CycleLabeling::identity(5), make_certificate({0, 1, 3}, 5)));
}

TEST(Certificate, RejectsWrongChordListAndRepeats) {
  const Graph k6 = Graph::complete(6);
  const auto lab = CycleLabeling::identity(6);
  auto cert = make_certificate({0, 2, 4}, 6);
  EXPECT_EQ(cert.extra_edges.size(), 3u);
  EXPECT_TRUE(verify_certificate(k6, lab, cert));
  cert.extra_edges.pop_back();
  EXPECT_FALSE(verify_certificate(k6, lab, cert));
  EXPECT_FALSE(verify_certificate(k6, lab, make_certificate({0, 1, 0, 2}, 6)));
  auto wrong_t = make_certificate({0, 1, 2}, 6);
  wrong_t.t = 4;
  EXPECT_FALSE(verify_certificate(k6, lab, wrong_t));
}

TEST(Certificate, MatchesIndependentCheckUnderRandomLabelings) {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 6);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CycleLabeling lab(perm);
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) g.add_edge(a, b);
    const int t = 3 + static_cast<int>(rng() % (n - 2));
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(static_cast<std::size_t>(t));
    const auto cert = make_certificate(labels, n);
    EXPECT_EQ(verify_certificate(g, lab, cert), oracle::certificate_ok(g, lab, cert));
  }
}

TEST(Certificate, JsonRoundTrip) {
  const auto cert = make_certificate({0, 8, 9, 5, 4, 15, 14, 1}, 20);
  const auto j = to_json(cert);
  EXPECT_EQ(j["t"], 8);
  EXPECT_EQ(certificate_from_json(j), cert);
  EXPECT_THROW(certificate_from_json(nlohmann::json{{"t", 3}, {"vertices", {0, 1, 2}}, {"extra_edges", {{1}}}}),
               std::invalid_argument);
}

TEST(GraphProps, TrianglesAndBipartiteness) {
  EXPECT_FALSE(find_triangle(Graph::cycle(6)).has_value());
  EXPECT_EQ(count_triangles(Graph::complete(6)), 20);
  EXPECT_EQ(find_triangle(Graph::complete(4)), (std::array<Vertex, 3>{0, 1, 2}));
  EXPECT_TRUE(is_bipartite(Graph::cycle(8)));
  EXPECT_FALSE(is_bipartite(Graph::cycle(9)));
}

TEST(GraphProps, AgreesWithOraclesOnRandomGraphs) {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 20);
    Graph g(n);
    const unsigned density = 1 + rng() % 6;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 8 < density) g.add_edge(a, b);
    EXPECT_EQ(is_triangle_free(g), !oracle::has_triangle(g));
    EXPECT_EQ(is_bipartite(g), oracle::bipartite(g));
    long long brute = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) brute += g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
    EXPECT_EQ(count_triangles(g), brute);
  }
}

TEST(GraphProps, SecondNeighborhoodAndCodegree) {
  const Graph c8 = Graph::cycle(8);
  EXPECT_EQ(second_neighborhood(c8, 0), (std::vector<Vertex>{2, 6}));
  EXPECT_EQ(codegree(c8, 0, 2), 1);
  EXPECT_EQ(codegree(Graph::complete(5), 0, 1), 3);
  const std::vector<Vertex> set{0, 1, 2, 5};
  EXPECT_EQ(edges_inside(c8, set), 2);
  EXPECT_TRUE(second_neighborhood(Graph::complete(6), 0).empty());
}

}  // namespace
}  // namespace pancyc
