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

#ifndef PANCYC_GRAPH_HPP_
#define PANCYC_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pancyc {

using Vertex = std::int32_t;

// Unordered vertex pair stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Canonicalizes the pair. Throws std::invalid_argument on a loop.
  static Edge make(Vertex a, Vertex b);

  bool touches(Vertex x) const { return u == x || v == x; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 backed by bit-packed adjacency
// rows. Rows are exposed so hot loops can intersect neighborhoods word-wise.
class Graph {
 public:
  // Requires n >= 3.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);
  // The cycle 0-1-...-(n-1)-0.
  static Graph cycle(int n);

  int n() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  int words_per_row() const { return words_; }

  bool has_edge(Vertex a, Vertex b) const;
  // Returns false if the edge was already present.
  bool add_edge(Vertex a, Vertex b);
  // Returns false if the edge was absent.
  bool remove_edge(Vertex a, Vertex b);
  bool add_edge(const Edge& e) { return add_edge(e.u, e.v); }
  bool remove_edge(const Edge& e) { return remove_edge(e.u, e.v); }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  int min_degree() const;
  int max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  // Graph whose vertex new_id[x] plays the role of x.
  Graph relabeled(std::span<const Vertex> new_id) const;

  // Subgraph on the same vertex set keeping only edges inside `keep`.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_;
  int words_;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
};

// Bijection vertex -> Z_n. The labeled Hamilton cycle is
// label^-1(0), label^-1(1), ..., label^-1(n-1).
class CycleLabeling {
 public:
  // label_of[v] is the label of vertex v; must be a permutation of 0..n-1.
  explicit CycleLabeling(std::vector<Vertex> label_of);

  static CycleLabeling identity(int n);

  int size() const { return static_cast<int>(label_of_.size()); }
  Vertex label(Vertex v) const { return label_of_[static_cast<std::size_t>(v)]; }
  Vertex vertex(Vertex label) const {
    return vertex_of_[static_cast<std::size_t>(label)];
  }
  std::span<const Vertex> labels() const { return label_of_; }

  // True iff every {vertex(i), vertex(i+1)} is an edge of g.
  bool is_hamilton_witness(const Graph& g) const;

  // g with every vertex renamed to its label.
  Graph to_label_space(const Graph& g) const;
  // Inverse of to_label_space.
  Graph from_label_space(const Graph& labeled) const;

  friend bool operator==(const CycleLabeling& a, const CycleLabeling& b) {
    return a.label_of_ == b.label_of_;
  }

 private:
  std::vector<Vertex> label_of_;
  std::vector<Vertex> vertex_of_;
};

// True iff {i, i+1 mod n} for some i.
inline bool is_cycle_edge(const Edge& e, int n) {
  return e.v - e.u == 1 || (e.u == 0 && e.v == n - 1);
}

// Edge-list text format: "n m" then m lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
// One line of n labels; entry k is the label of vertex k.
CycleLabeling read_labeling(std::istream& in);
void write_labeling(std::ostream& out, const CycleLabeling& labeling);

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);
CycleLabeling load_labeling(const std::string& path);
void save_labeling(const std::string& path, const CycleLabeling& labeling);

}  // namespace pancyc

#endif  // PANCYC_GRAPH_HPP_
