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

#include "pancyc/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pancyc {

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) {
    throw std::invalid_argument("loop edge {" + std::to_string(a) + "," +
                                std::to_string(a) + "}");
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 3) {
    throw std::invalid_argument("graph needs at least 3 vertices, got " +
                                std::to_string(n));
  }
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  degree_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0," +
                            std::to_string(n_) + ")");
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  check_vertex(a);
  check_vertex(b);
  const auto word = rows_[static_cast<std::size_t>(a) * words_ + b / 64];
  return (word >> (b % 64)) & 1U;
}

bool Graph::add_edge(Vertex a, Vertex b) {
  const Edge e = Edge::make(a, b);
  check_vertex(e.u);
  check_vertex(e.v);
  if (has_edge(a, b)) return false;
  rows_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[static_cast<std::size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  ++degree_[static_cast<std::size_t>(a)];
  ++degree_[static_cast<std::size_t>(b)];
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) return false;
  rows_[static_cast<std::size_t>(a) * words_ + b / 64] &= ~(std::uint64_t{1} << (b % 64));
  rows_[static_cast<std::size_t>(b) * words_ + a / 64] &= ~(std::uint64_t{1} << (a % 64));
  --degree_[static_cast<std::size_t>(a)];
  --degree_[static_cast<std::size_t>(b)];
  --edge_count_;
  return true;
}

int Graph::min_degree() const { return *std::min_element(degree_.begin(), degree_.end()); }
int Graph::max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  const auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[static_cast<std::size_t>(w)];
    while (bits != 0) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.push_back(Edge{u, v});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> new_id) const {
  if (static_cast<int>(new_id.size()) != n_) {
    throw std::invalid_argument("relabeling has wrong size");
  }
  Graph g(n_);
  for (const Edge& e : edges()) {
    g.add_edge(new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)]);
  }
  return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<bool> in(static_cast<std::size_t>(n_), false);
  for (Vertex v : keep) {
    check_vertex(v);
    in[static_cast<std::size_t>(v)] = true;
  }
  Graph g(n_);
  for (const Edge& e : edges()) {
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) g.add_edge(e);
  }
  return g;
}

CycleLabeling::CycleLabeling(std::vector<Vertex> label_of) : label_of_(std::move(label_of)) {
  const auto n = label_of_.size();
  vertex_of_.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const Vertex l = label_of_[v];
    if (l < 0 || static_cast<std::size_t>(l) >= n || vertex_of_[static_cast<std::size_t>(l)] != -1) {
      throw std::invalid_argument("labeling is not a permutation of 0..n-1");
    }
    vertex_of_[static_cast<std::size_t>(l)] = static_cast<Vertex>(v);
  }
}

CycleLabeling CycleLabeling::identity(int n) {
  std::vector<Vertex> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  return CycleLabeling(std::move(id));
}

bool CycleLabeling::is_hamilton_witness(const Graph& g) const {
  const int n = size();
  if (g.n() != n) return false;
  for (int i = 0; i < n; ++i) {
    if (!g.has_edge(vertex(i), vertex((i + 1) % n))) return false;
  }
  return true;
}

Graph CycleLabeling::to_label_space(const Graph& g) const {
  if (g.n() != size()) throw std::invalid_argument("labeling size differs from graph order");
  return g.relabeled(label_of_);
}

Graph CycleLabeling::from_label_space(const Graph& labeled) const {
  if (labeled.n() != size()) throw std::invalid_argument("labeling size differs from graph order");
  return labeled.relabeled(vertex_of_);
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 3 || m < 0) {
    throw std::runtime_error("edge list: bad header, expected \"n m\" with n >= 3");
  }
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, got " +
                               std::to_string(k));
    }
    if (!(0 <= u && u < v && v < n)) {
      throw std::runtime_error("edge list: line " + std::to_string(k + 2) +
                               " violates 0 <= u < v < n");
    }
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw std::runtime_error("edge list: duplicate edge on line " + std::to_string(k + 2));
    }
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

CycleLabeling read_labeling(std::istream& in) {
  std::vector<Vertex> labels;
  long long x = 0;
  while (in >> x) labels.push_back(static_cast<Vertex>(x));
  if (!in.eof()) throw std::runtime_error("labeling: non-integer token");
  return CycleLabeling(std::move(labels));
}

void write_labeling(std::ostream& out, const CycleLabeling& labeling) {
  const auto labels = labeling.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) out << ' ';
    out << labels[i];
  }
  out << '\n';
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

Graph load_edge_list(const std::string& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

CycleLabeling load_labeling(const std::string& path) {
  auto in = open_in(path);
  return read_labeling(in);
}

void save_labeling(const std::string& path, const CycleLabeling& labeling) {
  auto out = open_out(path);
  write_labeling(out, labeling);
}

}  // namespace pancyc
