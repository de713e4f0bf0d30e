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

#include "pancyc/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace pancyc {

std::vector<Edge> chords_of(const std::vector<Vertex>& labels, int n) {
  std::vector<Edge> out;
  const std::size_t t = labels.size();
  for (std::size_t k = 0; k < t; ++k) {
    const Vertex a = labels[k];
    const Vertex b = labels[(k + 1) % t];
    if (a == b) continue;
    const Edge e = Edge::make(a, b);
    if (!is_cycle_edge(e, n)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleCertificate make_certificate(std::vector<Vertex> labels, int n) {
  CycleCertificate cert;
  cert.t = static_cast<int>(labels.size());
  cert.extra_edges = chords_of(labels, n);
  cert.vertices = std::move(labels);
  return cert;
}

bool verify_certificate(const Graph& g, const CycleLabeling& labeling,
                        const CycleCertificate& cert) {
  const int n = g.n();
  if (labeling.size() != n) return false;
  if (cert.t < 3 || cert.t > n) return false;
  if (static_cast<int>(cert.vertices.size()) != cert.t) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex x : cert.vertices) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  for (int k = 0; k < cert.t; ++k) {
    const Vertex a = cert.vertices[static_cast<std::size_t>(k)];
    const Vertex b = cert.vertices[static_cast<std::size_t>((k + 1) % cert.t)];
    if (!g.has_edge(labeling.vertex(a), labeling.vertex(b))) return false;
  }
  auto claimed = cert.extra_edges;
  std::sort(claimed.begin(), claimed.end());
  return claimed == chords_of(cert.vertices, n);
}

nlohmann::json to_json(const CycleCertificate& cert) {
  nlohmann::json extra = nlohmann::json::array();
  for (const Edge& e : cert.extra_edges) extra.push_back({e.u, e.v});
  return {{"t", cert.t}, {"vertices", cert.vertices}, {"extra_edges", extra}};
}

CycleCertificate certificate_from_json(const nlohmann::json& j) {
  CycleCertificate cert;
  cert.t = j.at("t").get<int>();
  cert.vertices = j.at("vertices").get<std::vector<Vertex>>();
  for (const auto& pair : j.at("extra_edges")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("extra_edges entries must be [u, v] pairs");
    }
    cert.extra_edges.push_back(Edge::make(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
  }
  return cert;
}

}  // namespace pancyc
