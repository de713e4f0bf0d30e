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


#ifndef PANCYC_CERTIFICATE_HPP_
#define PANCYC_CERTIFICATE_HPP_

#include <vector>

#include "json.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

// A cycle written in label space. extra_edges lists the cycle edges that are
// not on the labeled Hamilton cycle, sorted.
struct CycleCertificate {
  int t = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> extra_edges;

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

// Builds a certificate from a closed walk of labels, filling t and extra_edges.
CycleCertificate make_certificate(std::vector<Vertex> labels, int n);

// Edges {v_k, v_k+1} (cyclically) of the label sequence that are off C_n.
std::vector<Edge> chords_of(const std::vector<Vertex>& labels, int n);

// True iff cert.vertices is a cycle of length cert.t in g (labels mapped back
// through `labeling`) and extra_edges matches the cycle's chords exactly.
bool verify_certificate(const Graph& g, const CycleLabeling& labeling,
                        const CycleCertificate& cert);

nlohmann::json to_json(const CycleCertificate& cert);
CycleCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace pancyc

#endif  // PANCYC_CERTIFICATE_HPP_
