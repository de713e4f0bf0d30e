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


#ifndef PANCYC_CYCLE_FINDER_HPP_
#define PANCYC_CYCLE_FINDER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pancyc/cycle_geometry.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

// Knobs of the spectrum search. Unset values take their defaults from eps:
// delta = eps/64, beta = min(delta/4, eps/10), eps_prime = eps/10, and p is
// the edge density of the graph under search.
struct SpectrumRequest {
  double eps = 0.1;
  std::optional<double> delta;
  std::optional<double> beta;
  std::optional<double> eps_prime;
  std::optional<double> p;
};

struct ResolvedRequest {
  double eps = 0;
  double delta = 0;
  double beta = 0;
  double eps_prime = 0;
  double p = 0;
};

// Fills defaults and checks 0 < eps <= 1, 0 < beta < 1/6, delta and
// eps_prime in (0, 1), p in (0, 1]. Throws std::invalid_argument.
ResolvedRequest resolve(const SpectrumRequest& req, const Graph& g);

enum class MissingKind { NoOddCycle, NoShortcut, NoCrossing, RangeEmpty, StageFailure };

struct MissingReason {
  MissingKind kind = MissingKind::StageFailure;
  std::string stage;  // only for StageFailure

  std::string str() const;
  static MissingReason parse(const std::string& text);
  friend bool operator==(const MissingReason&, const MissingReason&) = default;
};

struct MissingLength {
  int t = 0;
  MissingReason reason;
};

struct CycleSpectrum {
  int n = 0;
  std::map<int, CycleCertificate> found;
  std::vector<MissingLength> missing;

  // found.size() / (n - 2); lengths run over 3..n.
  double found_ratio() const;
  int max_extra_edges() const;
  nlohmann::json to_json() const;
};

// Cycles of lengths 3..min(7, n). Lengths 5..7 prefer cycles made of C_n
// plus at most four chords.
CycleSpectrum find_tiny_cycles(const Graph& g, const CycleLabeling& labeling);

// Optional tuning for the degree-bucket search; defaults model the complete
// graph (p = 1) with eps_prime = 0.3.
struct ShortcutSearchOptions {
  double eps_prime = 0.3;
  double p = 1.0;
};

// Degree buckets and B/C intersections only; may miss shortcuts that exist.
std::optional<Shortcut> find_shortcut_guided(const Graph& g, const CycleLabeling& labeling, int l,
                                             const ShortcutSearchOptions& opt = {});
// Complete scan in (l, i1, i2) order; finds one iff one exists.
std::optional<Shortcut> find_shortcut_exhaustive(const Graph& g, const CycleLabeling& labeling,
                                                 int l);
// Guided search first, exhaustive scan when it comes back empty.
std::optional<Shortcut> find_shortcut(const Graph& g, const CycleLabeling& labeling, int l,
                                      const ShortcutSearchOptions& opt = {});

struct GoodDirections {
  std::vector<bool> is_good;  // indexed by direction
  std::vector<int> good;
  int bad_count = 0;
};

// Direction i is good iff each window E_i^k (1 <= k <= (1/2 - beta)n) and the
// middle M_i hold len*p*(1 +- eps_prime) edges of g, len being the actual
// window size.
GoodDirections good_directions(const Graph& g, const CycleLabeling& labeling, double beta,
                               double eps_prime, double p);

// A close-crossing certificate of length t, or nothing.
std::optional<CycleCertificate> find_medium_cycle(const Graph& g, const CycleLabeling& labeling,
                                                  int t, const SpectrumRequest& req);

// Every length 3..n. Requires the labeling to witness a Hamilton cycle.
CycleSpectrum find_all_cycles(const Graph& g, const CycleLabeling& labeling,
                              const SpectrumRequest& req);

}  // namespace pancyc

#endif  // PANCYC_CYCLE_FINDER_HPP_
