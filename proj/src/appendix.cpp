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

#include "pancyc/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "pancyc/graph_props.hpp"

namespace pancyc {

namespace {

constexpr long long kSmallSetBudget = 20000000;

std::vector<bool> membership(int n, const std::vector<Vertex>& set) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Vertex x : set) in[static_cast<std::size_t>(x)] = true;
  return in;
}

// Exact check of every X with |X| <= min(3, t). A vertex of degree
// >= 3|X| - 2 already supplies 2|X| - 1 outside neighbours, so only sets
// of low-degree vertices are enumerated.
std::optional<ExpansionFailure> check_small_sets(const Graph& g, int t) {
  const int top = std::min(3, t);
  long long budget = kSmallSetBudget;
  for (int s = 1; s <= top; ++s) {
    std::vector<Vertex> low;
    for (Vertex x = 0; x < g.n(); ++x) {
      if (g.degree(x) <= 3 * s - 3) low.push_back(x);
    }
    const int need = 2 * s - 1;
    auto report = [&](std::vector<Vertex> set) -> std::optional<ExpansionFailure> {
      const int b = outer_boundary(g, set);
      if (b >= need) return std::nullopt;
      return ExpansionFailure{std::move(set), b, true, "exact"};
    };
    const auto k = low.size();
    if (s == 1) {
      for (Vertex a : low) {
        if (auto f = report({a})) return f;
      }
    } else if (s == 2) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (--budget < 0) return std::nullopt;
          if (auto f = report({low[i], low[j]})) return f;
        }
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          // a third vertex lowers the boundary by at most one
          if (outer_boundary(g, {low[i], low[j]}) > need) continue;
          for (std::size_t m = j + 1; m < k; ++m) {
            if (--budget < 0) return std::nullopt;
            if (auto f = report({low[i], low[j], low[m]})) return f;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> random_connected_set(const Graph& g, int size, Rng& rng) {
  std::vector<Vertex> set;
  std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
  std::vector<Vertex> frontier;
  auto add = [&](Vertex x) {
    set.push_back(x);
    in[static_cast<std::size_t>(x)] = true;
    for (Vertex y : g.neighbors(x)) {
      if (!in[static_cast<std::size_t>(y)]) frontier.push_back(y);
    }
  };
  add(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n()))));
  while (static_cast<int>(set.size()) < size) {
    std::erase_if(frontier, [&](Vertex y) { return in[static_cast<std::size_t>(y)]; });
    if (frontier.empty()) {
      Vertex x = 0;
      do {
        x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n())));
      } while (in[static_cast<std::size_t>(x)]);
      add(x);
    } else {
      add(frontier[static_cast<std::size_t>(rng.below(frontier.size()))]);
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

class LongPathDfs {
 public:
  LongPathDfs(const Graph& g, int target, long long budget)
      : g_(g), target_(target), budget_(budget), on_(static_cast<std::size_t>(g.n()), false) {}

  std::optional<std::vector<Vertex>> run(Vertex v) {
    path_ = {v};
    on_[static_cast<std::size_t>(v)] = true;
    if (grow()) return path_;
    return std::nullopt;
  }

 private:
  bool grow() {
    if (static_cast<int>(path_.size()) - 1 >= target_) return true;
    if (--budget_ < 0) return false;
    for (Vertex y : g_.neighbors(path_.back())) {
      if (on_[static_cast<std::size_t>(y)]) continue;
      on_[static_cast<std::size_t>(y)] = true;
      path_.push_back(y);
      if (grow()) return true;
      path_.pop_back();
      on_[static_cast<std::size_t>(y)] = false;
      if (budget_ < 0) return false;
    }
    return false;
  }

  const Graph& g_;
  int target_;
  long long budget_;
  std::vector<bool> on_;
  std::vector<Vertex> path_;
};

// Appends off-path neighbours greedily; returns true if anything was added.
bool extend(const Graph& g, std::vector<Vertex>& path, std::vector<bool>& on, int target) {
  bool grew = false;
  while (static_cast<int>(path.size()) - 1 < target) {
    Vertex next = -1;
    for (Vertex y : g.neighbors(path.back())) {
      if (!on[static_cast<std::size_t>(y)]) {
        next = y;
        break;
      }
    }
    if (next < 0) break;
    on[static_cast<std::size_t>(next)] = true;
    path.push_back(next);
    grew = true;
  }
  return grew;
}

}  // namespace

std::optional<PeeledCore> peel_min_degree(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("peel_min_degree needs d >= 1");
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) < d) {
      gone[static_cast<std::size_t>(v)] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(v)) {
      if (gone[static_cast<std::size_t>(y)]) continue;
      if (--deg[static_cast<std::size_t>(y)] < d) {
        gone[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[static_cast<std::size_t>(v)]) kept.push_back(v);
  }
  if (kept.empty()) return std::nullopt;
  Graph core = g.induced(kept);
  return PeeledCore{std::move(kept), std::move(core)};
}

Graph compact_induced(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    index[static_cast<std::size_t>(vertices[k])] = static_cast<Vertex>(k);
  }
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (Vertex y : g.neighbors(vertices[k])) {
      const Vertex j = index[static_cast<std::size_t>(y)];
      if (j > static_cast<Vertex>(k)) out.add_edge(static_cast<Vertex>(k), j);
    }
  }
  return out;
}

int outer_boundary(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(g.words_per_row()), 0);
  std::vector<std::uint64_t> mask(reach.size(), 0);
  for (Vertex x : set) {
    mask[static_cast<std::size_t>(x / 64)] |= std::uint64_t{1} << (x % 64);
    const auto r = g.row(x);
    for (std::size_t w = 0; w < reach.size(); ++w) reach[w] |= r[w];
  }
  int count = 0;
  for (std::size_t w = 0; w < reach.size(); ++w) count += std::popcount(reach[w] & ~mask[w]);
  return count;
}

PosaResult posa_path(const Graph& g, Vertex v, int t, const PosaOptions& opt) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("posa_path: endpoint outside the graph");
  if (t < 1) throw std::invalid_argument("posa_path needs t >= 1");
  const int target = 3 * t - 2;

  if (auto f = check_small_sets(g, t)) return *f;
  Rng rng(RngSeed{opt.seed, 0});
  for (int s = 4; s <= std::min(t, g.n()); ++s) {
    for (int k = 0; k < opt.sampled_sets; ++k) {
      auto set = random_connected_set(g, s, rng);
      const int b = outer_boundary(g, set);
      if (b < 2 * s - 1) return ExpansionFailure{std::move(set), b, true, "sampled"};
    }
  }

  std::vector<Vertex> path{v};
  std::vector<bool> on(static_cast<std::size_t>(g.n()), false);
  on[static_cast<std::size_t>(v)] = true;
  extend(g, path, on, target);
  while (static_cast<int>(path.size()) - 1 < target) {
    // breadth-first over rotations with v pinned
    std::deque<std::vector<Vertex>> queue{path};
    std::vector<bool> seen_end(static_cast<std::size_t>(g.n()), false);
    std::vector<Vertex> ends{path.back()};
    seen_end[static_cast<std::size_t>(path.back())] = true;
    bool moved = false;
    while (!queue.empty() && !moved) {
      std::vector<Vertex> cur = std::move(queue.front());
      queue.pop_front();
      std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
      for (std::size_t k = 0; k < cur.size(); ++k) pos[static_cast<std::size_t>(cur[k])] = static_cast<int>(k);
      const int last = static_cast<int>(cur.size()) - 1;
      for (Vertex y : g.neighbors(cur.back())) {
        const int j = pos[static_cast<std::size_t>(y)];
        if (j < 0 || j >= last - 1) continue;
        std::vector<Vertex> rotated(cur.begin(), cur.begin() + j + 1);
        rotated.insert(rotated.end(), cur.rbegin(), cur.rend() - (j + 1));
        const Vertex end = rotated.back();
        if (seen_end[static_cast<std::size_t>(end)]) continue;
        seen_end[static_cast<std::size_t>(end)] = true;
        ends.push_back(end);
        if (extend(g, rotated, on, target)) {
          path = std::move(rotated);
          moved = true;
          break;
        }
        queue.push_back(std::move(rotated));
      }
    }
    if (moved) continue;

    if (auto p = LongPathDfs(g, target, opt.dfs_budget).run(v)) return PosaPath{std::move(*p)};
    std::sort(ends.begin(), ends.end());
    const int b = outer_boundary(g, ends);
    const bool violates = static_cast<int>(ends.size()) <= t && b < 2 * static_cast<int>(ends.size()) - 1;
    return ExpansionFailure{std::move(ends), b, violates, "rotation"};
  }
  return PosaPath{std::move(path)};
}

ExpansionSample sample_expansion(const Graph& g, int max_size, int samples, RngSeed seed) {
  ExpansionSample out;
  if (max_size < 1) return out;
  Rng rng(seed.derive(7));
  for (int k = 0; k < samples; ++k) {
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(max_size, g.n()))));
    auto set = random_connected_set(g, size, rng);
    ++out.samples;
    if (outer_boundary(g, set) < 2 * size) {
      ++out.failures;
      if (!out.first_failure) out.first_failure = std::move(set);
    }
  }
  return out;
}

SpecialVertex find_special_vertex(const Graph& g, double eps, double p) {
  const int n = g.n();
  const double n2p = static_cast<double>(n) * n * p;
  SpecialVertex out;
  out.threshold = eps / 16.0 * n2p;
  auto second_edges = [&](Vertex w) { return edges_inside(g, second_neighborhood(g, w)); };
  auto accept = [&](Vertex w, const char* branch) {
    out.w = w;
    out.second_edges = second_edges(w);
    out.branch = branch;
    out.threshold_met = static_cast<double>(out.second_edges) >= out.threshold;
    return out.threshold_met;
  };

  const bool precondition = static_cast<double>(g.edge_count()) > (0.5 + eps) * n2p / 2.0;
  if (precondition) {
    std::vector<Vertex> high;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) >= (0.5 + eps / 2.0) * n * p) high.push_back(v);
    }
    auto argmax_into = [&](const std::vector<Vertex>& from, const std::vector<bool>& target,
                           const Graph& graph) {
      Vertex best = from.empty() ? 0 : from.front();
      int best_count = -1;
      for (Vertex v : from) {
        int c = 0;
        for (Vertex y : graph.neighbors(v)) c += target[static_cast<std::size_t>(y)] ? 1 : 0;
        if (c > best_count) {
          best_count = c;
          best = v;
        }
      }
      return best;
    };
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;

    const Vertex v0 = argmax_into(all, membership(n, high), g);
    if (accept(v0, "v0")) return out;

    auto second = second_neighborhood(g, v0);
    const auto x_size = static_cast<std::size_t>(std::ceil((0.5 + eps / 80.0) * n));
    if (second.size() > x_size) second.resize(x_size);
    const auto in_x = membership(n, second);
    std::vector<Vertex> y_side;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_x[static_cast<std::size_t>(v)]) y_side.push_back(v);
    }
    Graph thinned = g;
    for (const Edge& e : g.edges()) {
      if (in_x[static_cast<std::size_t>(e.u)] && in_x[static_cast<std::size_t>(e.v)]) thinned.remove_edge(e);
    }
    std::int64_t cross = 0;
    for (Vertex x : second) cross += thinned.degree(x);
    const double r = static_cast<double>(cross) / n2p;
    std::vector<Vertex> bx;
    for (Vertex x : second) {
      if (thinned.degree(x) >= (2.0 * r - eps / 20.0) * n * p) bx.push_back(x);
    }
    const Vertex v1 = argmax_into(y_side, membership(n, bx), thinned);
    if (!y_side.empty() && accept(v1, "v1")) return out;
  }

  Vertex best = 0;
  std::int64_t best_edges = -1;
  for (Vertex w = 0; w < n; ++w) {
    const auto e = second_edges(w);
    if (e > best_edges) {
      best_edges = e;
      best = w;
    }
  }
  accept(best, "argmax");
  out.warning = precondition ? "no vertex met the second-neighbourhood threshold; returning argmax"
                             : "edge count below (1/2 + eps) n^2 p / 2; returning argmax";
  if (out.threshold_met && precondition) out.warning = "two-phase search missed; argmax meets threshold";
  return out;
}

CycleSpectrum short_cycles_without_hamilton(const Graph& g, double eps, double p,
                                            const ShortCycleOptions& opt) {
  const int n = g.n();
  CycleSpectrum out;
  out.n = n;
  const int cap = opt.cap_override ? *opt.cap_override
                                   : static_cast<int>(std::floor(eps * n / 25600.0 + 1e-9));
  if (cap < 5) {
    out.missing.push_back({5, {MissingKind::RangeEmpty, ""}});
    return out;
  }
  auto fail_all = [&](const std::string& stage) {
    for (int t = 5; t <= cap; ++t) {
      if (!out.found.contains(t)) out.missing.push_back({t, {MissingKind::StageFailure, stage}});
    }
    return out;
  };
  const double n2p = static_cast<double>(n) * n * p;
  if (!(static_cast<double>(g.edge_count()) > (0.5 + eps) * n2p / 2.0)) return fail_all("precondition");

  const bool relaxed = opt.cap_override.has_value();
  const SpecialVertex sv = find_special_vertex(g, eps, p);
  const Vertex w = sv.w;
  std::vector<Vertex> reserve = g.neighbors(w);
  std::vector<Vertex> layer = second_neighborhood(g, w);
  if (relaxed) {
    const auto keep = (reserve.size() + 1) / 2;
    layer.insert(layer.end(), reserve.begin() + static_cast<std::ptrdiff_t>(keep), reserve.end());
    reserve.resize(keep);
    std::sort(layer.begin(), layer.end());
  }
  const auto in_reserve = membership(n, reserve);

  const int d = std::max(1, static_cast<int>(std::ceil(eps / 16.0 * n * p - 1e-9)));
  const auto core = peel_min_degree(g.induced(layer), d);
  if (!core) return fail_all("peel");

  Vertex w1 = -1;
  Vertex w2 = -1;
  for (Vertex z : core->vertices) {
    for (Vertex y : g.neighbors(z)) {
      if (in_reserve[static_cast<std::size_t>(y)]) {
        w1 = y;
        break;
      }
    }
    if (w1 >= 0) {
      w2 = z;
      break;
    }
  }
  if (w2 < 0) return fail_all("two-path");

  std::vector<Vertex> zone{w2};
  for (Vertex z : core->vertices) {
    if (z == w2) continue;
    if (!relaxed && g.has_edge(w1, z)) continue;  // trim N(w1) except w2
    zone.push_back(z);
  }
  if (zone.size() < 3) return fail_all("trim");
  const Graph local = compact_induced(g, zone);

  const int steps = cap - 4;
  const int scale = (steps + 2 + 2) / 3;
  const auto result = posa_path(local, 0, scale);
  if (std::holds_alternative<ExpansionFailure>(result)) return fail_all("posa");
  const auto& path = std::get<PosaPath>(result).path;

  const CycleLabeling identity = CycleLabeling::identity(n);
  for (int s = 1; s <= steps; ++s) {
    const int t = s + 4;
    if (s >= static_cast<int>(path.size())) {
      out.missing.push_back({t, {MissingKind::StageFailure, "posa"}});
      continue;
    }
    const Vertex xs = zone[static_cast<std::size_t>(path[static_cast<std::size_t>(s)])];
    Vertex closer = -1;
    for (Vertex y : g.neighbors(xs)) {
      if (in_reserve[static_cast<std::size_t>(y)] && y != w1) {
        closer = y;
        break;
      }
    }
    if (closer < 0) {
      out.missing.push_back({t, {MissingKind::StageFailure, "closure"}});
      continue;
    }
    std::vector<Vertex> cycle{w, w1};
    for (int k = 0; k <= s; ++k) cycle.push_back(zone[static_cast<std::size_t>(path[static_cast<std::size_t>(k)])]);
    cycle.push_back(closer);
    auto cert = make_certificate(std::move(cycle), n);
    if (verify_certificate(g, identity, cert)) {
      out.found[t] = std::move(cert);
    } else {
      out.missing.push_back({t, {MissingKind::StageFailure, "verify"}});
    }
  }
  return out;
}

}  // namespace pancyc
