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

#include "pancyc/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace pancyc {

namespace {

constexpr int kMaxPackedN = 362;

void check_guard(int n, int l, int guard_n) {
  if (n > guard_n) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the size guard; need n <= " +
                                std::to_string(guard_n) + " (raise --guard-n to override)");
  }
  if (n > kMaxPackedN) {
    throw std::invalid_argument("hyperedge keys pack edge indices into 16 bits; need n <= " +
                                std::to_string(kMaxPackedN));
  }
  if (n < 3 || l < 0 || 2 * l > n) {
    throw std::invalid_argument("shortcut hypergraph needs n >= 3 and 0 <= 2l <= n");
  }
}

std::uint64_t pack(std::array<std::int32_t, 4> key) {
  std::sort(key.begin(), key.end());
  std::uint64_t out = 0;
  for (auto k : key) out = (out << 16) | static_cast<std::uint64_t>(k);
  return out;
}

std::array<std::int32_t, 4> unpack(std::uint64_t key) {
  std::array<std::int32_t, 4> out{};
  for (int k = 3; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(key & 0xFFFF);
    key >>= 16;
  }
  return out;
}

// Calls visit(shortcut) for every valid (variant, i1, i2, i3, i4) tuple.
template <typename Visit>
void for_each_shortcut(int n, int l, Visit&& visit) {
  for (int a = 0; a < n; ++a) {
    auto at = [&](int off) { return (a + off) % n; };
    for (int o2 = 2; o2 <= n - 6 - l; ++o2) {
      for (int o3 = o2 + 2; o3 <= n - 4 - l; ++o3) {
        for (int o4 = o3 + 2; o4 + l + 1 <= n - 1; ++o4) {
          visit(Shortcut{ShortcutVariant::I, a, at(o2), at(o3), at(o4), l});
        }
      }
      for (int o4 = o2 + 2; o4 <= n - 4 - l; ++o4) {
        for (int o3 = o4 + l + 2; o3 <= n - 2; ++o3) {
          visit(Shortcut{ShortcutVariant::II, a, at(o2), at(o3), at(o4), l});
        }
      }
    }
  }
}

std::array<std::int32_t, 4> key_of(const Shortcut& s, int n) {
  const auto e = s.edges(n);
  return {edge_index(e[0], n), edge_index(e[1], n), edge_index(e[2], n), edge_index(e[3], n)};
}

}  // namespace

int edge_index(const Edge& e, int n) { return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1); }

Edge edge_at(int index, int n) {
  int u = 0;
  while (index >= n - 1 - u) {
    index -= n - 1 - u;
    ++u;
  }
  return Edge{u, u + 1 + index};
}

double ShortcutHypergraph::density_constant() const {
  const double n4 = std::pow(static_cast<double>(n), 4);
  return static_cast<double>(edge_count()) / n4;
}

ShortcutHypergraph build_shortcut_hypergraph(int n, int l, int guard_n) {
  check_guard(n, l, guard_n);
  std::vector<std::uint64_t> keys;
  for_each_shortcut(n, l, [&](const Shortcut& s) { keys.push_back(pack(key_of(s, n))); });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  ShortcutHypergraph h;
  h.n = n;
  h.l = l;
  h.hyperedges.reserve(keys.size());
  for (auto k : keys) h.hyperedges.push_back(unpack(k));
  return h;
}

std::int64_t count_shortcuts(const Graph& g, const CycleLabeling& labeling, int l, int guard_n) {
  const int n = g.n();
  check_guard(n, l, guard_n);
  const Graph h = labeling.to_label_space(g);
  std::vector<std::uint64_t> keys;
  for_each_shortcut(n, l, [&](const Shortcut& s) {
    for (const Edge& e : s.edges(n)) {
      if (!h.has_edge(e)) return;
    }
    keys.push_back(pack(key_of(s, n)));
  });
  std::sort(keys.begin(), keys.end());
  return std::unique(keys.begin(), keys.end()) - keys.begin();
}

std::vector<std::int32_t> edge_indices_of(const Graph& g, const CycleLabeling& labeling) {
  const Graph h = labeling.to_label_space(g);
  std::vector<std::int32_t> out;
  for (const Edge& e : h.edges()) out.push_back(edge_index(e, h.n()));
  return out;
}

nlohmann::json DensityReport::to_json() const {
  return {{"alpha", alpha}, {"eps", eps},         {"f_eps", f_eps}, {"subset_size", subset_size},
          {"induced", induced}, {"total", total}, {"pass", pass}};
}

DensityReport check_density(const ShortcutHypergraph& h, const std::vector<std::int32_t>& subset,
                            double eps) {
  std::vector<bool> in(static_cast<std::size_t>(h.vertex_count()), false);
  std::int64_t size = 0;
  for (auto x : subset) {
    if (x < 0 || x >= h.vertex_count()) throw std::invalid_argument("subset index out of range");
    if (!in[static_cast<std::size_t>(x)]) ++size;
    in[static_cast<std::size_t>(x)] = true;
  }
  if (static_cast<double>(size) < (0.5 + eps) * static_cast<double>(h.vertex_count()) - 1e-9) {
    throw std::invalid_argument("subset has " + std::to_string(size) + " vertices, below (1/2 + eps)|V|");
  }
  DensityReport r;
  r.eps = eps;
  r.f_eps = std::pow(eps / 16.0, 8);
  r.subset_size = size;
  r.total = h.edge_count();
  for (const auto& a : h.hyperedges) {
    if (std::all_of(a.begin(), a.end(), [&](std::int32_t x) { return in[static_cast<std::size_t>(x)]; })) {
      ++r.induced;
    }
  }
  r.pass = static_cast<double>(r.induced) >= r.f_eps * static_cast<double>(r.total);
  return r;
}

nlohmann::json BoundednessEstimate::to_json() const {
  return {{"i", i},       {"q", q},       {"trials", trials},         {"mean", mean},
          {"std_error", std_error}, {"unit", unit}, {"k_estimate", k_estimate}};
}

std::array<BoundednessEstimate, 3> estimate_boundedness_all(const ShortcutHypergraph& h, double p,
                                                            double q, int trials, RngSeed seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(p <= q && q <= 1.0 && p >= 0.0)) throw std::invalid_argument("need 0 <= p <= q <= 1");
  const auto nv = static_cast<std::size_t>(h.vertex_count());
  std::array<std::vector<double>, 3> sums;
  std::vector<bool> in(nv);
  std::array<std::vector<std::int64_t>, 3> deg;
  for (auto& d : deg) d.assign(nv, 0);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(RngSeed{seed.seed, seed.stream_id * 1000003ULL + static_cast<std::uint64_t>(trial)}.derive(11));
    for (std::size_t v = 0; v < nv; ++v) in[v] = rng.bernoulli(q);
    for (auto& d : deg) std::fill(d.begin(), d.end(), 0);
    for (const auto& a : h.hyperedges) {
      int cnt = 0;
      for (auto x : a) cnt += in[static_cast<std::size_t>(x)] ? 1 : 0;
      for (auto x : a) {
        const int others = cnt - (in[static_cast<std::size_t>(x)] ? 1 : 0);
        for (int i = 1; i <= 3 && i <= others; ++i) ++deg[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x)];
      }
    }
    for (std::size_t k = 0; k < 3; ++k) {
      double s = 0;
      for (auto d : deg[k]) s += static_cast<double>(d) * static_cast<double>(d);
      sums[k].push_back(s);
    }
  }
  std::array<BoundednessEstimate, 3> out;
  const double e = static_cast<double>(h.edge_count());
  for (std::size_t k = 0; k < 3; ++k) {
    auto& r = out[k];
    r.i = static_cast<int>(k) + 1;
    r.q = q;
    r.trials = trials;
    double mean = 0;
    for (double s : sums[k]) mean += s;
    mean /= trials;
    double var = 0;
    for (double s : sums[k]) var += (s - mean) * (s - mean);
    var = trials > 1 ? var / (trials - 1) : 0.0;
    r.mean = mean;
    r.std_error = std::sqrt(var / trials);
    r.unit = std::pow(q, 2 * r.i) * e * e / static_cast<double>(h.vertex_count());
    r.k_estimate = r.unit > 0 ? mean / r.unit : 0.0;
  }
  return out;
}

BoundednessEstimate estimate_boundedness(const ShortcutHypergraph& h, double p, double q, int i,
                                         int trials, RngSeed seed) {
  if (i < 1 || i > 3) throw std::invalid_argument("i must be 1, 2 or 3");
  return estimate_boundedness_all(h, p, q, trials, seed)[static_cast<std::size_t>(i - 1)];
}

void append_regression_row(const std::string& path, const ShortcutHypergraph& h) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for appending");
  if (fresh) out << "n,l,edges,c\n";
  out << h.n << ',' << h.l << ',' << h.edge_count() << ',' << h.density_constant() << '\n';
}

}  // namespace pancyc
