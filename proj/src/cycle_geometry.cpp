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

#include "pancyc/cycle_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pancyc {

namespace {

int mod(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

// Inclusive walk from `from` to `to` moving by `step` (+1 or -1) on Z_n.
void append_arc(std::vector<Vertex>& out, int from, int to, int step, int n) {
  int x = mod(from, n);
  const int end = mod(to, n);
  while (true) {
    out.push_back(x);
    if (x == end) break;
    x = mod(x + step, n);
  }
}

}  // namespace

int circ_distance(long long k, int n) {
  const int r = mod(k, n);
  return std::min(r, n - r);
}

int direction_of(const Edge& e, int n) { return mod(static_cast<long long>(e.u) + e.v, n); }

int scaled_length(double frac, int n) {
  const auto len = static_cast<int>(std::floor(frac * n + 1e-9));
  return std::max(1, len);
}

std::span<const Edge> DirectionSlice::window(int k, int len) const {
  if (k < 1) throw std::invalid_argument("window index starts at 1");
  const int begin = std::min(k - 1, size());
  const int end = std::min(begin + std::max(len, 0), size());
  return std::span<const Edge>(ordered_edges).subspan(static_cast<std::size_t>(begin),
                                                      static_cast<std::size_t>(end - begin));
}

std::span<const Edge> DirectionSlice::middle(int len) const {
  if (2 * len >= size()) return {};
  return std::span<const Edge>(ordered_edges)
      .subspan(static_cast<std::size_t>(len), static_cast<std::size_t>(size() - 2 * len));
}

DirectionSlice direction_slice(int n, int i) {
  if (n < 3) throw std::invalid_argument("direction_slice needs n >= 3");
  DirectionSlice s;
  s.n = n;
  s.i = mod(i, n);
  if (s.i % 2 == 0) {
    const int m = s.i / 2;
    for (int d = 1; 2 * d < n; ++d) s.ordered_edges.push_back(Edge::make(mod(m - d, n), mod(m + d, n)));
  } else {
    const int a = (s.i - 1) / 2;
    const int b = (s.i + 1) / 2;
    for (int d = 0; 2 * d + 1 < n; ++d) {
      s.ordered_edges.push_back(Edge::make(mod(a - d, n), mod(b + d, n)));
    }
  }
  return s;
}

int rank_in_direction(const Edge& e, int n) {
  const int i = direction_of(e, n);
  const int two_n = 2 * n;
  const int off = mod(2LL * e.u - i, two_n);
  const int dist2 = std::min(off, two_n - off);
  return i % 2 == 0 ? (dist2 - 2) / 2 : (dist2 - 1) / 2;
}

bool is_crossing(const Edge& e1, const Edge& e2, int n) {
  (void)n;
  if (e1.touches(e2.u) || e1.touches(e2.v)) return false;
  const bool u_in = e1.u < e2.u && e2.u < e1.v;
  const bool v_in = e1.u < e2.v && e2.v < e1.v;
  return u_in != v_in;
}

bool is_close_crossing(const Edge& e1, const Edge& e2, int n, double beta) {
  if (!is_crossing(e1, e2, n)) return false;
  const int reach = scaled_length(beta, n);
  const int d = std::min({circ_distance(e1.u - e2.u, n), circ_distance(e1.u - e2.v, n),
                          circ_distance(e1.v - e2.u, n), circ_distance(e1.v - e2.v, n)});
  return d <= reach;
}

std::array<Vertex, 8> Shortcut::points(int n) const {
  const Vertex d = mod(i4, n);
  const Vertex d2 = mod(static_cast<long long>(i4) + l + 1, n);
  const Vertex c = mod(i3, n);
  const Vertex c2 = mod(i3 + 1LL, n);
  std::array<Vertex, 8> p{mod(i1, n), mod(i1 + 1LL, n), mod(i2, n), mod(i2 + 1LL, n), c, c2, d, d2};
  if (variant == ShortcutVariant::II) {
    p[4] = d;
    p[5] = d2;
    p[6] = c;
    p[7] = c2;
  }
  return p;
}

std::array<Edge, 4> Shortcut::edges(int n) const {
  return {Edge::make(mod(i1, n), mod(i3, n)), Edge::make(mod(i1 + 1LL, n), mod(i4, n)),
          Edge::make(mod(i2, n), mod(static_cast<long long>(i4) + l + 1, n)),
          Edge::make(mod(i2 + 1LL, n), mod(i3 + 1LL, n))};
}

bool validate_shortcut(const Shortcut& s, int n) {
  if (n < 8 || s.l < 0 || 2 * s.l > n) return false;
  for (Vertex x : {s.i1, s.i2, s.i3, s.i4}) {
    if (x < 0 || x >= n) return false;
  }
  const auto p = s.points(n);
  int prev = 0;
  for (std::size_t k = 1; k < p.size(); ++k) {
    const int off = mod(static_cast<long long>(p[k]) - p[0], n);
    if (off <= prev) return false;
    prev = off;
  }
  return true;
}

std::pair<CycleCertificate, CycleCertificate> cycles_from_shortcut(const Shortcut& s, int n) {
  if (!validate_shortcut(s, n)) {
    throw std::invalid_argument("cycles_from_shortcut: invalid shortcut");
  }
  const int a = s.i1;
  const int a2 = mod(a + 1, n);
  const int b = s.i2;
  const int b2 = mod(b + 1, n);
  const int c = s.i3;
  const int c2 = mod(c + 1, n);
  const int d = s.i4;
  const int d2 = mod(static_cast<long long>(d) + s.l + 1, n);

  std::vector<Vertex> small{a, c, c2, b2, b};
  append_arc(small, d2, d, -1, n);
  small.push_back(a2);

  std::vector<Vertex> big{a};
  if (s.variant == ShortcutVariant::I) {
    append_arc(big, c, b2, -1, n);
    append_arc(big, c2, d, +1, n);
    append_arc(big, a2, b, +1, n);
    append_arc(big, d2, a - 1, +1, n);
  } else {
    append_arc(big, c, d2, -1, n);
    append_arc(big, b, a2, -1, n);
    append_arc(big, d, b2, -1, n);
    append_arc(big, c2, a - 1, +1, n);
  }
  return {make_certificate(std::move(small), n), make_certificate(std::move(big), n)};
}

CrossingPair make_crossing_pair(const Edge& e1, const Edge& e2, int n, double beta) {
  CrossingPair cp;
  cp.e1 = e1;
  cp.e2 = e2;
  cp.i = direction_of(e1, n);
  cp.l = mod(static_cast<long long>(direction_of(e2, n)) - cp.i, n);
  cp.close = is_close_crossing(e1, e2, n, beta);
  return cp;
}

std::pair<CycleCertificate, CycleCertificate> cycles_from_crossing(const CrossingPair& cp, int n) {
  if (!is_crossing(cp.e1, cp.e2, n)) {
    throw std::invalid_argument("cycles_from_crossing: chords do not cross");
  }
  const int i = direction_of(cp.e1, n);
  const int l = mod(static_cast<long long>(direction_of(cp.e2, n)) - i, n);
  if (cp.i != i || cp.l != l) {
    throw std::invalid_argument("cycles_from_crossing: recorded directions " +
                                std::to_string(cp.i) + "," + std::to_string(cp.l) +
                                " disagree with the chords");
  }
  const int a = cp.e1.u;
  const int c = cp.e1.v;
  const bool u_inside = a < cp.e2.u && cp.e2.u < c;
  const int b = u_inside ? cp.e2.u : cp.e2.v;
  const int d = u_inside ? cp.e2.v : cp.e2.u;

  std::vector<Vertex> near{c};
  append_arc(near, a, b, +1, n);
  append_arc(near, d, c + 1, -1, n);

  std::vector<Vertex> far{d};
  append_arc(far, b, c, +1, n);
  append_arc(far, a, d + 1, -1, n);
  return {make_certificate(std::move(near), n), make_certificate(std::move(far), n)};
}

std::vector<int> close_crossing_ranks(const Edge& e, int dir, int n, double beta) {
  const auto slice = direction_slice(n, dir);
  std::vector<int> out;
  for (int r = 0; r < slice.size(); ++r) {
    if (is_close_crossing(e, slice.ordered_edges[static_cast<std::size_t>(r)], n, beta)) {
      out.push_back(r);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> covering_windows(std::vector<int> ranks, int len) {
  if (ranks.empty()) return std::pair{1, 1};
  std::sort(ranks.begin(), ranks.end());
  const int k1 = ranks.front() + 1;
  int k2 = k1;
  for (int r : ranks) {
    if (r < k1 - 1 + len) continue;
    if (k2 == k1) k2 = r + 1;
    if (r >= k2 - 1 + len) return std::nullopt;
  }
  return std::pair{k1, k2};
}

}  // namespace pancyc
