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

#include "pancyc/cycle_finder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pancyc/graph_props.hpp"

namespace pancyc {

namespace {

constexpr int kMaxChords = 4;
// Node budget for a capped cycle search on graphs above kUncappedOrder.
constexpr long long kDfsCap = 400000;
constexpr int kUncappedOrder = 16;

int mod(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

enum class SearchStatus { Found, Exhausted, Capped };

// Depth-first search for a cycle of exactly t vertices. With a chord budget
// below t the cycle is anchored on a C_n edge {i, i+1}, which every such
// cycle contains; otherwise the start is the smallest vertex of the cycle.
class CycleDfs {
 public:
  CycleDfs(const Graph& h, int t, int max_chords, long long cap)
      : h_(h), n_(h.n()), t_(t), max_chords_(max_chords), cap_(cap),
        on_(static_cast<std::size_t>(h.n()), false) {}

  SearchStatus run(std::vector<Vertex>& out) {
    if (t_ < 3 || t_ > n_) return SearchStatus::Exhausted;
    const bool anchored = max_chords_ < t_;
    for (Vertex s = 0; s < n_; ++s) {
      path_.clear();
      push(s);
      if (anchored) {
        const Vertex nxt = mod(s + 1, n_);
        if (!h_.has_edge(s, nxt)) {
          pop();
          continue;
        }
        push(nxt);
      }
      const bool ok = grow(anchored, 0);
      if (ok) {
        out = path_;
        return SearchStatus::Found;
      }
      while (!path_.empty()) pop();
      if (capped_) return SearchStatus::Capped;
    }
    return SearchStatus::Exhausted;
  }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    on_[static_cast<std::size_t>(v)] = true;
  }
  void pop() {
    on_[static_cast<std::size_t>(path_.back())] = false;
    path_.pop_back();
  }
  int chord_cost(Vertex a, Vertex b) const { return is_cycle_edge(Edge::make(a, b), n_) ? 0 : 1; }

  bool allowed(Vertex c, bool anchored) const {
    if (on_[static_cast<std::size_t>(c)]) return false;
    return anchored || c > path_.front();
  }

  bool grow(bool anchored, int chords) {
    if (++work_ > cap_) {
      capped_ = true;
      return false;
    }
    const Vertex last = path_.back();
    const Vertex first = path_.front();
    const int size = static_cast<int>(path_.size());
    if (size == t_) {
      return h_.has_edge(last, first) && chords + chord_cost(last, first) <= max_chords_;
    }
    if (size == t_ - 1) {
      const auto ra = h_.row(last);
      const auto rb = h_.row(first);
      for (std::size_t w = 0; w < ra.size(); ++w) {
        std::uint64_t bits = ra[w] & rb[w];
        while (bits != 0) {
          const Vertex c = static_cast<Vertex>(w * 64) + std::countr_zero(bits);
          bits &= bits - 1;
          if (!allowed(c, anchored)) continue;
          if (chords + chord_cost(last, c) + chord_cost(c, first) > max_chords_) continue;
          push(c);
          return true;
        }
      }
      return false;
    }
    // cycle neighbours first, then chords
    for (Vertex c : {mod(last + 1, n_), mod(last - 1, n_)}) {
      if (!h_.has_edge(last, c) || !allowed(c, anchored)) continue;
      push(c);
      if (grow(anchored, chords)) return true;
      pop();
      if (capped_) return false;
    }
    if (chords >= max_chords_) return false;
    for (Vertex c : h_.neighbors(last)) {
      if (chord_cost(last, c) == 0 || !allowed(c, anchored)) continue;
      push(c);
      if (grow(anchored, chords + 1)) return true;
      pop();
      if (capped_) return false;
    }
    return false;
  }

  const Graph& h_;
  int n_;
  int t_;
  int max_chords_;
  long long cap_;
  long long work_ = 0;
  bool capped_ = false;
  std::vector<bool> on_;
  std::vector<Vertex> path_;
};

long long cap_for(int n) { return n <= kUncappedOrder ? (1LL << 62) : kDfsCap; }

std::optional<std::vector<Vertex>> four_cycle(const Graph& h) {
  const int n = h.n();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (codegree(h, a, b) < 2) continue;
      std::vector<Vertex> mids;
      const auto ra = h.row(a);
      const auto rb = h.row(b);
      for (std::size_t w = 0; w < ra.size() && mids.size() < 2; ++w) {
        std::uint64_t bits = ra[w] & rb[w];
        while (bits != 0 && mids.size() < 2) {
          mids.push_back(static_cast<Vertex>(w * 64) + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
      return std::vector<Vertex>{a, mids[0], b, mids[1]};
    }
  }
  return std::nullopt;
}

// Label-space state shared by the stages of one spectrum run.
struct Context {
  const Graph& h;
  int n;
  ResolvedRequest req;
  int reach;  // max(1, floor(beta n))
  std::vector<DirectionSlice> slices;
  std::optional<GoodDirections> good;

  Context(const Graph& labeled, const ResolvedRequest& r)
      : h(labeled), n(labeled.n()), req(r), reach(scaled_length(r.beta, labeled.n())) {
    slices.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) slices.push_back(direction_slice(n, i));
  }
};

GoodDirections compute_good(const Graph& h, const std::vector<DirectionSlice>& slices, double beta,
                            double eps_prime, double p) {
  const int n = h.n();
  const int len = scaled_length(beta, n);
  const int k_limit = static_cast<int>(std::floor((0.5 - beta) * n + 1e-9));
  GoodDirections out;
  out.is_good.assign(static_cast<std::size_t>(n), false);
  std::vector<int> prefix;
  auto within = [&](int count, int size) {
    const double expect = size * p;
    return std::abs(count - expect) <= eps_prime * expect + 1e-9;
  };
  for (int i = 0; i < n; ++i) {
    const auto& s = slices[static_cast<std::size_t>(i)];
    prefix.assign(static_cast<std::size_t>(s.size()) + 1, 0);
    for (int r = 0; r < s.size(); ++r) {
      prefix[static_cast<std::size_t>(r) + 1] =
          prefix[static_cast<std::size_t>(r)] + (h.has_edge(s.ordered_edges[static_cast<std::size_t>(r)]) ? 1 : 0);
    }
    bool good = true;
    const int k_max = std::min(k_limit, s.size() - len + 1);
    for (int k = 1; k <= k_max && good; ++k) {
      const int count = prefix[static_cast<std::size_t>(k - 1 + len)] - prefix[static_cast<std::size_t>(k - 1)];
      good = within(count, len);
    }
    if (good && s.size() > 2 * len) {
      const int size = s.size() - 2 * len;
      const int count = prefix[static_cast<std::size_t>(s.size() - len)] - prefix[static_cast<std::size_t>(len)];
      good = within(count, size);
    }
    out.is_good[static_cast<std::size_t>(i)] = good;
    if (good) {
      out.good.push_back(i);
    } else {
      ++out.bad_count;
    }
  }
  return out;
}

std::optional<CycleCertificate> crossing_cert(const Edge& e1, const Edge& e2, const Context& ctx) {
  const auto cp = make_crossing_pair(e1, e2, ctx.n, ctx.req.beta);
  return cycles_from_crossing(cp, ctx.n).first;
}

// Close partners of e1 in direction j: chords with an endpoint within reach
// of an endpoint of e1.
std::optional<CycleCertificate> close_partner_cert(const Edge& e1, int j, const Context& ctx) {
  for (Vertex base : {e1.u, e1.v}) {
    for (int d = -ctx.reach; d <= ctx.reach; ++d) {
      const Vertex z = mod(base + d, ctx.n);
      const Vertex w = mod(static_cast<long long>(j) - z, ctx.n);
      if (z == w) continue;
      const Edge f = Edge::make(z, w);
      if (!ctx.h.has_edge(f)) continue;
      if (!is_close_crossing(e1, f, ctx.n, ctx.req.beta)) continue;
      return crossing_cert(e1, f, ctx);
    }
  }
  return std::nullopt;
}

std::optional<CycleCertificate> medium_search(Context& ctx, int t) {
  const int n = ctx.n;
  const int l = t - 2;
  if (l < 2 || l > n - 2) return std::nullopt;
  if (!ctx.good) {
    ctx.good = compute_good(ctx.h, ctx.slices, ctx.req.beta, ctx.req.eps_prime, ctx.req.p);
  }
  const bool antipodal = 2 * l == n;
  auto pair_wanted = [&](int i) { return !antipodal || i < mod(i + l, n); };

  // good direction pairs, middle edges, close partners
  for (int i = 0; i < n; ++i) {
    const int j = mod(i + l, n);
    if (!pair_wanted(i)) continue;
    if (!ctx.good->is_good[static_cast<std::size_t>(i)] || !ctx.good->is_good[static_cast<std::size_t>(j)]) continue;
    for (const Edge& e1 : ctx.slices[static_cast<std::size_t>(i)].middle(ctx.reach)) {
      if (!ctx.h.has_edge(e1)) continue;
      if (auto c = close_partner_cert(e1, j, ctx)) return c;
    }
  }
  // every direction, every edge, close partners
  for (int i = 0; i < n; ++i) {
    const int j = mod(i + l, n);
    if (!pair_wanted(i)) continue;
    for (const Edge& e1 : ctx.slices[static_cast<std::size_t>(i)].ordered_edges) {
      if (!ctx.h.has_edge(e1)) continue;
      if (auto c = close_partner_cert(e1, j, ctx)) return c;
    }
  }
  // every crossing pair
  for (int i = 0; i < n; ++i) {
    const int j = mod(i + l, n);
    for (const Edge& e1 : ctx.slices[static_cast<std::size_t>(i)].ordered_edges) {
      if (!ctx.h.has_edge(e1)) continue;
      for (const Edge& e2 : ctx.slices[static_cast<std::size_t>(j)].ordered_edges) {
        if (ctx.h.has_edge(e2) && is_crossing(e1, e2, n)) return crossing_cert(e1, e2, ctx);
      }
    }
  }
  return std::nullopt;
}

std::optional<Shortcut> exhaustive_shortcut(const Graph& h, int l) {
  const int n = h.n();
  if (l < 0 || 2 * l > n || l + 8 > n) return std::nullopt;
  auto has = [&](long long a, long long b) { return h.has_edge(mod(a, n), mod(b, n)); };
  for (int a = 0; a < n; ++a) {
    for (int o2 = 2; o2 <= n - 6 - l; ++o2) {
      const int b = a + o2;
      // variant I: a, a+1, b, b+1, c, c+1, d, d+l+1
      int min_c = -1;
      for (int oc = o2 + 2; oc <= n - 4 - l; ++oc) {
        if (has(a, a + oc) && has(b + 1, a + oc + 1)) {
          min_c = oc;
          break;
        }
      }
      if (min_c >= 0) {
        for (int od = n - 2 - l; od >= min_c + 2; --od) {
          if (has(a + 1, a + od) && has(b, a + od + l + 1)) {
            return Shortcut{ShortcutVariant::I, a, mod(b, n), mod(a + min_c, n), mod(a + od, n), l};
          }
        }
      }
      // variant II: a, a+1, b, b+1, d, d+l+1, c, c+1
      int min_d = -1;
      for (int od = o2 + 2; od <= n - 4 - l; ++od) {
        if (has(a + 1, a + od) && has(b, a + od + l + 1)) {
          min_d = od;
          break;
        }
      }
      if (min_d >= 0) {
        for (int oc = n - 2; oc >= min_d + l + 2; --oc) {
          if (has(a, a + oc) && has(b + 1, a + oc + 1)) {
            return Shortcut{ShortcutVariant::II, a, mod(b, n), mod(a + oc, n), mod(a + min_d, n), l};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Shortcut> guided_shortcut(const Graph& h, int l, const ShortcutSearchOptions& opt) {
  const int n = h.n();
  if (l < 0 || 2 * l > n || l + 8 > n) return std::nullopt;
  const double np = n * opt.p;
  const int half = (n - 2) / 2;  // floor(n/2 - 1)

  std::vector<int> in_i;
  for (int i = 0; i <= half; ++i) {
    if (h.degree(2 * i) + h.degree(2 * i + 1) >= (1.0 + opt.eps_prime / 2.0) * np) in_i.push_back(i);
  }
  if (in_i.empty()) return std::nullopt;

  // densest degree bucket [k, k + width)
  const double width = std::max(1.0, opt.eps_prime / 4.0 * np);
  std::sort(in_i.begin(), in_i.end(), [&](int x, int y) {
    return std::pair{h.degree(2 * x), x} < std::pair{h.degree(2 * y), y};
  });
  std::size_t best_lo = 0;
  std::size_t best_len = 0;
  for (std::size_t lo = 0, hi = 0; lo < in_i.size(); ++lo) {
    hi = std::max(hi, lo);
    while (hi < in_i.size() &&
           h.degree(2 * in_i[hi]) < h.degree(2 * in_i[lo]) + width) {
      ++hi;
    }
    if (hi - lo > best_len) {
      best_len = hi - lo;
      best_lo = lo;
    }
  }
  std::vector<int> bucket(in_i.begin() + static_cast<std::ptrdiff_t>(best_lo),
                          in_i.begin() + static_cast<std::ptrdiff_t>(best_lo + best_len));

  // densest arc of length span among the points 2i
  const int span = std::max(1, static_cast<int>(std::floor(opt.eps_prime / 16.0 * n + 1e-9)));
  std::sort(bucket.begin(), bucket.end());
  std::vector<int> close;
  for (int start : bucket) {
    std::vector<int> here;
    for (int x : bucket) {
      if (mod(2LL * x - 2LL * start, n) <= span) here.push_back(x);
    }
    if (here.size() > close.size()) close = std::move(here);
  }
  if (close.size() < 2) return std::nullopt;

  for (std::size_t p = 0; p < close.size(); ++p) {
    for (std::size_t q = p + 1; q < close.size(); ++q) {
      int i1 = 2 * close[p];
      int i2 = 2 * close[q];
      if (mod(i2 - i1, n) > span) std::swap(i1, i2);
      const int k = mod(i2 - i1, n);
      if (k < 2) continue;
      // offsets from i1; A = [k+2, n-1]
      auto at = [&](int off) { return mod(static_cast<long long>(i1) + off, n); };
      for (int o4 = k + 2; o4 + l + 1 <= n - 1; ++o4) {
        if (!h.has_edge(at(1), at(o4)) || !h.has_edge(i2, at(o4 + l + 1))) continue;
        // A'' avoids J = [o4, o4+l+1] together with the successor
        for (int o3 = k + 2; o3 + 1 <= n - 1; ++o3) {
          if (o3 + 1 >= o4 && o3 <= o4 + l + 1) continue;
          if (!h.has_edge(i1, at(o3)) || !h.has_edge(at(k + 1), at(o3 + 1))) continue;
          const Shortcut s{o3 < o4 ? ShortcutVariant::I : ShortcutVariant::II, i1, i2, at(o3), at(o4), l};
          if (validate_shortcut(s, n)) return s;
        }
      }
    }
  }
  return std::nullopt;
}

CycleCertificate labeling_cycle(int n) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return make_certificate(std::move(all), n);
}

// Lengths 3..min(7, n) in label space; fills found/missing for those t.
void tiny_stage(const Graph& h, bool bipartite, CycleSpectrum& out) {
  const int n = h.n();
  for (int t = 3; t <= std::min(7, n); ++t) {
    if (bipartite && t % 2 == 1) {
      out.missing.push_back({t, {MissingKind::NoOddCycle, ""}});
      continue;
    }
    std::optional<std::vector<Vertex>> cyc;
    bool capped = false;
    if (t == 3) {
      if (auto tri = find_triangle(h)) cyc = std::vector<Vertex>(tri->begin(), tri->end());
    } else if (t == 4) {
      cyc = four_cycle(h);
    } else {
      std::vector<Vertex> path;
      auto st = CycleDfs(h, t, kMaxChords, cap_for(n)).run(path);
      if (st == SearchStatus::Found) {
        cyc = path;
      } else {
        st = CycleDfs(h, t, t, cap_for(n) * 10).run(path);
        if (st == SearchStatus::Found) cyc = path;
        capped = st == SearchStatus::Capped;
      }
    }
    if (cyc) {
      out.found[t] = make_certificate(std::move(*cyc), n);
    } else {
      out.missing.push_back({t, {MissingKind::StageFailure, capped ? "tiny-capped" : "tiny"}});
    }
  }
}

void sort_missing(CycleSpectrum& s) {
  std::sort(s.missing.begin(), s.missing.end(),
            [](const MissingLength& a, const MissingLength& b) { return a.t < b.t; });
}

// Drops anything that fails verification in the caller's vertex space.
void verify_all(const Graph& g, const CycleLabeling& labeling, CycleSpectrum& s) {
  for (auto it = s.found.begin(); it != s.found.end();) {
    if (verify_certificate(g, labeling, it->second) && it->second.t == it->first) {
      ++it;
    } else {
      s.missing.push_back({it->first, {MissingKind::StageFailure, "verify"}});
      it = s.found.erase(it);
    }
  }
  sort_missing(s);
}

}  // namespace

ResolvedRequest resolve(const SpectrumRequest& req, const Graph& g) {
  ResolvedRequest r;
  r.eps = req.eps;
  if (!(r.eps > 0.0 && r.eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  r.delta = req.delta.value_or(r.eps / 64.0);
  r.beta = req.beta.value_or(std::min(r.delta / 4.0, r.eps / 10.0));
  r.eps_prime = req.eps_prime.value_or(r.eps / 10.0);
  const double pairs = 0.5 * g.n() * (g.n() - 1.0);
  r.p = req.p.value_or(static_cast<double>(g.edge_count()) / pairs);
  if (!(r.delta > 0.0 && r.delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(r.beta > 0.0 && r.beta < 1.0 / 6.0)) throw std::invalid_argument("beta must lie in (0, 1/6)");
  if (!(r.eps_prime > 0.0 && r.eps_prime < 1.0)) {
    throw std::invalid_argument("eps_prime must lie in (0, 1)");
  }
  if (!(r.p > 0.0 && r.p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  return r;
}

std::string MissingReason::str() const {
  switch (kind) {
    case MissingKind::NoOddCycle: return "no-odd-cycle";
    case MissingKind::NoShortcut: return "no-shortcut";
    case MissingKind::NoCrossing: return "no-crossing";
    case MissingKind::RangeEmpty: return "range-empty";
    case MissingKind::StageFailure: return "stage-failure:" + stage;
  }
  return "stage-failure:unknown";
}

MissingReason MissingReason::parse(const std::string& text) {
  if (text == "no-odd-cycle") return {MissingKind::NoOddCycle, ""};
  if (text == "no-shortcut") return {MissingKind::NoShortcut, ""};
  if (text == "no-crossing") return {MissingKind::NoCrossing, ""};
  if (text == "range-empty") return {MissingKind::RangeEmpty, ""};
  const std::string prefix = "stage-failure:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    return {MissingKind::StageFailure, text.substr(prefix.size())};
  }
  throw std::invalid_argument("unknown missing reason '" + text + "'");
}

double CycleSpectrum::found_ratio() const {
  if (n <= 2) return 0.0;
  return static_cast<double>(found.size()) / (n - 2);
}

int CycleSpectrum::max_extra_edges() const {
  int m = 0;
  for (const auto& [t, cert] : found) m = std::max(m, static_cast<int>(cert.extra_edges.size()));
  return m;
}

nlohmann::json CycleSpectrum::to_json() const {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [t, cert] : found) f[std::to_string(t)] = pancyc::to_json(cert);
  nlohmann::json m = nlohmann::json::array();
  for (const auto& miss : missing) m.push_back({{"t", miss.t}, {"reason", miss.reason.str()}});
  return {{"n", n}, {"found", f}, {"missing", m}};
}

CycleSpectrum find_tiny_cycles(const Graph& g, const CycleLabeling& labeling) {
  const Graph h = labeling.to_label_space(g);
  CycleSpectrum out;
  out.n = g.n();
  tiny_stage(h, is_bipartite(h), out);
  verify_all(g, labeling, out);
  return out;
}

std::optional<Shortcut> find_shortcut_guided(const Graph& g, const CycleLabeling& labeling, int l,
                                             const ShortcutSearchOptions& opt) {
  return guided_shortcut(labeling.to_label_space(g), l, opt);
}

std::optional<Shortcut> find_shortcut_exhaustive(const Graph& g, const CycleLabeling& labeling,
                                                 int l) {
  return exhaustive_shortcut(labeling.to_label_space(g), l);
}

std::optional<Shortcut> find_shortcut(const Graph& g, const CycleLabeling& labeling, int l,
                                      const ShortcutSearchOptions& opt) {
  const Graph h = labeling.to_label_space(g);
  if (auto s = guided_shortcut(h, l, opt)) return s;
  return exhaustive_shortcut(h, l);
}

GoodDirections good_directions(const Graph& g, const CycleLabeling& labeling, double beta,
                               double eps_prime, double p) {
  if (!(beta > 0.0 && beta < 1.0 / 6.0)) throw std::invalid_argument("beta must lie in (0, 1/6)");
  const Graph h = labeling.to_label_space(g);
  std::vector<DirectionSlice> slices;
  slices.reserve(static_cast<std::size_t>(h.n()));
  for (int i = 0; i < h.n(); ++i) slices.push_back(direction_slice(h.n(), i));
  return compute_good(h, slices, beta, eps_prime, p);
}

std::optional<CycleCertificate> find_medium_cycle(const Graph& g, const CycleLabeling& labeling,
                                                  int t, const SpectrumRequest& req) {
  const Graph h = labeling.to_label_space(g);
  Context ctx(h, resolve(req, g));
  auto cert = medium_search(ctx, t);
  if (cert && !verify_certificate(g, labeling, *cert)) return std::nullopt;
  return cert;
}

CycleSpectrum find_all_cycles(const Graph& g, const CycleLabeling& labeling,
                              const SpectrumRequest& req) {
  if (!labeling.is_hamilton_witness(g)) {
    throw std::invalid_argument("find_all_cycles: labeling does not witness a Hamilton cycle");
  }
  const int n = g.n();
  const Graph h = labeling.to_label_space(g);
  Context ctx(h, resolve(req, g));
  CycleSpectrum out;
  out.n = n;
  out.found[n] = labeling_cycle(n);
  const bool bipartite = is_bipartite(h);
  tiny_stage(h, bipartite, out);

  const int reach_len = std::max(1, static_cast<int>(std::floor(ctx.req.delta * n + 1e-9)));
  enum class Range { Short, Long, Medium };
  auto range_of = [&](int t) {
    if (t <= reach_len) return Range::Short;
    if (t >= n - reach_len) return Range::Long;
    return Range::Medium;
  };
  std::vector<int> todo;
  for (int t = 8; t < n; ++t) {
    if (bipartite && t % 2 == 1) {
      out.missing.push_back({t, {MissingKind::NoOddCycle, ""}});
    } else {
      todo.push_back(t);
    }
  }
  auto wanted = [&](int t) {
    return t >= 8 && t < n && !out.found.contains(t) &&
           std::find(todo.begin(), todo.end(), t) != todo.end();
  };

  // shortcuts for the short and long ranges, in increasing l
  const ShortcutSearchOptions opt{ctx.req.eps_prime, ctx.req.p};
  std::map<int, std::optional<Shortcut>> tried;
  auto shortcut_for = [&](int l) -> const std::optional<Shortcut>& {
    auto it = tried.find(l);
    if (it == tried.end()) {
      auto s = guided_shortcut(h, l, opt);
      if (!s) s = exhaustive_shortcut(h, l);
      it = tried.emplace(l, s).first;
    }
    return it->second;
  };
  auto take_shortcut = [&](const Shortcut& s) {
    auto [small, big] = cycles_from_shortcut(s, n);
    if (wanted(small.t)) out.found[small.t] = std::move(small);
    if (wanted(big.t)) out.found[big.t] = std::move(big);
  };
  for (int l = 0; l <= reach_len; ++l) {
    const bool need_short = wanted(l + 8) && range_of(l + 8) == Range::Short;
    const bool need_long = l >= 1 && wanted(n - l) && range_of(n - l) == Range::Long;
    if (!need_short && !need_long) continue;
    if (const auto& s = shortcut_for(l)) take_shortcut(*s);
  }

  // close crossings for the medium range
  for (int t : todo) {
    if (out.found.contains(t) || range_of(t) != Range::Medium) continue;
    if (auto c = medium_search(ctx, t)) out.found[t] = std::move(*c);
  }

  // fallbacks: the other construction, then a chord-bounded search
  for (int t : todo) {
    if (out.found.contains(t)) continue;
    const Range r = range_of(t);
    if (r == Range::Medium) {
      for (int l : {t - 8, n - t}) {
        if (l < 0 || 2 * l > n) continue;
        if (const auto& s = shortcut_for(l)) take_shortcut(*s);
        if (out.found.contains(t)) break;
      }
    } else if (auto c = medium_search(ctx, t)) {
      out.found[t] = std::move(*c);
    }
    if (out.found.contains(t)) continue;
    std::vector<Vertex> path;
    if (CycleDfs(h, t, kMaxChords, cap_for(n)).run(path) == SearchStatus::Found) {
      out.found[t] = make_certificate(std::move(path), n);
      continue;
    }
    out.missing.push_back(
        {t, {r == Range::Medium ? MissingKind::NoCrossing : MissingKind::NoShortcut, ""}});
  }
  verify_all(g, labeling, out);
  return out;
}

}  // namespace pancyc
