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


#include "pancyc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pancyc/appendix.hpp"
#include "pancyc/certificate.hpp"

namespace pancyc {
namespace {

using nlohmann::json;

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void check_fraction(const char* name, double x, bool allow_one) {
  const bool ok = x > 0.0 && (allow_one ? x <= 1.0 : x < 1.0);
  if (!ok) throw std::invalid_argument(std::string(name) + " out of range: " + std::to_string(x));
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Sample standard deviation; zero for fewer than two values.
double std_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// Runs body(k) for k in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) body(k);
    });
  }
  for (auto& th : pool) th.join();
}

// The trial index already lives in the seed; reusing it as the stream id
// would cancel the splitmix term inside Rng.
RngSeed trial_stream(const ExperimentConfig& c, int index) {
  return RngSeed{trial_seed(c.seed, index), 0};
}

TrialRecord run_trial(const ExperimentConfig& c, int index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed(c.seed, index);
  try {
    const RngSeed rs = trial_stream(c, index);
    const GnpParams model = c.gnp();
    PlantedGraph planted = plant_hamilton(model, rs);
    rec.edges_before = planted.graph.edge_count();
    rec.planted_edges = planted.planted_edges;
    AdversaryOutcome adv = apply_adversary(planted.graph, planted.labeling, c.adversary, rs.derive(20));
    rec.edges_after = adv.graph.edge_count();
    rec.adversary = std::move(adv.record);

    const SpectrumRequest req = c.request();
    const ResolvedRequest r = resolve(req, adv.graph);
    rec.bad_directions =
        good_directions(adv.graph, planted.labeling, r.beta, r.eps_prime, r.p).bad_count;

    const CycleSpectrum spectrum = find_all_cycles(adv.graph, planted.labeling, req);
    for (const auto& [t, cert] : spectrum.found) {
      if (cert.t != t || !verify_certificate(adv.graph, planted.labeling, cert)) rec.all_verified = false;
    }
    rec.found = static_cast<int>(spectrum.found.size());
    rec.missing = spectrum.missing;
    rec.max_extra_edges = spectrum.max_extra_edges();
    rec.found_ratio = spectrum.found_ratio();
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.all_verified = false;
  }
  return rec;
}

json missing_json(const std::vector<MissingLength>& missing) {
  json out = json::array();
  for (const auto& m : missing) out.push_back({{"t", m.t}, {"reason", m.reason.str()}});
  return out;
}

std::string missing_cell(const std::vector<MissingLength>& missing) {
  std::string s;
  for (const auto& m : missing) {
    if (!s.empty()) s += ' ';
    s += std::to_string(m.t) + ':' + m.reason.str();
  }
  return s;
}

// The report must not depend on the worker count or on where it is written.
json reproducible_config(const ExperimentConfig& c) {
  json j = c.to_json();
  j.erase("threads");
  j.erase("out_csv");
  j.erase("out_json");
  return j;
}

void write_schema_line(std::ostream& out) { out << "# schema_version=" << kCsvSchemaVersion << '\n'; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (p) check_fraction("p", *p, true);
  else if (!(C > 0.0)) throw std::invalid_argument("C must be positive");
  adversary.validate(n);
  check_fraction("eps", eps, true);
  if (delta) check_fraction("delta", *delta, false);
  if (beta && !(*beta > 0.0 && *beta < 1.0 / 6.0)) throw std::invalid_argument("beta must lie in (0, 1/6)");
  if (eps_prime) check_fraction("eps_prime", *eps_prime, false);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (guard_n < 3) throw std::invalid_argument("guard_n must be >= 3");
}

GnpParams ExperimentConfig::gnp() const {
  return p ? GnpParams::explicit_p(n, *p) : GnpParams::threshold(n, C);
}

SpectrumRequest ExperimentConfig::request() const {
  SpectrumRequest r;
  r.eps = eps;
  r.delta = delta;
  r.beta = beta;
  r.eps_prime = eps_prime;
  r.p = gnp().p;
  return r;
}

json ExperimentConfig::to_json() const {
  json j;
  j["n"] = n;
  j["C"] = C;
  j["p"] = p ? json(*p) : json(nullptr);
  j["adversary"] = {{"kind", to_string(adversary.kind)}, {"keep", adversary.keep_fraction}};
  j["eps"] = eps;
  j["delta"] = delta ? json(*delta) : json(nullptr);
  j["beta"] = beta ? json(*beta) : json(nullptr);
  j["eps_prime"] = eps_prime ? json(*eps_prime) : json(nullptr);
  j["trials"] = trials;
  j["seed"] = seed;
  j["threads"] = threads;
  j["guard_n"] = guard_n;
  j["out_csv"] = out_csv;
  j["out_json"] = out_json;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j, ExperimentConfig base) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  auto opt = [&](const char* key, std::optional<double>& slot) {
    if (!j.contains(key)) return;
    if (j[key].is_null()) slot.reset();
    else slot = j[key].get<double>();
  };
  if (j.contains("n")) base.n = j["n"].get<int>();
  if (j.contains("C")) base.C = j["C"].get<double>();
  opt("p", base.p);
  if (j.contains("adversary")) {
    const json& a = j["adversary"];
    if (a.is_string()) {
      base.adversary.kind = adversary_from_string(a.get<std::string>());
    } else {
      if (a.contains("kind")) base.adversary.kind = adversary_from_string(a["kind"].get<std::string>());
      if (a.contains("keep")) base.adversary.keep_fraction = a["keep"].get<double>();
    }
  }
  if (j.contains("keep")) base.adversary.keep_fraction = j["keep"].get<double>();
  if (j.contains("eps")) base.eps = j["eps"].get<double>();
  opt("delta", base.delta);
  opt("beta", base.beta);
  opt("eps_prime", base.eps_prime);
  if (j.contains("trials")) base.trials = j["trials"].get<int>();
  if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("threads")) base.threads = j["threads"].get<int>();
  if (j.contains("guard_n")) base.guard_n = j["guard_n"].get<int>();
  if (j.contains("out_csv")) base.out_csv = j["out_csv"].get<std::string>();
  if (j.contains("out_json")) base.out_json = j["out_json"].get<std::string>();
  return base;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) { return from_json(j, ExperimentConfig{}); }

std::uint64_t trial_seed(std::uint64_t base, int index) {
  return base ^ splitmix64(static_cast<std::uint64_t>(index));
}

double ExperimentReport::mean_found_ratio() const {
  std::vector<double> xs;
  for (const auto& t : trials) xs.push_back(t.found_ratio);
  return mean_of(xs);
}

double ExperimentReport::std_found_ratio() const {
  std::vector<double> xs;
  for (const auto& t : trials) xs.push_back(t.found_ratio);
  return std_of(xs);
}

json ExperimentReport::to_json() const {
  json rows = json::array();
  for (const auto& t : trials) {
    json r;
    r["index"] = t.index;
    r["seed"] = t.seed;
    r["edges_before"] = t.edges_before;
    r["edges_after"] = t.edges_after;
    r["planted_edges"] = t.planted_edges;
    r["edge_fraction"] = t.edge_fraction();
    r["bad_directions"] = t.bad_directions;
    r["found"] = t.found;
    r["found_ratio"] = t.found_ratio;
    r["missing"] = missing_json(t.missing);
    r["max_extra_edges"] = t.max_extra_edges;
    r["all_verified"] = t.all_verified;
    r["error"] = t.error ? json(*t.error) : json(nullptr);
    r["adversary"] = t.adversary;
    rows.push_back(std::move(r));
  }
  return {{"schema_version", kCsvSchemaVersion},
          {"config", reproducible_config(config)},
          {"trials", std::move(rows)},
          {"aggregate",
           {{"mean_found_ratio", mean_found_ratio()}, {"std_found_ratio", std_found_ratio()}}}};
}

void ExperimentReport::write_csv(std::ostream& out) const {
  write_schema_line(out);
  out << "trial,seed,edges_before,edges_after,edge_fraction,bad_directions,found,found_ratio,"
         "missing_count,max_extra_edges,all_verified,missing,error\n";
  for (const auto& t : trials) {
    out << t.index << ',' << t.seed << ',' << t.edges_before << ',' << t.edges_after << ','
        << fixed6(t.edge_fraction()) << ',' << t.bad_directions << ',' << t.found << ','
        << fixed6(t.found_ratio) << ',' << t.missing.size() << ',' << t.max_extra_edges << ','
        << (t.all_verified ? 1 : 0) << ',' << csv_escape(missing_cell(t.missing)) << ','
        << csv_escape(t.error.value_or("")) << '\n';
  }
}

ExperimentReport run_spectrum(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;
  report.trials.resize(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.threads,
               [&](int k) { report.trials[static_cast<std::size_t>(k)] = run_trial(config, k); });
  return report;
}

json SweepReport::to_json() const {
  json rows = json::array();
  for (const auto& r : this->rows) {
    rows.push_back({{"keep_fraction", r.keep_fraction},
                    {"mean_found_ratio", r.mean_found_ratio},
                    {"std_found_ratio", r.std_found_ratio},
                    {"per_trial", r.per_trial}});
  }
  return {{"schema_version", kCsvSchemaVersion},
          {"config", reproducible_config(config)},
          {"rows", std::move(rows)}};
}

void SweepReport::write_csv(std::ostream& out) const {
  write_schema_line(out);
  out << "keep_fraction,mean_found_ratio,std_found_ratio,trials\n";
  for (const auto& r : rows) {
    out << fixed6(r.keep_fraction) << ',' << fixed6(r.mean_found_ratio) << ','
        << fixed6(r.std_found_ratio) << ',' << r.per_trial.size() << '\n';
  }
}

SweepReport run_threshold_sweep(const ExperimentConfig& config,
                                const std::vector<double>& keep_fractions) {
  if (keep_fractions.empty()) throw std::invalid_argument("keep fractions must be nonempty");
  for (std::size_t k = 0; k < keep_fractions.size(); ++k) {
    check_fraction("keep fraction", keep_fractions[k], true);
    if (k > 0 && !(keep_fractions[k] > keep_fractions[k - 1])) {
      throw std::invalid_argument("keep fractions must be strictly ascending");
    }
  }
  SweepReport out;
  out.config = config;
  out.config.adversary = AdversarySpec{AdversaryKind::UniformThin, keep_fractions.back()};
  out.config.validate();
  for (double keep : keep_fractions) {
    ExperimentConfig c = config;
    c.adversary = AdversarySpec{AdversaryKind::UniformThin, keep};
    const ExperimentReport rep = run_spectrum(c);
    SweepRow row;
    row.keep_fraction = keep;
    row.mean_found_ratio = rep.mean_found_ratio();
    row.std_found_ratio = rep.std_found_ratio();
    for (const auto& t : rep.trials) row.per_trial.push_back(t.found_ratio);
    out.rows.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// lemma checks

std::string to_string(LemmaCheck which) {
  switch (which) {
    case LemmaCheck::Saturation: return "saturation";
    case LemmaCheck::Goodness: return "goodness";
    case LemmaCheck::CloseCross: return "closecross";
    case LemmaCheck::Boundedness: return "boundedness";
    case LemmaCheck::Peel: return "peel";
    case LemmaCheck::Posa: return "posa";
  }
  return "?";
}

LemmaCheck lemma_check_from_string(const std::string& name) {
  for (LemmaCheck c : {LemmaCheck::Saturation, LemmaCheck::Goodness, LemmaCheck::CloseCross,
                       LemmaCheck::Boundedness, LemmaCheck::Peel, LemmaCheck::Posa}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

bool LemmaReport::all_pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const LemmaInstance& x) { return x.pass; });
}

json LemmaReport::to_json() const {
  json rows = json::array();
  int passed = 0;
  for (const auto& x : instances) {
    rows.push_back({{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    passed += x.pass ? 1 : 0;
  }
  return {{"schema_version", kCsvSchemaVersion},
          {"check", to_string(which)},
          {"passed", passed},
          {"instances_total", instances.size()},
          {"all_pass", all_pass()},
          {"instances", std::move(rows)}};
}

void LemmaReport::write_csv(std::ostream& out) const {
  write_schema_line(out);
  out << "check,instance,pass,detail\n";
  for (const auto& x : instances) {
    out << to_string(which) << ',' << csv_escape(x.name) << ',' << (x.pass ? 1 : 0) << ','
        << csv_escape(x.detail.dump()) << '\n';
  }
}

namespace {

CycleLabeling random_labeling(int n, Rng& rng) {
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k + 1)));
    std::swap(label[static_cast<std::size_t>(k)], label[static_cast<std::size_t>(j)]);
  }
  return CycleLabeling(std::move(label));
}

void require_guard(const char* guard, int n, int limit) {
  if (n > limit) {
    throw std::invalid_argument(std::string(guard) + " exceeded: n = " + std::to_string(n) +
                                ", limit " + std::to_string(limit));
  }
}

std::vector<LemmaInstance> check_saturation(const ExperimentConfig& c) {
  require_guard("guard_n", c.n, c.guard_n);
  const int n = c.n;
  const double eps_prime = c.eps_prime.value_or(0.3);
  const double p = c.p.value_or(std::min(1.0, 0.5 + eps_prime + 0.05));
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  const double need_edges = (0.5 + eps_prime) * pairs;
  const double bound = std::pow(eps_prime / 16.0, 8) * std::pow(static_cast<double>(n), 4);
  const int l_max = static_cast<int>(std::floor(eps_prime * n / 16.0 + 1e-9));
  std::vector<LemmaInstance> out;
  for (int trial = 0; trial < c.trials; ++trial) {
    const RngSeed rs = trial_stream(c, trial);
    std::optional<Graph> g;
    int attempt = 0;
    for (; attempt < 1000; ++attempt) {
      Graph cand = sample_gnp(GnpParams::explicit_p(n, p), rs.derive(30 + static_cast<std::uint64_t>(attempt)));
      if (static_cast<double>(cand.edge_count()) >= need_edges) {
        g = std::move(cand);
        break;
      }
    }
    if (!g) {
      out.push_back({"graph " + std::to_string(trial), false,
                     {{"error", "no sample reached the edge fraction"}, {"p", p}}});
      continue;
    }
    Rng rng(rs.derive(31));
    for (int lab = 0; lab < kSaturationLabelings; ++lab) {
      const CycleLabeling labeling = random_labeling(n, rng);
      for (int l = 0; l <= l_max; ++l) {
        const std::int64_t count = count_shortcuts(*g, labeling, l, c.guard_n);
        LemmaInstance x;
        x.name = "graph " + std::to_string(trial) + " labeling " + std::to_string(lab) + " l " +
                 std::to_string(l);
        x.pass = static_cast<double>(count) >= bound;
        x.detail = {{"n", n}, {"l", l}, {"edges", g->edge_count()}, {"shortcuts", count},
                    {"bound", bound}, {"resamples", attempt}};
        if (!x.pass) x.detail["labeling"] = std::vector<Vertex>(labeling.labels().begin(), labeling.labels().end());
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

std::vector<LemmaInstance> check_goodness(const ExperimentConfig& c) {
  const int n = c.n;
  const GnpParams model = c.gnp();
  const double eps = c.eps;
  const double beta = c.beta.value_or(std::min(c.delta.value_or(eps / 64.0) / 4.0, eps / 10.0));
  const double eps_prime = c.eps_prime.value_or(eps / 10.0);
  const double bound = std::pow(static_cast<double>(n), 0.75);
  std::vector<LemmaInstance> out(static_cast<std::size_t>(c.trials));
  parallel_for(c.trials, c.threads, [&](int trial) {
    const Graph g = sample_gnp(model, trial_stream(c, trial));
    const GoodDirections gd =
        good_directions(g, CycleLabeling::identity(n), beta, eps_prime, model.p);
    LemmaInstance x;
    x.name = "seed " + std::to_string(trial);
    x.pass = gd.bad_count <= bound;
    x.detail = {{"n", n}, {"p", model.p}, {"beta", beta}, {"eps_prime", eps_prime},
                {"bad_directions", gd.bad_count}, {"bound", bound}, {"seed", trial_seed(c.seed, trial)}};
    out[static_cast<std::size_t>(trial)] = std::move(x);
  });
  return out;
}

std::vector<LemmaInstance> check_close_cross(const ExperimentConfig& c) {
  const int n = c.n;
  const double beta = c.beta.value_or(0.1);
  if (!(beta > 0.0 && beta < 1.0 / 6.0)) throw std::invalid_argument("beta must lie in (0, 1/6)");
  const int window = scaled_length(beta, n);
  const int expected = 2 * window;
  const int l_lo = expected + 1;
  const int l_hi = n - expected - 1;
  if (l_lo > l_hi) throw std::invalid_argument("n too small for beta: no l in range");

  std::vector<int> ls(static_cast<std::size_t>(l_hi - l_lo + 1));
  std::iota(ls.begin(), ls.end(), l_lo);
  if (static_cast<int>(ls.size()) > c.trials) {
    Rng rng(RngSeed{c.seed, 0}.derive(50));
    for (int k = 0; k < c.trials; ++k) {
      const auto j = k + static_cast<int>(rng.below(ls.size() - static_cast<std::size_t>(k)));
      std::swap(ls[static_cast<std::size_t>(k)], ls[static_cast<std::size_t>(j)]);
    }
    ls.resize(static_cast<std::size_t>(c.trials));
    std::sort(ls.begin(), ls.end());
  }

  std::vector<DirectionSlice> slices;
  slices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) slices.push_back(direction_slice(n, i));

  std::vector<LemmaInstance> out(ls.size());
  parallel_for(static_cast<int>(ls.size()), c.threads, [&](int k) {
    const int l = ls[static_cast<std::size_t>(k)];
    LemmaInstance x;
    x.name = "l " + std::to_string(l);
    x.pass = true;
    std::int64_t middle_edges = 0;
    std::int64_t all_edges = 0;
    json first_bad;
    for (int i = 0; i < n && x.pass; ++i) {
      const int dir = (i + l) % n;
      const DirectionSlice& s = slices[static_cast<std::size_t>(i)];
      const auto mid = s.middle(window);
      const Edge* mid_begin = mid.empty() ? nullptr : mid.data();
      for (int r = 0; r < s.size(); ++r) {
        const Edge& e = s.ordered_edges[static_cast<std::size_t>(r)];
        const std::vector<int> ranks = close_crossing_ranks(e, dir, n, beta);
        ++all_edges;
        const int count = static_cast<int>(ranks.size());
        const bool in_middle = mid_begin != nullptr && &e >= mid_begin && &e < mid_begin + mid.size();
        bool ok = count <= expected && covering_windows(ranks, window).has_value();
        if (in_middle) {
          ++middle_edges;
          ok = ok && count == expected;
        }
        if (!ok) {
          x.pass = false;
          first_bad = {{"i", i}, {"edge", {e.u, e.v}}, {"middle", in_middle},
                       {"count", count}, {"expected", expected}};
          break;
        }
      }
    }
    x.detail = {{"n", n}, {"beta", beta}, {"expected", expected}, {"middle_edges", middle_edges},
                {"edges", all_edges}};
    if (!x.pass) x.detail["counterexample"] = first_bad;
    out[static_cast<std::size_t>(k)] = std::move(x);
  });
  return out;
}

std::vector<double> boundedness_qs(int n) {
  const double p = 1.0 / std::sqrt(static_cast<double>(n));
  return {p, std::min(1.0, 2.0 * p), 1.0};
}

std::vector<LemmaInstance> check_boundedness(const ExperimentConfig& c) {
  require_guard("guard_n", c.n, c.guard_n);
  const int n = c.n;
  const double k = calibrate_boundedness_k(kBoundednessCalibrationN, c.trials,
                                           RngSeed{c.seed, 0}.derive(60), c.guard_n);
  const ShortcutHypergraph h = build_shortcut_hypergraph(n, 0, c.guard_n);
  const double p = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<LemmaInstance> out;
  const bool sizes_ok = h.vertex_count() == static_cast<std::int64_t>(n) * (n - 1) / 2 &&
                        static_cast<double>(h.edge_count()) <= std::pow(static_cast<double>(n), 4);
  out.push_back({"sizes", sizes_ok,
                 {{"vertices", h.vertex_count()}, {"edges", h.edge_count()},
                  {"c", h.density_constant()}}});
  int q_index = 0;
  for (double q : boundedness_qs(n)) {
    const auto est = estimate_boundedness_all(h, p, q, c.trials, RngSeed{c.seed, 0}.derive(61 + static_cast<std::uint64_t>(q_index)));
    for (const auto& e : est) {
      LemmaInstance x;
      x.name = "q " + fixed6(q) + " i " + std::to_string(e.i);
      x.pass = e.mean <= k * e.unit + 2.0 * e.std_error;
      x.detail = e.to_json();
      x.detail["K"] = k;
      x.detail["n"] = n;
      out.push_back(std::move(x));
    }
    ++q_index;
  }
  return out;
}

std::vector<LemmaInstance> check_peel(const ExperimentConfig& c) {
  std::vector<LemmaInstance> out(static_cast<std::size_t>(c.trials));
  parallel_for(c.trials, c.threads, [&](int trial) {
    Rng rng(trial_stream(c, trial).derive(70));
    const double p = 0.02 + 0.58 * rng.uniform();
    const Graph g = sample_gnp(GnpParams::explicit_p(c.n, p), trial_stream(c, trial).derive(71));
    const std::int64_t e = g.edge_count();
    const std::int64_t d_max = std::max<std::int64_t>(1, e / c.n);
    const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d_max)));
    const bool hypothesis = e >= static_cast<std::int64_t>(d) * c.n;
    const auto core = peel_min_degree(g, d);
    bool core_ok = true;
    if (core) {
      for (Vertex v : core->vertices) core_ok = core_ok && core->graph.degree(v) >= d;
    }
    LemmaInstance x;
    x.name = "instance " + std::to_string(trial);
    x.pass = core_ok && (!hypothesis || core.has_value());
    x.detail = {{"n", c.n}, {"edges", e}, {"d", d}, {"hypothesis", hypothesis},
                {"core_size", core ? core->vertices.size() : 0}};
    out[static_cast<std::size_t>(trial)] = std::move(x);
  });
  return out;
}

// Exhaustive |N(X) \ X| >= 2|X| - 1 over all nonempty X with |X| <= t.
bool is_posa_expander(const Graph& g, int t) {
  const int n = g.n();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > t) continue;
    std::vector<Vertex> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    if (outer_boundary(g, set) < 2 * size - 1) return false;
  }
  return true;
}

int longest_path_from(const Graph& g, Vertex v) {
  int best = 0;
  std::vector<bool> on(static_cast<std::size_t>(g.n()), false);
  std::function<void(Vertex, int)> go = [&](Vertex x, int len) {
    best = std::max(best, len);
    if (best == g.n() - 1) return;
    for (Vertex y : g.neighbors(x)) {
      if (on[static_cast<std::size_t>(y)]) continue;
      on[static_cast<std::size_t>(y)] = true;
      go(y, len + 1);
      on[static_cast<std::size_t>(y)] = false;
    }
  };
  on[static_cast<std::size_t>(v)] = true;
  go(v, 0);
  return best;
}

bool is_simple_path(const Graph& g, const std::vector<Vertex>& path) {
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] < 0 || path[k] >= g.n() || seen[static_cast<std::size_t>(path[k])]) return false;
    seen[static_cast<std::size_t>(path[k])] = true;
    if (k > 0 && !g.has_edge(path[k - 1], path[k])) return false;
  }
  return true;
}

LemmaInstance expect_failure(const std::string& name, const Graph& g, Vertex v, int t) {
  const PosaResult r = posa_path(g, v, t);
  LemmaInstance x;
  x.name = name;
  if (const auto* f = std::get_if<ExpansionFailure>(&r)) {
    x.pass = f->violates;
    x.detail = {{"expected", "expansion-failure"}, {"set", f->set}, {"boundary", f->boundary},
                {"violates", f->violates}, {"found_by", f->found_by}};
  } else {
    x.pass = false;
    x.detail = {{"expected", "expansion-failure"}, {"got_path", std::get<PosaPath>(r).path}};
  }
  return x;
}

std::vector<LemmaInstance> check_posa(const ExperimentConfig& c) {
  require_guard("posa oracle guard", c.n, kPosaOracleGuardN);
  std::vector<LemmaInstance> out;
  Graph star(6);
  for (Vertex leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
  out.push_back(expect_failure("star K_1,5", star, 0, 2));
  out.push_back(expect_failure("cycle C_9", Graph::cycle(9), 0, 2));

  const int n = c.n;
  const int t = (n + 1) / 3;
  if (t < 1) return out;
  for (int trial = 0; trial < c.trials; ++trial) {
    const RngSeed rs = trial_stream(c, trial);
    Rng rng(rs.derive(80));
    std::optional<Graph> g;
    int attempt = 0;
    for (; attempt < 200 && !g; ++attempt) {
      const double p = 0.5 + 0.45 * rng.uniform();
      Graph cand = sample_gnp(GnpParams::explicit_p(n, p), rs.derive(81 + static_cast<std::uint64_t>(attempt)));
      if (is_posa_expander(cand, t)) g = std::move(cand);
    }
    LemmaInstance x;
    x.name = "expander " + std::to_string(trial);
    if (!g) {
      x.pass = false;
      x.detail = {{"error", "no expander sampled"}, {"n", n}, {"t", t}};
      out.push_back(std::move(x));
      continue;
    }
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const PosaResult r = posa_path(*g, v, t);
    const int brute = longest_path_from(*g, v);
    x.detail = {{"n", n}, {"t", t}, {"v", v}, {"target", 3 * t - 2}, {"brute_longest", brute},
                {"edges", g->edge_count()}};
    if (const auto* path = std::get_if<PosaPath>(&r)) {
      x.pass = path->path.front() == v && is_simple_path(*g, path->path) &&
               path->length() >= 3 * t - 2 && brute >= 3 * t - 2 && path->length() <= brute;
      x.detail["path"] = path->path;
    } else {
      const auto& f = std::get<ExpansionFailure>(r);
      x.pass = false;
      x.detail["failure"] = {{"set", f.set}, {"boundary", f.boundary}, {"found_by", f.found_by}};
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

double calibrate_boundedness_k(int n, int trials, RngSeed seed, int guard_n) {
  const ShortcutHypergraph h = build_shortcut_hypergraph(n, 0, guard_n);
  const double p = 1.0 / std::sqrt(static_cast<double>(n));
  double k = 0.0;
  std::uint64_t stream = 0;
  for (double q : boundedness_qs(n)) {
    for (const auto& e : estimate_boundedness_all(h, p, q, trials, seed.derive(stream++))) {
      k = std::max(k, e.k_estimate);
    }
  }
  return k;
}

LemmaReport run_lemma_checks(LemmaCheck which, const ExperimentConfig& config) {
  config.validate();
  LemmaReport report;
  report.which = which;
  switch (which) {
    case LemmaCheck::Saturation: report.instances = check_saturation(config); break;
    case LemmaCheck::Goodness: report.instances = check_goodness(config); break;
    case LemmaCheck::CloseCross: report.instances = check_close_cross(config); break;
    case LemmaCheck::Boundedness: report.instances = check_boundedness(config); break;
    case LemmaCheck::Peel: report.instances = check_peel(config); break;
    case LemmaCheck::Posa: report.instances = check_posa(config); break;
  }
  return report;
}

void write_outputs(const ExperimentConfig& config, const json& report, const std::string& csv) {
  if (!config.out_json.empty()) {
    std::ofstream out(config.out_json, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + config.out_json + " for writing");
    out << report.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + config.out_json);
  }
  if (!config.out_csv.empty()) {
    std::ofstream out(config.out_csv, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + config.out_csv + " for writing");
    out << csv;
    if (!out) throw std::runtime_error("write failed: " + config.out_csv);
  }
}

}  // namespace pancyc
