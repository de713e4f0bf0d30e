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


// Command-line front end: gen, adversary, spectrum, sweep, check, hypergraph.
// Exit codes: 0 all checks pass, 1 check failures, 2 usage, guard or I/O errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pancyc/certificate.hpp"
#include "pancyc/cycle_finder.hpp"
#include "pancyc/experiments.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/hypergraph.hpp"
#include "pancyc/random_graphs.hpp"

namespace {

using nlohmann::json;
using namespace pancyc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Flag values land here; only the ones actually given override the config file.
struct Flags {
  int n = 0;
  double p = 0;
  double C = 0;
  double eps = 0;
  double delta = 0;
  double beta = 0;
  double eps_prime = 0;
  std::string adversary;
  double keep = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  int guard_n = 0;
  std::string out;
  std::string json_path;
  std::string config;
  std::string graph;
  std::string labeling;

  CLI::Option* o_n = nullptr;
  CLI::Option* o_p = nullptr;
  CLI::Option* o_C = nullptr;
  CLI::Option* o_eps = nullptr;
  CLI::Option* o_delta = nullptr;
  CLI::Option* o_beta = nullptr;
  CLI::Option* o_eps_prime = nullptr;
  CLI::Option* o_adversary = nullptr;
  CLI::Option* o_keep = nullptr;
  CLI::Option* o_trials = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_threads = nullptr;
  CLI::Option* o_guard_n = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_json = nullptr;
};

void add_common(CLI::App* cmd, Flags& f) {
  f.o_n = cmd->add_option("--n", f.n, "number of vertices");
  f.o_p = cmd->add_option("--p", f.p, "edge probability");
  f.o_C = cmd->add_option("--C", f.C, "p = C / sqrt(n)");
  f.o_p->excludes(f.o_C);
  f.o_eps = cmd->add_option("--eps", f.eps, "eps");
  f.o_delta = cmd->add_option("--delta", f.delta, "short/long range fraction");
  f.o_beta = cmd->add_option("--beta", f.beta, "close-crossing fraction");
  f.o_eps_prime = cmd->add_option("--eps-prime", f.eps_prime, "goodness tolerance");
  f.o_adversary = cmd->add_option("--adversary", f.adversary,
                                  "triangle-breaker | bipartite-even | near-bipartite-odd | uniform-thin");
  f.o_keep = cmd->add_option("--keep", f.keep, "keep fraction for uniform-thin");
  f.o_trials = cmd->add_option("--trials", f.trials, "trials or instances");
  f.o_seed = cmd->add_option("--seed", f.seed, "base seed");
  f.o_threads = cmd->add_option("--threads", f.threads, "worker threads");
  f.o_guard_n = cmd->add_option("--guard-n", f.guard_n, "size guard for exhaustive checks");
  f.o_out = cmd->add_option("--out", f.out, "CSV output path");
  f.o_json = cmd->add_option("--json", f.json_path, "JSON report path");
  cmd->add_option("--config", f.config, "JSON config file; flags override it");
}

ExperimentConfig build_config(const Flags& f, ExperimentConfig base = ExperimentConfig{}) {
  ExperimentConfig c = std::move(base);
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw std::runtime_error("cannot open config " + f.config);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument("config " + f.config + ": " + e.what());
    }
    c = ExperimentConfig::from_json(j, c);
  }
  if (*f.o_n) c.n = f.n;
  if (*f.o_p) c.p = f.p;
  if (*f.o_C) {
    c.C = f.C;
    c.p.reset();
  }
  if (*f.o_eps) c.eps = f.eps;
  if (*f.o_delta) c.delta = f.delta;
  if (*f.o_beta) c.beta = f.beta;
  if (*f.o_eps_prime) c.eps_prime = f.eps_prime;
  if (*f.o_adversary) c.adversary.kind = adversary_from_string(f.adversary);
  if (*f.o_keep) c.adversary.keep_fraction = f.keep;
  if (*f.o_trials) c.trials = f.trials;
  if (*f.o_seed) c.seed = f.seed;
  if (*f.o_threads) c.threads = f.threads;
  if (*f.o_guard_n) c.guard_n = f.guard_n;
  if (*f.o_out) c.out_csv = f.out;
  if (*f.o_json) c.out_json = f.json_path;
  c.validate();
  return c;
}

void emit(const ExperimentConfig& c, const json& report, const std::string& csv) {
  write_outputs(c, report, csv);
  if (c.out_json.empty()) std::cout << report.dump(2) << '\n';
}

int cmd_gen(const Flags& f, const std::string& graph_out, const std::string& labeling_out) {
  const ExperimentConfig c = build_config(f);
  const PlantedGraph planted = plant_hamilton(c.gnp(), RngSeed{c.seed, 0});
  if (!graph_out.empty()) save_edge_list(graph_out, planted.graph);
  else write_edge_list(std::cout, planted.graph);
  if (!labeling_out.empty()) save_labeling(labeling_out, planted.labeling);
  json summary = {{"n", c.n},
                  {"p", c.gnp().p},
                  {"seed", c.seed},
                  {"edges", planted.graph.edge_count()},
                  {"planted_edges", planted.planted_edges}};
  write_outputs(c, summary, "");
  if (c.out_json.empty()) std::cerr << summary.dump() << '\n';
  return kExitOk;
}

struct LoadedInstance {
  Graph graph;
  CycleLabeling labeling;
};

LoadedInstance load_or_plant(const Flags& f, const ExperimentConfig& c) {
  if (!f.graph.empty()) {
    Graph g = load_edge_list(f.graph);
    CycleLabeling lab = f.labeling.empty() ? CycleLabeling::identity(g.n()) : load_labeling(f.labeling);
    if (lab.size() != g.n()) throw std::invalid_argument("labeling size does not match the graph");
    return {std::move(g), std::move(lab)};
  }
  PlantedGraph planted = plant_hamilton(c.gnp(), RngSeed{c.seed, 0});
  return {std::move(planted.graph), std::move(planted.labeling)};
}

int cmd_adversary(const Flags& f, const std::string& graph_out) {
  const ExperimentConfig c = build_config(f);
  const LoadedInstance inst = load_or_plant(f, c);
  AdversarySpec adversary = c.adversary;
  adversary.validate(inst.graph.n());
  const AdversaryOutcome out = apply_adversary(inst.graph, inst.labeling, adversary, RngSeed{c.seed, 0}.derive(20));
  if (!graph_out.empty()) save_edge_list(graph_out, out.graph);
  else write_edge_list(std::cout, out.graph);
  write_outputs(c, out.record, "");
  if (c.out_json.empty()) std::cerr << out.record.dump() << '\n';
  return kExitOk;
}

int cmd_spectrum(const Flags& f) {
  const ExperimentConfig c = build_config(f);
  if (!f.graph.empty()) {
    const LoadedInstance inst = load_or_plant(f, c);
    SpectrumRequest req = c.request();
    req.p.reset();  // use the density of the given graph
    const CycleSpectrum spectrum = find_all_cycles(inst.graph, inst.labeling, req);
    bool ok = true;
    for (const auto& [t, cert] : spectrum.found) ok = ok && verify_certificate(inst.graph, inst.labeling, cert);
    emit(c, spectrum.to_json(), "");
    return ok ? kExitOk : kExitCheckFailed;
  }
  const ExperimentReport rep = run_spectrum(c);
  std::ostringstream csv;
  rep.write_csv(csv);
  emit(c, rep.to_json(), csv.str());
  for (const auto& t : rep.trials) {
    if (!t.all_verified || t.error) return kExitCheckFailed;
  }
  return kExitOk;
}

std::vector<double> parse_fractions(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad keep fraction '" + item + "'");
    }
  }
  return out;
}

int cmd_sweep(const Flags& f, const std::string& fractions) {
  const ExperimentConfig c = build_config(f);
  const SweepReport rep = run_threshold_sweep(c, parse_fractions(fractions));
  std::ostringstream csv;
  rep.write_csv(csv);
  emit(c, rep.to_json(), csv.str());
  return kExitOk;
}

int cmd_check(const Flags& f, const std::string& which) {
  const ExperimentConfig c = build_config(f);
  const LemmaReport rep = run_lemma_checks(lemma_check_from_string(which), c);
  std::ostringstream csv;
  rep.write_csv(csv);
  emit(c, rep.to_json(), csv.str());
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_hypergraph(const Flags& f, int l) {
  const ExperimentConfig c = build_config(f);
  const ShortcutHypergraph h = build_shortcut_hypergraph(c.n, l, c.guard_n);
  if (!c.out_csv.empty()) append_regression_row(c.out_csv, h);
  json summary = {{"n", h.n},
                  {"l", h.l},
                  {"vertices", h.vertex_count()},
                  {"edges", h.edge_count()},
                  {"c", h.density_constant()}};
  ExperimentConfig json_only = c;
  json_only.out_csv.clear();
  emit(json_only, summary, "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pancyc: constructive pancyclicity certificates and experiments"};
  app.require_subcommand(1);

  Flags gen_f, adv_f, spec_f, sweep_f, check_f, hyper_f;
  std::string gen_graph, gen_labeling, adv_graph_out, fractions = "1.0", which;
  int hyper_l = 0;

  auto* gen = app.add_subcommand("gen", "sample G(n,p) with a planted Hamilton cycle");
  add_common(gen, gen_f);
  gen->add_option("--graph", gen_graph, "edge-list output (stdout when omitted)");
  gen->add_option("--labeling", gen_labeling, "labeling output");

  auto* adv = app.add_subcommand("adversary", "apply an edge-deleting adversary");
  add_common(adv, adv_f);
  adv->add_option("--graph", adv_f.graph, "input edge list (planted sample when omitted)");
  adv->add_option("--labeling", adv_f.labeling, "input labeling (identity when omitted)");
  adv->add_option("--save-graph", adv_graph_out, "edge-list output (stdout when omitted)");

  auto* spectrum = app.add_subcommand("spectrum", "certify every cycle length");
  add_common(spectrum, spec_f);
  spectrum->add_option("--graph", spec_f.graph, "search this edge list instead of sampling");
  spectrum->add_option("--labeling", spec_f.labeling, "Hamilton labeling of --graph");

  auto* sweep = app.add_subcommand("sweep", "found-ratio versus keep fraction");
  add_common(sweep, sweep_f);
  sweep->add_option("--fractions", fractions, "ascending comma-separated keep fractions");

  auto* check = app.add_subcommand("check", "run a family of lemma checks");
  add_common(check, check_f);
  check->add_option("which", which, "saturation | goodness | closecross | boundedness | peel | posa")
      ->required();

  auto* hyper = app.add_subcommand("hypergraph", "build H_n^l and report its size");
  add_common(hyper, hyper_f);
  hyper->add_option("--l", hyper_l, "shortcut offset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_f, gen_graph, gen_labeling);
    if (*adv) return cmd_adversary(adv_f, adv_graph_out);
    if (*spectrum) return cmd_spectrum(spec_f);
    if (*sweep) return cmd_sweep(sweep_f, fractions);
    if (*check) return cmd_check(check_f, which);
    if (*hyper) return cmd_hypergraph(hyper_f, hyper_l);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
