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


#ifndef PANCYC_EXPERIMENTS_HPP_
#define PANCYC_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pancyc/cycle_finder.hpp"
#include "pancyc/hypergraph.hpp"
#include "pancyc/random_graphs.hpp"

namespace pancyc {

inline constexpr int kCsvSchemaVersion = 1;

struct ExperimentConfig {
  int n = 200;
  double C = 3.0;
  std::optional<double> p;  // overrides C when set
  AdversarySpec adversary{AdversaryKind::UniformThin, 1.0};
  double eps = 0.1;
  std::optional<double> delta;
  std::optional<double> beta;
  std::optional<double> eps_prime;
  int trials = 1;
  std::uint64_t seed = 1;
  int threads = 1;
  int guard_n = 60;
  std::string out_csv;
  std::string out_json;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
  GnpParams gnp() const;
  // The spectrum knobs, with p pinned to the model density.
  SpectrumRequest request() const;

  nlohmann::json to_json() const;
  // Missing keys keep the values already in `base`.
  static ExperimentConfig from_json(const nlohmann::json& j, ExperimentConfig base);
  static ExperimentConfig from_json(const nlohmann::json& j);
};

// base ^ splitmix64(i).
std::uint64_t trial_seed(std::uint64_t base, int index);

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::int64_t edges_before = 0;  // planted graph
  std::int64_t edges_after = 0;   // after the adversary
  std::int64_t planted_edges = 0;
  int bad_directions = 0;
  int found = 0;
  std::vector<MissingLength> missing;
  int max_extra_edges = 0;
  bool all_verified = true;
  double found_ratio = 0;
  std::optional<std::string> error;
  nlohmann::json adversary;

  double edge_fraction() const {
    return edges_before == 0 ? 0.0 : static_cast<double>(edges_after) / static_cast<double>(edges_before);
  }
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;

  double mean_found_ratio() const;
  double std_found_ratio() const;
  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
};

// Plant, apply the adversary, search every length, verify, aggregate.
ExperimentReport run_spectrum(const ExperimentConfig& config);

struct SweepRow {
  double keep_fraction = 0;
  double mean_found_ratio = 0;
  double std_found_ratio = 0;
  std::vector<double> per_trial;  // by trial index
};

struct SweepReport {
  ExperimentConfig config;
  std::vector<SweepRow> rows;

  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
};

// UniformThin at each keep fraction (ascending in (0, 1]) with the same trial
// seeds, so the kept edge sets are nested per trial.
SweepReport run_threshold_sweep(const ExperimentConfig& config,
                                const std::vector<double>& keep_fractions);

inline constexpr int kBoundednessCalibrationN = 20;
inline constexpr int kPosaOracleGuardN = 12;
inline constexpr int kSaturationLabelings = 5;

// Largest mean/unit over q in {n^-1/2, 2n^-1/2, 1} and i in {1, 2, 3} on
// H_n^0 with p = n^-1/2.
double calibrate_boundedness_k(int n, int trials, RngSeed seed, int guard_n = kDefaultGuardN);

enum class LemmaCheck { Saturation, Goodness, CloseCross, Boundedness, Peel, Posa };

std::string to_string(LemmaCheck which);
LemmaCheck lemma_check_from_string(const std::string& name);

struct LemmaInstance {
  std::string name;
  bool pass = false;
  nlohmann::json detail;
};

struct LemmaReport {
  LemmaCheck which = LemmaCheck::Saturation;
  std::vector<LemmaInstance> instances;

  bool all_pass() const;
  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
};

// Runs one family of checks at the configured scale. Size guards throw
// std::invalid_argument naming the guard.
LemmaReport run_lemma_checks(LemmaCheck which, const ExperimentConfig& config);

// Writes config.out_csv / config.out_json when set. Throws std::runtime_error
// with the path on I/O failure.
void write_outputs(const ExperimentConfig& config, const nlohmann::json& report,
                   const std::string& csv);

}  // namespace pancyc

#endif  // PANCYC_EXPERIMENTS_HPP_
