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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pancyc/certificate.hpp"
#include "pancyc/experiments.hpp"

namespace pancyc {
namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n = 120;
  c.C = 3;
  c.trials = 3;
  c.seed = 17;
  return c;
}

std::string csv_of(const ExperimentReport& r) {
  std::ostringstream out;
  r.write_csv(out);
  return out.str();
}

TEST(ExperimentConfig, RejectsBadFields) {
  auto c = small_config();
  EXPECT_NO_THROW(c.validate());
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.n = 2;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.p = 1.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.threads = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.adversary = {AdversaryKind::UniformThin, 0.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(ExperimentConfig, JsonRoundTripAndLayering) {
  auto c = small_config();
  c.p = 0.25;
  c.beta = 0.12;
  c.adversary = {AdversaryKind::UniformThin, 0.6};
  const auto back = ExperimentConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_DOUBLE_EQ(back.gnp().p, 0.25);

  auto base = small_config();
  base.trials = 9;
  const auto layered = ExperimentConfig::from_json(nlohmann::json{{"n", 80}}, base);
  EXPECT_EQ(layered.n, 80);
  EXPECT_EQ(layered.trials, 9);
}

TEST(TrialSeed, DistinctPerIndex) {
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
  EXPECT_EQ(trial_seed(5, 3), trial_seed(5, 3));
}

TEST(RunSpectrum, EveryLengthVerifiedOrExplained) {
  auto c = small_config();
  c.n = 200;
  c.trials = 5;
  const auto r = run_spectrum(c);
  ASSERT_EQ(r.trials.size(), 5u);
  std::set<std::uint64_t> seeds;
  for (const auto& t : r.trials) {
    seeds.insert(t.seed);
    EXPECT_FALSE(t.error.has_value()) << *t.error;
    EXPECT_TRUE(t.all_verified);
    EXPECT_EQ(t.found + static_cast<int>(t.missing.size()), c.n - 2);
    EXPECT_NEAR(t.found_ratio, t.found / double(c.n - 2), 1e-12);
    EXPECT_GE(t.edges_before, t.edges_after);
    for (const auto& m : t.missing) {
      EXPECT_GE(m.t, 3);
      EXPECT_LE(m.t, c.n);
    }
  }
  EXPECT_EQ(seeds.size(), 5u);
  EXPECT_GE(r.mean_found_ratio(), 0.0);
  EXPECT_LE(r.mean_found_ratio(), 1.0);
}

TEST(RunSpectrum, BipartiteAdversaryLosesExactlyTheOddLengths) {
  auto c = small_config();
  c.adversary = {AdversaryKind::BipartiteEven, 1.0};
  c.trials = 2;
  const auto r = run_spectrum(c);
  for (const auto& t : r.trials) {
    ASSERT_FALSE(t.error.has_value());
    for (const auto& m : t.missing) {
      EXPECT_EQ(m.t % 2, 1) << m.t;
      EXPECT_EQ(m.reason.kind, MissingKind::NoOddCycle);
    }
    int odd = 0;
    for (int len = 3; len <= c.n; ++len) odd += len % 2;
    EXPECT_EQ(static_cast<int>(t.missing.size()), odd);
  }
}

TEST(RunSpectrum, OutputIndependentOfThreadCount) {
  auto c = small_config();
  c.trials = 4;
  const auto one = run_spectrum(c);
  c.threads = 3;
  const auto three = run_spectrum(c);
  EXPECT_EQ(csv_of(one), csv_of(three));
  EXPECT_EQ(one.to_json().dump(), three.to_json().dump());
  const auto csv = csv_of(one);
  EXPECT_EQ(csv.rfind("# schema_version=1\n", 0), 0u);
}

TEST(Sweep, FullKeepMatchesSpectrum) {
  auto c = small_config();
  const auto sweep = run_threshold_sweep(c, {1.0});
  const auto single = run_spectrum(c);
  ASSERT_EQ(sweep.rows.size(), 1u);
  ASSERT_EQ(sweep.rows[0].per_trial.size(), single.trials.size());
  for (std::size_t i = 0; i < single.trials.size(); ++i)
    EXPECT_DOUBLE_EQ(sweep.rows[0].per_trial[i], single.trials[i].found_ratio);
  EXPECT_DOUBLE_EQ(sweep.rows[0].mean_found_ratio, single.mean_found_ratio());
}

TEST(Sweep, MeansNeverDecreaseWithMoreEdges) {
  auto c = small_config();
  c.n = 100;
  c.trials = 10;
  const auto sweep = run_threshold_sweep(c, {0.1, 0.2, 0.35, 0.6, 1.0});
  for (std::size_t i = 1; i < sweep.rows.size(); ++i)
    EXPECT_GE(sweep.rows[i].mean_found_ratio, sweep.rows[i - 1].mean_found_ratio - 1e-12) << i;
  EXPECT_THROW(run_threshold_sweep(c, {0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(run_threshold_sweep(c, {}), std::invalid_argument);
}

TEST(LemmaChecks, NamesRoundTrip) {
  for (auto w : {LemmaCheck::Saturation, LemmaCheck::Goodness, LemmaCheck::CloseCross,
                 LemmaCheck::Boundedness, LemmaCheck::Peel, LemmaCheck::Posa})
    EXPECT_EQ(lemma_check_from_string(to_string(w)), w);
  EXPECT_THROW(lemma_check_from_string("nope"), std::invalid_argument);
}

TEST(LemmaChecks, SaturationAtForty) {
  auto c = small_config();
  c.n = 40;
  c.trials = 4;
  const auto r = run_lemma_checks(LemmaCheck::Saturation, c);
  EXPECT_FALSE(r.instances.empty());
  EXPECT_TRUE(r.all_pass()) << r.to_json().dump();
}

TEST(LemmaChecks, CloseCrossAtFifty) {
  auto c = small_config();
  c.n = 50;
  c.trials = 10;
  c.beta = 0.1;
  const auto r = run_lemma_checks(LemmaCheck::CloseCross, c);
  EXPECT_EQ(r.instances.size(), 10u);
  EXPECT_TRUE(r.all_pass()) << r.to_json().dump();
}

TEST(LemmaChecks, PeelAndPosa) {
  auto c = small_config();
  c.n = 12;
  c.trials = 5;
  EXPECT_TRUE(run_lemma_checks(LemmaCheck::Peel, c).all_pass());
  const auto posa = run_lemma_checks(LemmaCheck::Posa, c);
  EXPECT_GE(posa.instances.size(), 3u);
  EXPECT_TRUE(posa.all_pass()) << posa.to_json().dump();
}

TEST(LemmaChecks, GuardsRefuseLargeInstances) {
  auto c = small_config();
  c.n = 20;
  EXPECT_THROW(run_lemma_checks(LemmaCheck::Posa, c), std::invalid_argument);
  c.n = 100;
  c.guard_n = 60;
  EXPECT_THROW(run_lemma_checks(LemmaCheck::Boundedness, c), std::invalid_argument);
  EXPECT_THROW(run_lemma_checks(LemmaCheck::Saturation, c), std::invalid_argument);
}

TEST(LemmaChecks, ReportCsvHasOneRowPerInstance) {
  auto c = small_config();
  c.n = 12;
  c.trials = 3;
  const auto r = run_lemma_checks(LemmaCheck::Peel, c);
  std::ostringstream out;
  r.write_csv(out);
  const auto text = out.str();
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), r.instances.size() + 2);
  EXPECT_EQ(r.to_json()["instances_total"], r.instances.size());
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PANCYC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("spectrum --n 60 --trials 1 --seed 3"), 0);
  EXPECT_EQ(run_cli("check posa --n 20"), 2);
  EXPECT_EQ(run_cli("spectrum --n 60 --trials 0"), 2);
  EXPECT_EQ(run_cli("spectrum --n 60 --p 0.5 --C 3"), 2);
  EXPECT_EQ(run_cli("bogus"), 2);
  EXPECT_EQ(run_cli("check peel --n 12 --trials 3"), 0);
}

TEST(Cli, WritesCsvAndJson) {
  const auto dir = std::filesystem::temp_directory_path() / "pancyc_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "s.csv").string();
  const auto js = (dir / "s.json").string();
  ASSERT_EQ(run_cli("spectrum --n 60 --trials 2 --out " + csv + " --json " + js), 0);
  std::ifstream jin(js);
  const auto j = nlohmann::json::parse(jin);
  EXPECT_EQ(j["trials"].size(), 2u);
  std::ifstream cin_(csv);
  std::string first;
  std::getline(cin_, first);
  EXPECT_EQ(first, "# schema_version=1");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace pancyc
