// Copyright 2026 The circumlab Authors.
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

#include "circumlab/harness.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

#include <gtest/gtest.h>

#include "circumlab/colouring.hpp"
#include "circumlab/estimators.hpp"
#include "circumlab/rng.hpp"

namespace circumlab {
namespace {

ExperimentConfig small_clt(int threads) {
  ExperimentConfig cfg;
  cfg.n = 300;
  cfg.c = 12;
  cfg.k = 3;
  cfg.trials = 40;
  cfg.seed = 77;
  cfg.threads = threads;
  return cfg;
}

std::string records_text(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_records(out, records);
  return out.str();
}

TEST(ConfigTest, ParsesKeyValueWithComments) {
  std::istringstream in(
      "# header\nexperiment = poisson-regime\n n=10000 \nlambda = -0.5  # note\n"
      "seed = 18446744073709551615\nrecord_runtime = true\n\n");
  const ExperimentConfig cfg = parse_config(in);
  EXPECT_EQ(cfg.experiment, "poisson-regime");
  EXPECT_EQ(cfg.n, 10000);
  EXPECT_EQ(cfg.lambda, -0.5);
  EXPECT_EQ(cfg.seed, 18446744073709551615ULL);
  EXPECT_TRUE(cfg.record_runtime);
  EXPECT_EQ(cfg.k, ExperimentConfig().k);
}

TEST(ConfigTest, RoundTripsThroughText) {
  ExperimentConfig cfg;
  cfg.experiment = "threshold-scan";
  cfg.c_min = 8;
  cfg.c_max = 11;
  cfg.c_step = 0.1;
  cfg.core = "both";
  cfg.output = "out.csv";
  std::istringstream in(config_string(cfg));
  EXPECT_EQ(config_string(parse_config(in)), config_string(cfg));
}

TEST(ConfigTest, ErrorsNameTheLine) {
  std::istringstream unknown("n = 5\nbogus = 1\n");
  try {
    parse_config(unknown);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::istringstream bad("k = 3x\n");
  EXPECT_THROW(parse_config(bad), std::runtime_error);
  std::istringstream no_eq("trials 5\n");
  EXPECT_THROW(parse_config(no_eq), std::runtime_error);
  EXPECT_THROW(load_config("/nonexistent/cfg.txt"), std::runtime_error);
}

TEST(ConfigTest, ValidatesPerExperiment) {
  ExperimentConfig cfg;
  EXPECT_NO_THROW(validate_config(cfg));
  cfg.trials = 50;
  EXPECT_THROW(validate_config(cfg), std::invalid_argument);  // clt needs 100
  cfg.experiment = "census";
  EXPECT_NO_THROW(validate_config(cfg));
  cfg.c = 2000;
  EXPECT_THROW(validate_config(cfg), std::invalid_argument);
  cfg = ExperimentConfig();
  cfg.experiment = "threshold-scan";
  cfg.c_min = 5;
  cfg.c_max = 4;
  EXPECT_THROW(validate_config(cfg), std::invalid_argument);
  cfg.c_max = 6;
  cfg.core = "weak";
  EXPECT_THROW(validate_config(cfg), std::invalid_argument);
  cfg = ExperimentConfig();
  cfg.experiment = "nope";
  EXPECT_THROW(validate_config(cfg), std::invalid_argument);
}

TEST(RecordsTest, RoundTrip) {
  std::vector<TrialRecord> records;
  for (int t = 0; t < 100; ++t) {
    TrialRecord r;
    r.trial = t;
    r.seed = derive_seed(5, Stream::kGraph, t);
    r.l_tilde = 1000 - t;
    r.l_tilde_k = BigRational(3 * t + 1, 7);
    r.l_hat_k = BigRational(-t, 11);
    r.max_rp_comp = t % 9;
    r.aborts = t % 2;
    r.runtime_us = 10 * t;
    records.push_back(r);
  }
  std::istringstream in(records_text(records));
  EXPECT_EQ(read_records(in), records);
}

TEST(RecordsTest, EmptyIsHeaderOnly) {
  EXPECT_EQ(records_text({}), std::string(kRecordHeader) + "\n");
  std::istringstream in(records_text({}));
  EXPECT_TRUE(read_records(in).empty());
}

TEST(RecordsTest, MalformedRowNamesLine) {
  std::istringstream in(std::string(kRecordHeader) +
                        "\n0,1,2,3,1,4,1,0,0,0\n1,1,2,3,0,4,1,0,0,0\n");
  try {
    read_records(in);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream short_row(std::string(kRecordHeader) + "\n0,1,2\n");
  EXPECT_THROW(read_records(short_row), std::runtime_error);
  std::istringstream no_header("0,1,2,3,1,4,1,0,0,0\n");
  EXPECT_THROW(read_records(no_header), std::runtime_error);
}

TEST(RecordsTest, FileErrorsCarryPath) {
  try {
    read_records(std::string("/nonexistent/records.csv"));
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/records.csv"),
              std::string::npos);
  }
}

TEST(TrialsTest, ThreadCountDoesNotChangeRecords) {
  EXPECT_EQ(records_text(run_trials(small_clt(1))),
            records_text(run_trials(small_clt(8))));
}

TEST(TrialsTest, SummaryRecomputesFromFile) {
  const ExperimentConfig cfg = small_clt(2);
  const std::vector<TrialRecord> live = run_trials(cfg);
  std::istringstream in(records_text(live));
  const std::vector<TrialRecord> loaded = read_records(in);
  EXPECT_EQ(summarize(cfg, loaded), summarize(cfg, live));
  EXPECT_EQ(summary_json(summarize(cfg, loaded)), summary_json(summarize(cfg, live)));
}

TEST(TrialsTest, Sandwich) {
  ExperimentConfig cfg = small_clt(1);
  cfg.trials = 50;
  for (auto [n, c, k] : {std::tuple{40, 3.0, 2}, std::tuple{40, 3.0, 3},
                         std::tuple{200, 12.0, 2}, std::tuple{200, 12.0, 3}}) {
    cfg.n = n;
    cfg.c = c;
    cfg.k = k;
    for (const TrialRecord& r : run_trials(cfg)) {
      ASSERT_EQ(r.aborts, 0) << n << " " << c << " " << r.max_rp_comp;
      EXPECT_LE(r.l_hat_k, r.l_tilde_k);
      EXPECT_LE(r.l_tilde_k, BigRational(cfg.n));
      // Per-vertex comparison: shares agree unless the component leaves
      // B(v, k - 1), and those vertices account for the whole gap.
      const Graph g = sample_gnp({cfg.n, cfg.c, r.seed});
      const PhiBreakdown phi = phi_global(g, global_colouring(g));
      BigRational escaping_gap = 0;
      for (Vertex v = 0; v < cfg.n; ++v) {
        const BigRational d = to_big(phi.per_vertex[v]) - to_big(phi_local(g, v, k));
        const int comp = phi.component_of[v];
        const bool escapes =
            comp >= 0 && !is_subset(phi.components[comp], ball(g, v, k - 1));
        if (escapes) {
          escaping_gap += d;
        } else {
          EXPECT_EQ(d, 0) << "trial " << r.trial << " vertex " << v;
        }
      }
      EXPECT_EQ(r.l_tilde_k - BigRational(r.l_tilde), escaping_gap);
    }
  }
}

TEST(TrialsTest, RuntimeOnlyWhenAsked) {
  ExperimentConfig cfg = small_clt(1);
  cfg.trials = 3;
  for (const TrialRecord& r : run_trials(cfg)) EXPECT_EQ(r.runtime_us, 0);
}

TEST(CltTest, EmptyGraphIsDegenerate) {
  ExperimentConfig cfg = small_clt(1);
  cfg.c = 0;
  cfg.trials = 100;
  const CltReport r = run_clt(cfg);
  EXPECT_TRUE(r.summary.degenerate);
  EXPECT_EQ(r.summary.l_tilde.variance, 0);
  EXPECT_EQ(r.summary.l_tilde.mean, 0);
  EXPECT_FALSE(r.pass());
}

TEST(CltTest, RejectsFewTrials) {
  ExperimentConfig cfg = small_clt(1);
  cfg.trials = 99;
  EXPECT_THROW(run_clt(cfg), std::invalid_argument);
}

TEST(CltTest, AbortsAreCountedAndFail) {
  ExperimentConfig cfg = small_clt(1);
  cfg.c = 4;
  cfg.size_cap = 2;
  cfg.trials = 100;
  const CltReport r = run_clt(cfg);
  EXPECT_GT(r.summary.aborts, 1);
  EXPECT_FALSE(r.aborts_ok());
  EXPECT_FALSE(r.pass());
}

TEST(ThresholdTest, DenseGraphsHaveLargeCore) {
  ExperimentConfig cfg;
  cfg.experiment = "threshold-scan";
  cfg.n = 3000;
  cfg.trials = 2;
  cfg.c_min = 20;
  cfg.c_max = 20;
  cfg.core = "both";
  const ThresholdScan r = run_threshold_scan(cfg);
  ASSERT_EQ(r.grid.size(), 1u);
  EXPECT_GT(r.strong_fraction[0], 0.9);
  EXPECT_GE(r.plain_fraction[0], r.strong_fraction[0]);
  EXPECT_EQ(r.strong_jump, 20.0);
}

TEST(ThresholdTest, GridAndJump) {
  ExperimentConfig cfg;
  cfg.n = 2000;
  cfg.trials = 2;
  cfg.c_min = 2;
  cfg.c_max = 7;
  cfg.c_step = 0.5;
  cfg.core = "plain";
  const ThresholdScan r = run_threshold_scan(cfg);
  EXPECT_EQ(r.grid.size(), 11u);
  EXPECT_TRUE(r.strong_fraction.empty());
  ASSERT_TRUE(r.plain_jump.has_value());
  EXPECT_GE(*r.plain_jump, 4.5);
  EXPECT_LE(*r.plain_jump, 6.0);
}

TEST(PoissonTest, LargeLambdaLeavesNoDeficit) {
  ExperimentConfig cfg;
  cfg.experiment = "poisson-regime";
  cfg.n = 1000;
  cfg.lambda = 6;
  cfg.trials = 50;
  const PoissonReport r = run_poisson_regime(cfg);
  EXPECT_NEAR(r.c, std::log(1000.0) + std::log(std::log(1000.0)) + 6, 1e-12);
  EXPECT_GE(r.zero_fraction, 0.95);
  EXPECT_EQ(r.deficit.size(), 50u);
}

TEST(PoissonTest, DeficitTracksLowDegreeCount) {
  ExperimentConfig cfg;
  cfg.n = 2000;
  cfg.lambda = 0;
  cfg.trials = 100;
  const PoissonReport r = run_poisson_regime(cfg);
  EXPECT_GE(r.proxy_agreement, 0.9);
  EXPECT_FALSE(r.above_log_regime);
}

TEST(TailTest, EmptyGraphPasses) {
  ExperimentConfig cfg;
  cfg.n = 500;
  cfg.c = 0;
  cfg.k = 2;
  cfg.trials = 3;
  const TailReport r = run_tail_bound(cfg);
  EXPECT_TRUE(r.pass());
  for (const TailPoint& p : r.points) EXPECT_EQ(p.fraction, 0);
}

TEST(TailTest, RejectsGridAtOrBelowThreshold) {
  ExperimentConfig cfg;
  cfg.n = 100;
  cfg.c = 2;
  cfg.k = 2;
  cfg.trials = 2;
  EXPECT_THROW(run_tail_bound(cfg, {196}), std::invalid_argument);
  EXPECT_NO_THROW(run_tail_bound(cfg, {197}));
}

TEST(TailTest, DefaultGrid) {
  const std::vector<double> g = default_tail_grid(2, 2);
  EXPECT_EQ(g.front(), 197);
  EXPECT_EQ(g.back(), 1961);
  EXPECT_EQ(default_tail_grid(0, 2), std::vector<double>{2});
}

TEST(TailTest, SmallRadiusBoundHolds) {
  ExperimentConfig cfg;
  cfg.n = 20000;
  cfg.c = 1;
  cfg.k = 1;
  cfg.trials = 5;
  cfg.threads = 2;
  const TailReport r = run_tail_bound(cfg);
  EXPECT_TRUE(r.pass()) << tail_json(r);
}

}  // namespace
}  // namespace circumlab
