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

#ifndef CIRCUMLAB_HARNESS_HPP_
#define CIRCUMLAB_HARNESS_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "circumlab/graph.hpp"
#include "circumlab/path_cover.hpp"
#include "circumlab/rational.hpp"
#include "circumlab/stats.hpp"

namespace circumlab {

// One flat bag of parameters; each experiment reads the fields it needs.
struct ExperimentConfig {
  std::string experiment = "clt";
  Vertex n = 1000;
  double c = 20;
  int k = 6;
  std::int64_t trials = 100;
  std::uint64_t seed = 1;
  std::int64_t truncation = -1;  // -1: the (10ck)^2k default, saturated
  int size_cap = kDefaultSizeCap;
  double p2_scale = 0.1;
  int threads = 1;
  std::string output;

  double lambda = 0;        // poisson-regime
  double c_min = 0;         // threshold-scan grid
  double c_max = 0;
  double c_step = 0.1;
  std::string core = "strong";  // threshold-scan: strong, plain or both
  double scale = 4;         // variance-scan: second size is scale * n
  std::int64_t bins = 100000;  // balls-bins
  std::int64_t balls = 500;
  std::int64_t flips = 10000;  // resample-audit
  bool record_runtime = false;  // runtime_us is 0 unless set
};

const std::vector<std::string>& experiment_names();

// Lines "key = value"; '#' starts a comment. Unknown keys and malformed
// values throw std::runtime_error naming the line.
ExperimentConfig parse_config(std::istream& in,
                              ExperimentConfig base = ExperimentConfig());
ExperimentConfig load_config(const std::string& path,
                             ExperimentConfig base = ExperimentConfig());
// Sets one field from text; throws std::invalid_argument on unknown keys or
// bad values.
void set_config_value(ExperimentConfig& cfg, const std::string& key,
                      const std::string& value);
std::string config_string(const ExperimentConfig& cfg);

// Throws std::invalid_argument when a field is out of range for
// cfg.experiment.
void validate_config(const ExperimentConfig& cfg);

std::int64_t effective_truncation(const ExperimentConfig& cfg);

struct TrialRecord {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;  // graph seed
  std::int64_t l_tilde = 0;
  BigRational l_tilde_k;
  BigRational l_hat_k;
  std::int64_t max_rp_comp = 0;  // largest component of G[P u R]
  std::int64_t aborts = 0;       // 1 if a component exceeded size_cap
  std::int64_t runtime_us = 0;
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Trial t samples G(n, c/n) with seed derive_seed(cfg.seed, kGraph, t).
TrialRecord run_trial(const ExperimentConfig& cfg, std::int64_t t);
// Records in trial order whatever the thread count.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg);

inline constexpr const char* kRecordHeader =
    "trial,seed,l_tilde,l_tilde_k_num,l_tilde_k_den,l_hat_k_num,l_hat_k_den,"
    "max_rp_comp,aborts,runtime_us";

void write_records(std::ostream& out, const std::vector<TrialRecord>& records);
// Throws std::runtime_error with the line number on malformed rows.
std::vector<TrialRecord> read_records(std::istream& in);
// File versions; errors carry the path.
void write_records(const std::string& path,
                   const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_records(const std::string& path);

struct ObservableSummary {
  double mean = 0;
  double variance = 0;
  double variance_per_n = 0;
  double skewness = 0;
  double ks_to_normal = 0;     // Lilliefors-type, sample mean and sd
  Interval variance_per_n_ci;  // 95% percentile bootstrap
  friend bool operator==(const ObservableSummary&,
                         const ObservableSummary&) = default;
};

struct ExperimentSummary {
  Vertex n = 0;
  double c = 0;
  int k = 0;
  std::int64_t trials = 0;
  std::int64_t aborts = 0;
  std::int64_t max_rp_comp = 0;
  bool degenerate = false;  // L~ constant over the kept trials
  ObservableSummary l_tilde;
  ObservableSummary l_tilde_k;
  ObservableSummary l_hat_k;
  friend bool operator==(const ExperimentSummary&,
                         const ExperimentSummary&) = default;
};

// Statistics over the trials without aborts. Bootstrap seeds derive from
// cfg.seed, so the summary is a function of (cfg, records).
ExperimentSummary summarize(const ExperimentConfig& cfg,
                            const std::vector<TrialRecord>& records);
std::string summary_json(const ExperimentSummary& s);

inline constexpr double kMaxAbortFraction = 0.01;

struct CltReport {
  ExperimentSummary summary;
  std::vector<TrialRecord> records;
  double ks_tolerance = 0.06;
  bool aborts_ok() const;
  bool pass() const;
};

// Throws std::invalid_argument when trials < 100.
CltReport run_clt(const ExperimentConfig& cfg);
std::string clt_json(const CltReport& r);

struct VarianceScanReport {
  ExperimentSummary small;
  ExperimentSummary large;
  double ratio = 0;  // Var(L~)/n at scale * n over the same at n
  double tolerance = 0.2;
  bool pass() const;
};

VarianceScanReport run_variance_scan(const ExperimentConfig& cfg);
std::string variance_scan_json(const VarianceScanReport& r);

struct ThresholdScan {
  std::vector<double> grid;
  std::vector<double> strong_fraction;  // mean |S|/n, empty if not scanned
  std::vector<double> plain_fraction;   // mean |4-core|/n
  std::optional<double> strong_jump;    // first grid c with fraction > 0.01
  std::optional<double> plain_jump;
};

inline constexpr double kJumpFraction = 0.01;

ThresholdScan run_threshold_scan(const ExperimentConfig& cfg);
std::string threshold_json(const ThresholdScan& r);

struct PoissonReport {
  Vertex n = 0;
  double lambda = 0;
  double c = 0;  // ln n + ln ln n + lambda
  bool above_log_regime = false;  // c > 2 ln n
  std::int64_t trials = 0;
  std::int64_t aborts = 0;
  std::vector<std::int64_t> deficit;     // n - L~ per kept trial
  std::vector<std::int64_t> low_degree;  // n0 + n1 per kept trial
  double tv_to_poisson = 0;              // deficit vs Poisson(e^-lambda)
  double zero_fraction = 0;
  double proxy_agreement = 0;  // fraction with deficit == n0 + n1
  double tv_tolerance = 0.1;
  bool pass() const { return tv_to_poisson <= tv_tolerance; }
};

PoissonReport run_poisson_regime(const ExperimentConfig& cfg);
std::string poisson_json(const PoissonReport& r);

struct TailPoint {
  double s = 0;
  double bound = 0;     // k exp(-s^(1/k))
  double fraction = 0;  // mean over samples of #{v : |B(v,k)| >= s} / n
  double std_error = 0;
  bool ok() const { return fraction <= bound + 3 * std_error; }
};

struct TailReport {
  Vertex n = 0;
  double c = 0;
  int k = 0;
  std::int64_t samples = 0;
  std::vector<TailPoint> points;
  bool pass() const;
};

// Default grid: integers just above (7c)^k and multiples up to 10 (7c)^k,
// never below 2. Throws std::invalid_argument for grid points <= (7c)^k.
std::vector<double> default_tail_grid(double c, int k);
TailReport run_tail_bound(const ExperimentConfig& cfg,
                          std::vector<double> grid = {});
std::string tail_json(const TailReport& r);

}  // namespace circumlab

#endif  // CIRCUMLAB_HARNESS_HPP_
