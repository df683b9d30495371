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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "circumlab/colouring.hpp"
#include "circumlab/estimators.hpp"
#include "circumlab/parallel.hpp"
#include "circumlab/rng.hpp"

namespace circumlab {
namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v < std::numeric_limits<T>::min() ||
      v > std::numeric_limits<T>::max()) {
    throw std::invalid_argument(key + ": not an integer: '" + text + "'");
  }
  return static_cast<T>(v);
}

std::uint64_t parse_seed(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (!text.empty() && text[0] != '-') v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(key + ": not an unsigned integer: '" + text + "'");
  }
  return v;
}

double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument(key + ": not a number: '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::invalid_argument(key + ": not a boolean: '" + text + "'");
}

using Setter = std::function<void(ExperimentConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"experiment", [](ExperimentConfig& c, const std::string& v) { c.experiment = v; }},
      {"n", [](ExperimentConfig& c, const std::string& v) { c.n = parse_int<Vertex>("n", v); }},
      {"c", [](ExperimentConfig& c, const std::string& v) { c.c = parse_real("c", v); }},
      {"k", [](ExperimentConfig& c, const std::string& v) { c.k = parse_int<int>("k", v); }},
      {"trials", [](ExperimentConfig& c, const std::string& v) { c.trials = parse_int<std::int64_t>("trials", v); }},
      {"seed", [](ExperimentConfig& c, const std::string& v) { c.seed = parse_seed("seed", v); }},
      {"truncation", [](ExperimentConfig& c, const std::string& v) { c.truncation = parse_int<std::int64_t>("truncation", v); }},
      {"size_cap", [](ExperimentConfig& c, const std::string& v) { c.size_cap = parse_int<int>("size_cap", v); }},
      {"p2_scale", [](ExperimentConfig& c, const std::string& v) { c.p2_scale = parse_real("p2_scale", v); }},
      {"threads", [](ExperimentConfig& c, const std::string& v) { c.threads = parse_int<int>("threads", v); }},
      {"output", [](ExperimentConfig& c, const std::string& v) { c.output = v; }},
      {"lambda", [](ExperimentConfig& c, const std::string& v) { c.lambda = parse_real("lambda", v); }},
      {"c_min", [](ExperimentConfig& c, const std::string& v) { c.c_min = parse_real("c_min", v); }},
      {"c_max", [](ExperimentConfig& c, const std::string& v) { c.c_max = parse_real("c_max", v); }},
      {"c_step", [](ExperimentConfig& c, const std::string& v) { c.c_step = parse_real("c_step", v); }},
      {"core", [](ExperimentConfig& c, const std::string& v) { c.core = v; }},
      {"scale", [](ExperimentConfig& c, const std::string& v) { c.scale = parse_real("scale", v); }},
      {"bins", [](ExperimentConfig& c, const std::string& v) { c.bins = parse_int<std::int64_t>("bins", v); }},
      {"balls", [](ExperimentConfig& c, const std::string& v) { c.balls = parse_int<std::int64_t>("balls", v); }},
      {"flips", [](ExperimentConfig& c, const std::string& v) { c.flips = parse_int<std::int64_t>("flips", v); }},
      {"record_runtime", [](ExperimentConfig& c, const std::string& v) { c.record_runtime = parse_bool("record_runtime", v); }},
  };
  return table;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("config: " + what);
}

ObservableSummary describe(std::span<const double> x, Vertex n,
                           std::uint64_t seed, int index) {
  ObservableSummary s;
  const double nd = static_cast<double>(n);
  s.mean = mean(x);
  s.variance = x.size() >= 2 ? sample_variance(x) : 0;
  s.variance_per_n = s.variance / nd;
  s.skewness = s.variance > 0 ? skewness(x) : 0;
  s.ks_to_normal = lilliefors_ks(x);
  if (x.size() >= 2) {
    s.variance_per_n_ci = bootstrap_ci(
        x, [nd](std::span<const double> d) { return sample_variance(d) / nd; },
        1000, 0.95, derive_seed(seed, Stream::kBootstrap, index));
  }
  return s;
}

Json observable_json(const ObservableSummary& s) {
  Json j;
  j["mean"] = s.mean;
  j["variance"] = s.variance;
  j["variance_per_n"] = s.variance_per_n;
  j["variance_per_n_ci"] = {s.variance_per_n_ci.lo, s.variance_per_n_ci.hi};
  j["skewness"] = s.skewness;
  j["ks_to_normal"] = s.ks_to_normal;
  return j;
}

Json summary_object(const ExperimentSummary& s) {
  Json j;
  j["n"] = s.n;
  j["c"] = s.c;
  j["k"] = s.k;
  j["trials"] = s.trials;
  j["aborts"] = s.aborts;
  j["max_rp_comp"] = s.max_rp_comp;
  j["degenerate"] = s.degenerate;
  j["l_tilde"] = observable_json(s.l_tilde);
  j["l_tilde_k"] = observable_json(s.l_tilde_k);
  j["l_hat_k"] = observable_json(s.l_hat_k);
  return j;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "clt",           "variance-scan", "threshold-scan", "resample-audit",
      "poisson-regime", "tail-bound",   "theorem11",      "balls-bins",
      "reveal",        "census"};
  return names;
}

void set_config_value(ExperimentConfig& cfg, const std::string& key,
                      const std::string& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
  it->second(cfg, value);
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument("expected key = value");
      set_config_value(base, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("config line " + std::to_string(number) + ": " +
                               e.what());
    }
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open config");
  try {
    return parse_config(in, std::move(base));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string config_string(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  out << "experiment = " << cfg.experiment << "\n"
      << "n = " << cfg.n << "\n"
      << "c = " << cfg.c << "\n"
      << "k = " << cfg.k << "\n"
      << "trials = " << cfg.trials << "\n"
      << "seed = " << cfg.seed << "\n"
      << "truncation = " << cfg.truncation << "\n"
      << "size_cap = " << cfg.size_cap << "\n"
      << "p2_scale = " << cfg.p2_scale << "\n"
      << "threads = " << cfg.threads << "\n"
      << "output = " << cfg.output << "\n"
      << "lambda = " << cfg.lambda << "\n"
      << "c_min = " << cfg.c_min << "\n"
      << "c_max = " << cfg.c_max << "\n"
      << "c_step = " << cfg.c_step << "\n"
      << "core = " << cfg.core << "\n"
      << "scale = " << cfg.scale << "\n"
      << "bins = " << cfg.bins << "\n"
      << "balls = " << cfg.balls << "\n"
      << "flips = " << cfg.flips << "\n"
      << "record_runtime = " << (cfg.record_runtime ? "true" : "false") << "\n";
  return out.str();
}

void validate_config(const ExperimentConfig& cfg) {
  const auto& names = experiment_names();
  require(std::find(names.begin(), names.end(), cfg.experiment) != names.end(),
          "unknown experiment '" + cfg.experiment + "'");
  require(cfg.threads >= 1, "threads must be >= 1");
  require(cfg.trials >= 1, "trials must be >= 1");
  require(cfg.size_cap >= 1, "size_cap must be >= 1");
  require(cfg.truncation >= -1, "truncation must be >= 0 or -1");
  const std::string& e = cfg.experiment;
  if (e == "balls-bins") {
    require(cfg.bins >= 1 && cfg.balls >= 0, "need bins >= 1 and balls >= 0");
    require(cfg.trials >= 2, "balls-bins needs trials >= 2");
    return;
  }
  require(cfg.n >= 1, "n must be >= 1");
  require(cfg.k >= 1, "k must be >= 1");
  if (e == "threshold-scan") {
    require(cfg.c_step > 0, "c_step must be > 0");
    require(0 <= cfg.c_min && cfg.c_min <= cfg.c_max && cfg.c_max <= cfg.n,
            "need 0 <= c_min <= c_max <= n");
    require(cfg.core == "strong" || cfg.core == "plain" || cfg.core == "both",
            "core must be strong, plain or both");
    return;
  }
  if (e == "poisson-regime") {
    require(cfg.n >= 3, "poisson-regime needs n >= 3");
    const double c = std::log(cfg.n) + std::log(std::log(cfg.n)) + cfg.lambda;
    require(c >= 0 && c <= cfg.n, "ln n + ln ln n + lambda must lie in [0, n]");
    return;
  }
  require(cfg.c >= 0 && cfg.c <= cfg.n, "need 0 <= c <= n");
  if (e == "clt") require(cfg.trials >= 100, "clt needs trials >= 100");
  if (e == "variance-scan") {
    require(cfg.trials >= 2, "variance-scan needs trials >= 2");
    require(cfg.scale > 1 && cfg.scale * cfg.n <= std::numeric_limits<Vertex>::max(),
            "scale must be > 1 and scale * n must fit");
  }
  if (e == "reveal") {
    require(cfg.n >= 2 && cfg.p2_scale > 0 && cfg.p2_scale <= cfg.c,
            "reveal needs n >= 2 and 0 < p2_scale <= c");
  }
  if (e == "resample-audit") require(cfg.flips >= 1, "flips must be >= 1");
}

std::int64_t effective_truncation(const ExperimentConfig& cfg) {
  if (cfg.truncation >= 0) return cfg.truncation;
  return cfg.c > 0 ? standard_truncation(cfg.c, cfg.k) : kUnboundedTruncation;
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::int64_t t) {
  TrialRecord r;
  r.trial = t;
  r.seed = derive_seed(cfg.seed, Stream::kGraph, static_cast<std::uint64_t>(t));
  r.l_hat_k = r.l_tilde_k = BigRational(0);
  const auto start = std::chrono::steady_clock::now();
  const Graph g = sample_gnp({cfg.n, cfg.c, r.seed});
  const TriColouring col = global_colouring(g);
  const VertexSet pr = set_union(col.p, col.r);
  for (const VertexSet& comp : components(g, pr)) {
    r.max_rp_comp = std::max<std::int64_t>(r.max_rp_comp, comp.size());
  }
  try {
    r.l_tilde = phi_global(g, col, cfg.size_cap).l_tilde();
    r.l_tilde_k = l_tilde_k(g, cfg.k, cfg.size_cap);
    r.l_hat_k = l_hat_k(g, cfg.k, effective_truncation(cfg), cfg.size_cap);
  } catch (const ComponentTooLarge&) {
    r.aborts = 1;
    r.l_tilde = 0;
    r.l_hat_k = r.l_tilde_k = BigRational(0);
  }
  if (cfg.record_runtime) {
    r.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  }
  return r;
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
  std::vector<TrialRecord> out(cfg.trials);
  parallel_for(cfg.trials, cfg.threads,
               [&](std::int64_t t) { out[t] = run_trial(cfg, t); });
  return out;
}

void write_records(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kRecordHeader << "\n";
  for (const TrialRecord& r : records) {
    out << r.trial << ',' << r.seed << ',' << r.l_tilde << ','
        << numerator_str(r.l_tilde_k) << ',' << denominator_str(r.l_tilde_k)
        << ',' << numerator_str(r.l_hat_k) << ','
        << denominator_str(r.l_hat_k) << ',' << r.max_rp_comp << ','
        << r.aborts << ',' << r.runtime_us << "\n";
  }
}

std::vector<TrialRecord> read_records(std::istream& in) {
  std::vector<TrialRecord> out;
  std::string line;
  int number = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("records line " + std::to_string(number) + ": " + why);
  };
  if (!std::getline(in, line)) fail("missing header");
  ++number;
  if (trim(line) != kRecordHeader) fail("unexpected header");
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split_csv(trim(line));
    if (f.size() != 10) fail("expected 10 fields, got " + std::to_string(f.size()));
    try {
      TrialRecord r;
      r.trial = parse_int<std::int64_t>("trial", f[0]);
      r.seed = parse_seed("seed", f[1]);
      r.l_tilde = parse_int<std::int64_t>("l_tilde", f[2]);
      r.l_tilde_k = parse_rational(f[3], f[4]);
      r.l_hat_k = parse_rational(f[5], f[6]);
      r.max_rp_comp = parse_int<std::int64_t>("max_rp_comp", f[7]);
      r.aborts = parse_int<std::int64_t>("aborts", f[8]);
      r.runtime_us = parse_int<std::int64_t>("runtime_us", f[9]);
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  return out;
}

void write_records(const std::string& path,
                   const std::vector<TrialRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_records(out, records);
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<TrialRecord> read_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  try {
    return read_records(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

ExperimentSummary summarize(const ExperimentConfig& cfg,
                            const std::vector<TrialRecord>& records) {
  ExperimentSummary s;
  s.n = cfg.n;
  s.c = cfg.c;
  s.k = cfg.k;
  s.trials = static_cast<std::int64_t>(records.size());
  std::vector<double> lt, ltk, lhk;
  for (const TrialRecord& r : records) {
    s.max_rp_comp = std::max(s.max_rp_comp, r.max_rp_comp);
    if (r.aborts > 0) {
      s.aborts += 1;
      continue;
    }
    lt.push_back(static_cast<double>(r.l_tilde));
    ltk.push_back(to_double(r.l_tilde_k));
    lhk.push_back(to_double(r.l_hat_k));
  }
  if (lt.empty()) {
    s.degenerate = true;
    return s;
  }
  s.l_tilde = describe(lt, cfg.n, cfg.seed, 0);
  s.l_tilde_k = describe(ltk, cfg.n, cfg.seed, 1);
  s.l_hat_k = describe(lhk, cfg.n, cfg.seed, 2);
  s.degenerate = s.l_tilde.variance == 0;
  return s;
}

std::string summary_json(const ExperimentSummary& s) {
  return summary_object(s).dump();
}

bool CltReport::aborts_ok() const {
  return static_cast<double>(summary.aborts) <=
         kMaxAbortFraction * static_cast<double>(summary.trials);
}

bool CltReport::pass() const {
  return aborts_ok() && !summary.degenerate &&
         summary.l_tilde.ks_to_normal <= ks_tolerance;
}

CltReport run_clt(const ExperimentConfig& cfg) {
  if (cfg.trials < 100) throw std::invalid_argument("run_clt: needs trials >= 100");
  CltReport r;
  r.records = run_trials(cfg);
  r.summary = summarize(cfg, r.records);
  return r;
}

std::string clt_json(const CltReport& r) {
  Json j = summary_object(r.summary);
  j["ks_tolerance"] = r.ks_tolerance;
  j["aborts_ok"] = r.aborts_ok();
  j["pass"] = r.pass();
  return j.dump();
}

bool VarianceScanReport::pass() const {
  return !small.degenerate && !large.degenerate &&
         std::abs(ratio - 1) <= tolerance;
}

VarianceScanReport run_variance_scan(const ExperimentConfig& cfg) {
  VarianceScanReport r;
  ExperimentConfig big = cfg;
  big.n = static_cast<Vertex>(std::llround(cfg.scale * cfg.n));
  r.small = summarize(cfg, run_trials(cfg));
  r.large = summarize(big, run_trials(big));
  r.ratio = r.small.l_tilde.variance_per_n > 0
                ? r.large.l_tilde.variance_per_n / r.small.l_tilde.variance_per_n
                : 0;
  return r;
}

std::string variance_scan_json(const VarianceScanReport& r) {
  Json j;
  j["small"] = summary_object(r.small);
  j["large"] = summary_object(r.large);
  j["ratio"] = r.ratio;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass();
  return j.dump();
}

ThresholdScan run_threshold_scan(const ExperimentConfig& cfg) {
  ThresholdScan r;
  const auto steps =
      static_cast<std::int64_t>(std::floor((cfg.c_max - cfg.c_min) / cfg.c_step + 1e-9));
  for (std::int64_t i = 0; i <= steps; ++i) {
    r.grid.push_back(cfg.c_min + static_cast<double>(i) * cfg.c_step);
  }
  const bool strong = cfg.core != "plain";
  const bool plain = cfg.core != "strong";
  const std::int64_t points = static_cast<std::int64_t>(r.grid.size());
  std::vector<double> sf(points * cfg.trials, 0), pf(points * cfg.trials, 0);
  parallel_for(points * cfg.trials, cfg.threads, [&](std::int64_t job) {
    const std::int64_t i = job / cfg.trials, t = job % cfg.trials;
    const std::uint64_t seed = derive_seed(
        derive_seed(cfg.seed, Stream::kSample, i), Stream::kGraph, t);
    const Graph g = sample_gnp({cfg.n, r.grid[i], seed});
    const double nd = static_cast<double>(cfg.n);
    if (strong) sf[job] = static_cast<double>(global_colouring(g).s.size()) / nd;
    if (plain) pf[job] = static_cast<double>(k_core(g, 4).size()) / nd;
  });
  auto collect = [&](const std::vector<double>& f, std::vector<double>& means,
                     std::optional<double>& jump) {
    for (std::int64_t i = 0; i < points; ++i) {
      double sum = 0;
      for (std::int64_t t = 0; t < cfg.trials; ++t) sum += f[i * cfg.trials + t];
      means.push_back(sum / static_cast<double>(cfg.trials));
      if (!jump && means.back() > kJumpFraction) jump = r.grid[i];
    }
  };
  if (strong) collect(sf, r.strong_fraction, r.strong_jump);
  if (plain) collect(pf, r.plain_fraction, r.plain_jump);
  return r;
}

std::string threshold_json(const ThresholdScan& r) {
  Json j;
  j["grid"] = r.grid;
  j["strong_fraction"] = r.strong_fraction;
  j["plain_fraction"] = r.plain_fraction;
  j["strong_jump"] = r.strong_jump ? Json(*r.strong_jump) : Json(nullptr);
  j["plain_jump"] = r.plain_jump ? Json(*r.plain_jump) : Json(nullptr);
  return j.dump();
}

PoissonReport run_poisson_regime(const ExperimentConfig& cfg) {
  PoissonReport r;
  r.n = cfg.n;
  r.lambda = cfg.lambda;
  const double ln = std::log(static_cast<double>(cfg.n));
  r.c = ln + std::log(ln) + cfg.lambda;
  r.above_log_regime = r.c > 2 * ln;
  r.trials = cfg.trials;
  std::vector<std::int64_t> deficit(cfg.trials, -1), low(cfg.trials, 0);
  parallel_for(cfg.trials, cfg.threads, [&](std::int64_t t) {
    const Graph g = sample_gnp(
        {cfg.n, r.c, derive_seed(cfg.seed, Stream::kGraph, static_cast<std::uint64_t>(t))});
    for (Vertex v = 0; v < cfg.n; ++v) low[t] += g.degree(v) <= 1;
    try {
      deficit[t] = cfg.n - l_tilde(g, cfg.size_cap);
    } catch (const ComponentTooLarge&) {
      deficit[t] = -1;
    }
  });
  std::int64_t zeros = 0, agree = 0;
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    if (deficit[t] < 0) {
      ++r.aborts;
      continue;
    }
    r.deficit.push_back(deficit[t]);
    r.low_degree.push_back(low[t]);
    zeros += deficit[t] == 0;
    agree += deficit[t] == low[t];
  }
  if (!r.deficit.empty()) {
    const double kept = static_cast<double>(r.deficit.size());
    r.tv_to_poisson = tv_to_poisson(r.deficit, std::exp(-cfg.lambda));
    r.zero_fraction = static_cast<double>(zeros) / kept;
    r.proxy_agreement = static_cast<double>(agree) / kept;
  } else {
    r.tv_to_poisson = 1;
  }
  return r;
}

std::string poisson_json(const PoissonReport& r) {
  Json j;
  j["n"] = r.n;
  j["lambda"] = r.lambda;
  j["c"] = r.c;
  j["above_log_regime"] = r.above_log_regime;
  j["trials"] = r.trials;
  j["aborts"] = r.aborts;
  std::vector<double> d(r.deficit.begin(), r.deficit.end());
  j["mean_deficit"] = d.empty() ? 0.0 : mean(d);
  j["poisson_mean"] = std::exp(-r.lambda);
  j["tv_to_poisson"] = r.tv_to_poisson;
  j["tv_tolerance"] = r.tv_tolerance;
  j["zero_fraction"] = r.zero_fraction;
  j["proxy_agreement"] = r.proxy_agreement;
  j["pass"] = r.pass();
  return j.dump();
}

bool TailReport::pass() const {
  return std::all_of(points.begin(), points.end(),
                     [](const TailPoint& p) { return p.ok(); });
}

std::vector<double> default_tail_grid(double c, int k) {
  const double base = std::pow(7 * c, k);
  std::vector<double> grid;
  for (double f : {1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    const double s = std::max(2.0, std::floor(base * f) + 1);
    if (grid.empty() || s > grid.back()) grid.push_back(s);
  }
  return grid;
}

TailReport run_tail_bound(const ExperimentConfig& cfg, std::vector<double> grid) {
  const double base = std::pow(7 * cfg.c, cfg.k);
  if (grid.empty()) grid = default_tail_grid(cfg.c, cfg.k);
  for (double s : grid) {
    if (!(s > base)) {
      throw std::invalid_argument("run_tail_bound: grid point " + std::to_string(s) +
                                  " is not above (7c)^k");
    }
  }
  TailReport r;
  r.n = cfg.n;
  r.c = cfg.c;
  r.k = cfg.k;
  r.samples = cfg.trials;
  const std::size_t m = grid.size();
  std::vector<double> frac(cfg.trials * m, 0);
  parallel_for(cfg.trials, cfg.threads, [&](std::int64_t t) {
    const Graph g = sample_gnp(
        {cfg.n, cfg.c, derive_seed(cfg.seed, Stream::kGraph, static_cast<std::uint64_t>(t))});
    BfsWorkspace bfs(cfg.n);
    std::vector<std::int64_t> hits(m, 0);
    for (Vertex v = 0; v < cfg.n; ++v) {
      const double size = static_cast<double>(bfs.run(g, v, cfg.k).size());
      for (std::size_t j = 0; j < m; ++j) hits[j] += size >= grid[j];
    }
    for (std::size_t j = 0; j < m; ++j) {
      frac[t * m + j] = static_cast<double>(hits[j]) / cfg.n;
    }
  });
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> x(cfg.trials);
    for (std::int64_t t = 0; t < cfg.trials; ++t) x[t] = frac[t * m + j];
    TailPoint p;
    p.s = grid[j];
    p.bound = cfg.k * std::exp(-std::pow(grid[j], 1.0 / cfg.k));
    p.fraction = mean(x);
    p.std_error = x.size() >= 2 ? sample_stddev(x) / std::sqrt(static_cast<double>(x.size())) : 0;
    r.points.push_back(p);
  }
  return r;
}

std::string tail_json(const TailReport& r) {
  Json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["k"] = r.k;
  j["samples"] = r.samples;
  Json pts = Json::array();
  for (const TailPoint& p : r.points) {
    Json q;
    q["s"] = p.s;
    q["bound"] = p.bound;
    q["fraction"] = p.fraction;
    q["std_error"] = p.std_error;
    q["ok"] = p.ok();
    pts.push_back(q);
  }
  j["points"] = pts;
  j["pass"] = r.pass();
  return j.dump();
}

}  // namespace circumlab
