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

// Acceptance checks. Each criterion prints one PASS/FAIL line; tolerances
// are fixed here. Exit code 0 when every selected criterion passes, 2
// otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circumlab/balls_bins.hpp"
#include "circumlab/colouring.hpp"
#include "circumlab/cycle_exact.hpp"
#include "circumlab/graph.hpp"
#include "circumlab/harness.hpp"
#include "circumlab/path_cover.hpp"
#include "circumlab/resample.hpp"
#include "circumlab/rng.hpp"

namespace {

using namespace circumlab;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  std::uint64_t seed = 1;
  int threads = 1;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// 1. Strong core against brute force on tiny graphs.
Outcome strong_core_oracle(const Context& ctx) {
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 4 + i % 9;
    const double c = 3 + i % 6;
    const Graph g = sample_gnp({n, std::min<double>(c, n), derive_seed(ctx.seed, Stream::kFixture, i)});
    if (global_colouring(g).s != brute_force_strong_core(g)) ++mismatches;
  }
  return {mismatches == 0, fmt("200 graphs, %d mismatches", mismatches)};
}

// 2. uc against edge-subset enumeration on graphs with at most 8 vertices.
Outcome uc_oracle(const Context& ctx) {
  int mismatches = 0, bad_witness = 0;
  for (int i = 0; i < 500; ++i) {
    Rng rng = make_rng(ctx.seed, Stream::kFixture, 1000 + i);
    const Vertex n = 1 + i % 8;
    const double p = 0.25 + 0.5 * uniform01(rng);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (uniform01(rng) < p) edges.emplace_back(a, b);
      }
    }
    // Keep the enumeration within 2^20 subsets.
    while (edges.size() > 20) edges.erase(edges.begin() + uniform_below(rng, edges.size()));
    VertexSet w;
    for (Vertex v = 0; v < n; ++v) {
      if (uniform01(rng) < 0.5) w.push_back(v);
    }
    const Graph h(n, edges);
    const PathCoverResult r = uc_exact(h, w);
    if (r.uncovered != uc_bruteforce(h, w)) ++mismatches;
    if (!validate_witness(h, w, r)) ++bad_witness;
  }
  return {mismatches == 0 && bad_witness == 0,
          fmt("500 instances, %d value mismatches, %d invalid witnesses", mismatches,
              bad_witness)};
}

// 3. Colouring invariants on G(10^5, 20/n).
Outcome colouring_invariants(const Context& ctx) {
  const Vertex n = 100000;
  const double log4 = std::pow(std::log(static_cast<double>(n)), 4);
  std::int64_t cross = 0, sparse_red = 0, oversized = 0, local_misses = 0, largest = 0;
  for (int s = 0; s < 50; ++s) {
    const Graph g = sample_gnp({n, 20.0, derive_seed(ctx.seed, Stream::kGraph, s)});
    const TriColouring col = global_colouring(g);
    const std::vector<char> in_s = to_mask(n, col.s);
    const std::vector<char> in_r = to_mask(n, col.r);
    for (Vertex x : col.r) {
      for (Vertex y : g.neighbours(x)) cross += in_s[y];
    }
    for (const VertexSet& comp : components(g, set_union(col.p, col.r))) {
      std::int64_t red = 0;
      for (Vertex x : comp) red += in_r[x];
      if (4 * red < static_cast<std::int64_t>(comp.size())) ++sparse_red;
      if (static_cast<double>(comp.size()) > log4) ++oversized;
      largest = std::max<std::int64_t>(largest, comp.size());
    }
    // 20 (w, k) pairs per sample, k in {1, 2, 3}.
    Rng rng = make_rng(ctx.seed, Stream::kSample, s);
    for (int j = 0; j < 20; ++j) {
      const Vertex w = static_cast<Vertex>(uniform_below(rng, n));
      const int k = 1 + static_cast<int>(uniform_below(rng, 3));
      const LocalColouring local = local_colouring(g, w, k);
      if (!is_subset(set_intersection(col.s, ball(g, w, k)), local.s_k)) ++local_misses;
    }
  }
  const bool ok = cross == 0 && sparse_red == 0 && oversized == 0 && local_misses == 0;
  return {ok, fmt("50 samples: e(S,R)=%lld, components with <1/4 red %lld, above log^4 n %lld "
                  "(largest %lld), local core misses %lld of 1000",
                  (long long)cross, (long long)sparse_red, (long long)oversized,
                  (long long)largest, (long long)local_misses)};
}

// 4. Flip assertions on 10^4 random flips per setting.
Outcome flip_lemmas(const Context& ctx) {
  struct Setting {
    Vertex n;
    double c;
    int k;
  };
  bool ok = true;
  std::string detail;
  for (const Setting& s : {Setting{500, 5, 4}, Setting{2000, 20, 6}, Setting{5000, 20, 8}}) {
    const FlipLemmaReport r = flip_lemma_audit(s.n, s.c, s.k, 10000, ctx.seed, ctx.threads);
    ok = ok && r.pass();
    if (!detail.empty()) detail += "; ";
    detail += fmt("(%d,%g,%d): %lld checked, %lld too large, %zu violations", s.n, s.c,
                  s.k, (long long)r.checked, (long long)r.too_large, r.violations.size());
    for (const auto& v : r.violations) {
      std::cerr << flip_violation_json(v.violation, v.seed, v.edge) << "\n";
    }
  }
  return {ok, detail};
}

// 5. Star identity and core update on generated instances.
Outcome star_identity(const Context& ctx) {
  int star_fail = 0, core_fail = 0;
  std::int64_t stars = 0;
  for (int i = 0; i < 100; ++i) {
    const PInstance inst = generate_p_instance(18 + i % 5, 0.005 * (i % 5), 12, 0, 6,
                                               derive_seed(ctx.seed, Stream::kFixture, i));
    const int k = 3 + i % 3;
    const StarIdentityResult r = star_identity_check(inst.h, inst.a, inst.b, k);
    stars += r.y;
    if (!r.holds()) ++star_fail;
    if (!core_update_check(inst.h, inst.a, inst.b).holds()) ++core_fail;
  }
  return {star_fail == 0 && core_fail == 0,
          fmt("100 instances (k in 3..5, %lld stars with >= 2 edges): %d identity failures, "
              "%d core update failures",
              (long long)stars, star_fail, core_fail)};
}

// 6. Efron-Stein bound at (2000, 20, 6), 500 trials.
Outcome efron_stein(const Context& ctx) {
  const EfronSteinReport r = efron_stein_audit(2000, 20, 6, 500, ctx.seed, ctx.threads);
  return {r.pass(), fmt("Var(L~_k) = %.6g [%.6g, %.6g], bound = %.6g [%.6g, %.6g], "
                        "%lld dropped",
                        r.lhs, r.lhs_ci.lo, r.lhs_ci.hi, r.rhs, r.rhs_ci.lo, r.rhs_ci.hi,
                        (long long)r.too_large)};
}

// 7. Balls in bins.
Outcome balls_bins(const Context& ctx) {
  int cases = 0, off = 0;
  for (std::int64_t bins = 1; bins <= 20; ++bins) {
    std::int64_t size = 1;
    for (std::int64_t balls = 0; size <= 100000; ++balls, size *= bins) {
      const Fraction exact = var_z_exact(bins, balls);
      const OccupancyEstimate e = simulate_var_z(
          {bins, balls, 20000, derive_seed(ctx.seed, Stream::kBins, bins * 100 + balls)},
          ctx.threads);
      ++cases;
      if (std::abs(e.variance - exact.value()) > 4 * e.std_error) ++off;
      if (bins == 1) break;  // N^m stays 1
    }
  }
  const OccupancyEstimate big = simulate_var_z({100000, 500, 10000, ctx.seed}, ctx.threads);
  const double rel = big.variance / 1e5 / h(0.005) - 1;
  int grid_fail = 0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = 0.01 * i / 1001.0;
    if (!(h(x) > x * x / 3)) ++grid_fail;
  }
  const bool ok = off == 0 && std::abs(rel) <= 0.1 && grid_fail == 0;
  return {ok, fmt("%d exact cases, %d beyond 4 SE; Var(Z)/N vs h(0.005) off by %.2f%%; "
                  "h > x^2/3 fails at %d of 1000 grid points",
                  cases, off, 100 * rel, grid_fail)};
}

// 8. Exact circumference against L~ at (50, 20).
Outcome circumference(const Context& ctx) {
  const CircumferenceAuditReport r = circumference_audit(50, 20, 100, ctx.seed, ctx.threads);
  return {r.agree >= 95 && r.inexact == 0,
          fmt("%lld of 100 agree, %lld inexact, %lld too large", (long long)r.agree,
              (long long)r.inexact, (long long)r.too_large)};
}

// 9. Normality of L~ and linear variance growth.
Outcome clt(const Context& ctx) {
  ExperimentConfig cfg;
  cfg.n = 4000;
  cfg.c = 20;
  cfg.k = 6;
  cfg.trials = 1000;
  cfg.seed = ctx.seed;
  cfg.threads = ctx.threads;
  const CltReport r = run_clt(cfg);
  cfg.experiment = "variance-scan";
  const VarianceScanReport v = run_variance_scan(cfg);
  return {r.pass() && v.pass(),
          fmt("KS = %.4f (tolerance 0.06), Var(L~)/n = %.4g at 4000 and %.4g at 16000, "
              "ratio %.4f, aborts %lld, degenerate %s",
              r.summary.l_tilde.ks_to_normal, v.small.l_tilde.variance_per_n,
              v.large.l_tilde.variance_per_n, v.ratio, (long long)r.summary.aborts,
              r.summary.degenerate ? "yes" : "no")};
}

// 10. Poisson regime of n - L~.
Outcome poisson(const Context& ctx) {
  ExperimentConfig cfg;
  cfg.n = 10000;
  cfg.trials = 2000;
  cfg.seed = ctx.seed;
  cfg.threads = ctx.threads;
  cfg.lambda = 0;
  const PoissonReport at0 = run_poisson_regime(cfg);
  cfg.lambda = 6;
  const PoissonReport at6 = run_poisson_regime(cfg);
  const bool ok = at0.pass() && at6.zero_fraction >= 0.99;
  std::vector<double> d(at0.deficit.begin(), at0.deficit.end());
  return {ok, fmt("lambda 0: TV to Poisson(1) = %.4f (tolerance 0.1), mean %.4f; "
                  "lambda 6: zero in %.2f%% of trials",
                  at0.tv_to_poisson, d.empty() ? 0.0 : mean(d), 100 * at6.zero_fraction)};
}

// 11. Threshold scans.
Outcome thresholds(const Context& ctx) {
  ExperimentConfig cfg;
  cfg.n = 100000;
  cfg.trials = 10;
  cfg.c_step = 0.1;
  cfg.seed = ctx.seed;
  cfg.threads = ctx.threads;
  cfg.core = "strong";
  cfg.c_min = 8;
  cfg.c_max = 11;
  const ThresholdScan strong = run_threshold_scan(cfg);
  cfg.core = "plain";
  cfg.c_min = 4.5;
  cfg.c_max = 6;
  const ThresholdScan plain = run_threshold_scan(cfg);
  const double sj = strong.strong_jump.value_or(-1), pj = plain.plain_jump.value_or(-1);
  const bool ok = sj >= 8.8 && sj <= 9.7 && pj >= 4.95 && pj <= 5.35;
  return {ok, fmt("strong core jump %.1f (want [8.8, 9.7]), plain 4-core jump %.1f "
                  "(want [4.95, 5.35])",
                  sj, pj)};
}

// 12. Ball size tail.
Outcome tail(const Context& ctx) {
  ExperimentConfig cfg;
  cfg.n = 100000;
  cfg.c = 2;
  cfg.k = 2;
  cfg.trials = 20;
  cfg.seed = ctx.seed;
  cfg.threads = ctx.threads;
  const TailReport r = run_tail_bound(cfg);
  double worst = 0;
  for (const TailPoint& p : r.points) worst = std::max(worst, p.fraction - p.bound);
  return {r.pass(), fmt("%zu grid points from s = %.0f, max excess over bound %.3g",
                        r.points.size(), r.points.front().s, worst)};
}

// 13. Byte-identical outputs at 1 and 8 threads.
Outcome determinism(const Context& ctx) {
  std::vector<std::string> differing;
  auto compare = [&](const std::string& name, const std::function<std::string(int)>& run) {
    if (run(1) != run(8)) differing.push_back(name);
  };
  compare("records", [&](int threads) {
    ExperimentConfig cfg;
    cfg.n = 3000;
    cfg.c = 12;
    cfg.k = 4;
    cfg.trials = 100;
    cfg.seed = ctx.seed;
    cfg.threads = threads;
    std::ostringstream out;
    write_records(out, run_trials(cfg));
    return out.str();
  });
  compare("flip audit", [&](int threads) {
    return flip_lemma_json(flip_lemma_audit(400, 8, 3, 400, ctx.seed, threads));
  });
  compare("circumference audit", [&](int threads) {
    return circumference_audit_json(circumference_audit(40, 20, 30, ctx.seed, threads));
  });
  compare("poisson", [&](int threads) {
    ExperimentConfig cfg;
    cfg.n = 2000;
    cfg.trials = 100;
    cfg.seed = ctx.seed;
    cfg.threads = threads;
    return poisson_json(run_poisson_regime(cfg));
  });
  compare("threshold", [&](int threads) {
    ExperimentConfig cfg;
    cfg.n = 5000;
    cfg.trials = 3;
    cfg.c_min = 8.5;
    cfg.c_max = 10;
    cfg.core = "both";
    cfg.seed = ctx.seed;
    cfg.threads = threads;
    return threshold_json(run_threshold_scan(cfg));
  });
  compare("balls-bins", [&](int threads) {
    const OccupancyParams p{1000, 60, 3000, ctx.seed};
    return occupancy_json(p, simulate_var_z(p, threads));
  });
  std::string detail = "records, flip audit, circumference audit, poisson, threshold, balls-bins";
  if (!differing.empty()) {
    detail = "differ:";
    for (const std::string& d : differing) detail += " " + d;
  }
  return {differing.empty(), detail};
}

struct Criterion {
  const char* name;
  Outcome (*run)(const Context&);
};

const Criterion kCriteria[] = {
    {"strong core oracle", strong_core_oracle},
    {"uc oracle", uc_oracle},
    {"colouring invariants", colouring_invariants},
    {"flip lemma audit", flip_lemmas},
    {"star identity and core update", star_identity},
    {"Efron-Stein bound", efron_stein},
    {"balls in bins", balls_bins},
    {"circumference vs L~", circumference},
    {"CLT statistics", clt},
    {"Poisson regime", poisson},
    {"threshold scans", thresholds},
    {"ball tail bound", tail},
    {"determinism", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  Context ctx;
  ctx.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--criterion", selected, "criteria to run (default: all)")
      ->check(CLI::Range(1, 13));
  app.add_option("--seed", ctx.seed, "master seed");
  app.add_option("--threads", ctx.threads, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int i = 1; i <= 13; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int id : selected) {
    const Criterion& c = kCriteria[id - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << id << " (" << c.name << "): " << (o.pass ? "PASS" : "FAIL")
              << " | " << o.detail << " | " << fmt("%.1f s", secs) << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 2;
}
