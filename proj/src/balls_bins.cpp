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

#include "circumlab/balls_bins.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "circumlab/parallel.hpp"
#include "circumlab/rng.hpp"

namespace circumlab {

double h(double x) {
  if (!(x >= 0)) throw std::invalid_argument("h: x must be >= 0");
  const double e1 = std::exp(-x);
  return (1 + x) * e1 - ((1 + x) * (1 + x) + x * x * x) * e1 * e1;
}

Fraction var_z_exact(std::int64_t bins, std::int64_t balls) {
  if (bins < 1 || balls < 0) {
    throw std::invalid_argument("var_z_exact: need bins >= 1 and balls >= 0");
  }
  std::int64_t outcomes = 1;
  for (std::int64_t i = 0; i < balls; ++i) {
    if (outcomes > kMaxEnumeration / bins) {
      throw std::invalid_argument("var_z_exact: N^m exceeds the enumeration limit");
    }
    outcomes *= bins;
  }
  // Odometer over assignments; counts and Z are updated incrementally.
  std::vector<std::int64_t> where(balls, 0);
  std::vector<std::int64_t> load(bins, 0);
  load[0] = balls;
  std::int64_t z = balls >= 2 ? 1 : 0;
  auto move = [&](std::int64_t ball, std::int64_t to) {
    const std::int64_t from = where[ball];
    if (load[from]-- == 2) --z;
    if (++load[to] == 2) ++z;
    where[ball] = to;
  };
  __int128 sum = 0, sum_sq = 0;
  for (std::int64_t step = 0; step < outcomes; ++step) {
    sum += z;
    sum_sq += static_cast<__int128>(z) * z;
    for (std::int64_t i = 0; i < balls; ++i) {
      if (where[i] + 1 < bins) {
        move(i, where[i] + 1);
        break;
      }
      move(i, 0);
    }
  }
  // Var = (T sum_sq - sum^2) / T^2 with T = N^m.
  const __int128 t = outcomes;
  __int128 num = t * sum_sq - sum * sum;
  __int128 den = t * t;
  __int128 a = num, b = den;
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

OccupancyEstimate simulate_var_z(const OccupancyParams& params, int threads) {
  if (params.trials < 2 || params.bins < 1 || params.balls < 0) {
    throw std::invalid_argument(
        "simulate_var_z: need trials >= 2, bins >= 1, balls >= 0");
  }
  std::vector<double> z(params.trials);
  // Each worker thread keeps a count array that is all zero between trials;
  // only the touched bins are reset.
  parallel_for(params.trials, threads, [&](std::int64_t t) {
    thread_local std::vector<std::int32_t> load;
    thread_local std::vector<std::int64_t> touched;
    if (static_cast<std::int64_t>(load.size()) < params.bins) {
      load.resize(params.bins, 0);
    }
    touched.clear();
    Rng rng = make_rng(params.seed, Stream::kBins, t);
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < params.balls; ++i) {
      const std::int64_t b = static_cast<std::int64_t>(uniform_below(rng, params.bins));
      touched.push_back(b);
      if (++load[b] == 2) ++count;
    }
    for (std::int64_t b : touched) load[b] = 0;
    z[t] = static_cast<double>(count);
  });
  const double n = static_cast<double>(params.trials);
  double mu = 0;
  for (double v : z) mu += v;
  mu /= n;
  double m2 = 0, m4 = 0;
  for (double v : z) {
    const double d = (v - mu) * (v - mu);
    m2 += d;
    m4 += d * d;
  }
  OccupancyEstimate out;
  out.mean = mu;
  out.variance = m2 / (n - 1);
  m2 /= n;
  m4 /= n;
  const double se2 = (m4 - (n - 3) / (n - 1) * m2 * m2) / n;
  out.std_error = se2 > 0 ? std::sqrt(se2) : 0;
  return out;
}

std::string occupancy_json(const OccupancyParams& params,
                           const OccupancyEstimate& est) {
  nlohmann::ordered_json j;
  j["bins"] = params.bins;
  j["balls"] = params.balls;
  j["trials"] = params.trials;
  j["seed"] = params.seed;
  j["mean"] = est.mean;
  j["variance"] = est.variance;
  j["std_error"] = est.std_error;
  j["variance_per_bin"] = est.variance / static_cast<double>(params.bins);
  j["h"] = h(static_cast<double>(params.balls) / static_cast<double>(params.bins));
  return j.dump();
}

}  // namespace circumlab
