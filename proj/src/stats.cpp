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

#include "circumlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "circumlab/rng.hpp"

namespace circumlab {

double mean(std::span<const double> x) {
  if (x.empty()) return 0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
  if (x.size() < 2) return 0;
  const double m = mean(x);
  double ss = 0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

double sample_stddev(std::span<const double> x) {
  return std::sqrt(sample_variance(x));
}

double skewness(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 3) return 0;
  const double m = mean(x);
  double m2 = 0, m3 = 0;
  for (double v : x) {
    m2 += (v - m) * (v - m);
    m3 += (v - m) * (v - m) * (v - m);
  }
  m2 /= n;
  m3 /= n;
  if (m2 <= 0) return 0;
  const double g1 = m3 / std::pow(m2, 1.5);
  return g1 * std::sqrt(n * (n - 1)) / (n - 2);
}

double quantile(std::vector<double> x, double q) {
  if (x.empty()) throw std::invalid_argument("quantile of empty sample");
  std::sort(x.begin(), x.end());
  const double pos = q * static_cast<double>(x.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  if (i + 1 >= x.size()) return x.back();
  const double frac = pos - static_cast<double>(i);
  return x[i] + frac * (x[i + 1] - x[i]);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double lilliefors_ks(std::span<const double> x) {
  const double sd = sample_stddev(x);
  if (x.size() < 2 || sd <= 0) return 1.0;
  const double m = mean(x);
  std::vector<double> z(x.begin(), x.end());
  for (double& v : z) v = (v - m) / sd;
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    // Ties: compare against the CDF jump only at the last copy.
    if (i + 1 < z.size() && z[i + 1] == z[i]) continue;
    const double f = normal_cdf(z[i]);
    std::size_t first = i;
    while (first > 0 && z[first - 1] == z[i]) --first;
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::abs(f - static_cast<double>(first) / n));
  }
  return d;
}

double poisson_pmf(std::int64_t k, double lambda) {
  if (k < 0) return 0;
  if (lambda == 0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(lambda) - lambda - std::lgamma(kd + 1));
}

double tv_to_poisson(std::span<const std::int64_t> sample, double lambda) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  std::map<std::int64_t, double> freq;
  for (std::int64_t v : sample) {
    if (v < 0) throw std::invalid_argument("negative count in sample");
    freq[v] += 1.0 / static_cast<double>(sample.size());
  }
  double sum = 0, covered = 0;
  const std::int64_t top =
      std::max<std::int64_t>(freq.rbegin()->first,
                             static_cast<std::int64_t>(lambda + 20 * std::sqrt(lambda + 1)));
  for (std::int64_t k = 0; k <= top; ++k) {
    const double p = poisson_pmf(k, lambda);
    covered += p;
    auto it = freq.find(k);
    sum += std::abs((it == freq.end() ? 0.0 : it->second) - p);
  }
  sum += std::max(0.0, 1.0 - covered);  // Poisson mass beyond `top`
  return 0.5 * sum;
}

Interval bootstrap_ci(std::span<const double> x,
                      const std::function<double(std::span<const double>)>& stat,
                      int resamples, double level, std::uint64_t seed) {
  if (x.empty() || resamples < 1) {
    throw std::invalid_argument("bootstrap needs data and resamples");
  }
  Rng rng = make_rng(seed, Stream::kBootstrap, 0);
  std::vector<double> draw(x.size()), stats;
  stats.reserve(resamples);
  for (int r = 0; r < resamples; ++r) {
    for (double& d : draw) d = x[uniform_below(rng, x.size())];
    stats.push_back(stat(draw));
  }
  const double tail = (1.0 - level) / 2;
  return {quantile(stats, tail), quantile(stats, 1.0 - tail)};
}

}  // namespace circumlab
