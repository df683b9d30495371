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

#ifndef CIRCUMLAB_STATS_HPP_
#define CIRCUMLAB_STATS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace circumlab {

double mean(std::span<const double> x);
// Unbiased (n - 1) sample variance; 0 for fewer than two values.
double sample_variance(std::span<const double> x);
double sample_stddev(std::span<const double> x);
// Adjusted Fisher-Pearson skewness; 0 when the spread is 0.
double skewness(std::span<const double> x);
// Linear interpolation between order statistics, q in [0, 1].
double quantile(std::vector<double> x, double q);

double normal_cdf(double z);

// Sup distance between the empirical CDF of x, standardized by its own mean
// and standard deviation, and the standard normal CDF. Returns 1 when the
// sample has no spread.
double lilliefors_ks(std::span<const double> x);

double poisson_pmf(std::int64_t k, double lambda);
// Total variation distance between the empirical law of the (non-negative
// integer) sample and Poisson(lambda).
double tv_to_poisson(std::span<const std::int64_t> sample, double lambda);

struct Interval {
  double lo = 0;
  double hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Percentile bootstrap interval for stat(resample) at the given level.
Interval bootstrap_ci(std::span<const double> x,
                      const std::function<double(std::span<const double>)>& stat,
                      int resamples, double level, std::uint64_t seed);

}  // namespace circumlab

#endif  // CIRCUMLAB_STATS_HPP_
