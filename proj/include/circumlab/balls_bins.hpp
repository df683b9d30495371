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

#ifndef CIRCUMLAB_BALLS_BINS_HPP_
#define CIRCUMLAB_BALLS_BINS_HPP_

#include <cstdint>
#include <string>

#include "circumlab/rational.hpp"

namespace circumlab {

// m balls thrown independently and uniformly into N bins; Z counts bins
// holding at least two balls.
struct OccupancyParams {
  std::int64_t bins = 1;
  std::int64_t balls = 0;
  std::int64_t trials = 2;
  std::uint64_t seed = 0;
};

// (1 + x) e^-x - ((1 + x)^2 + x^3) e^-2x. Throws std::invalid_argument for
// x < 0 or NaN.
double h(double x);

inline constexpr std::int64_t kMaxEnumeration = 10'000'000;

// Exact Var(Z) over all N^m assignments. Throws std::invalid_argument when
// bins < 1, balls < 0 or N^m > kMaxEnumeration.
Fraction var_z_exact(std::int64_t bins, std::int64_t balls);

struct OccupancyEstimate {
  double mean = 0;
  double variance = 0;  // unbiased sample variance of Z
  double std_error = 0;  // of `variance`, from the sample fourth moment
};

// Trial t uses make_rng(seed, kBins, t). Throws std::invalid_argument when
// trials < 2, bins < 1 or balls < 0.
OccupancyEstimate simulate_var_z(const OccupancyParams& params,
                                 int threads = 1);

std::string occupancy_json(const OccupancyParams& params,
                           const OccupancyEstimate& est);

}  // namespace circumlab

#endif  // CIRCUMLAB_BALLS_BINS_HPP_
