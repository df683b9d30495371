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

#ifndef CIRCUMLAB_CYCLE_EXACT_HPP_
#define CIRCUMLAB_CYCLE_EXACT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circumlab/colouring.hpp"
#include "circumlab/graph.hpp"

namespace circumlab {

inline constexpr std::int64_t kDefaultCycleBudget = 100'000'000;

struct CycleResult {
  std::int64_t length = 0;     // 0 for forests
  std::vector<Vertex> witness;  // cycle in order, first vertex not repeated
  bool exact = true;
  std::int64_t expansions = 0;
};

// Longest cycle. Each 2-connected block is first tried with a rotation and
// extension search for a Hamilton cycle, then searched exactly by depth-first
// branch and bound. `budget` limits search node expansions over the whole
// call; running out returns the best cycle seen with exact = false.
CycleResult circumference(const GraphView& g,
                          std::int64_t budget = kDefaultCycleBudget);

// Witness is a simple cycle of g with `length` vertices.
CheckResult validate_cycle(const GraphView& g, const CycleResult& r);

// 2-connected blocks with at least three vertices, each sorted.
std::vector<VertexSet> cyclic_blocks(const GraphView& g);

struct CircumferenceAuditTrial {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;  // graph seed, reproduces the sample
  std::int64_t circumference = 0;
  std::int64_t l_tilde = 0;
  bool exact = true;
  bool too_large = false;  // a red-purple component exceeded the size cap
};

struct CircumferenceAuditReport {
  Vertex n = 0;
  double c = 0;
  std::int64_t trials = 0;
  std::int64_t agree = 0;
  std::int64_t inexact = 0;
  std::int64_t too_large = 0;
  bool above_log_regime = false;  // c > 2 ln n
  std::vector<CircumferenceAuditTrial> records;
  std::vector<CircumferenceAuditTrial> disagreements;  // exact trials with L != L~

  // agree / trials; empty when trials == 0.
  std::optional<double> fraction() const;
};

// Samples G(n, c/n) `trials` times and compares L with L~. Throws
// std::invalid_argument when c < 20. Inexact and capped trials never count as
// agreement.
CircumferenceAuditReport circumference_audit(Vertex n, double c, std::int64_t trials,
                                std::uint64_t seed, int threads = 1,
                                std::int64_t budget = kDefaultCycleBudget);

std::string circumference_audit_json(const CircumferenceAuditReport& report);

}  // namespace circumlab

#endif  // CIRCUMLAB_CYCLE_EXACT_HPP_
