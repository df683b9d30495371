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

#ifndef CIRCUMLAB_REVEAL_HPP_
#define CIRCUMLAB_REVEAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

// Two-round edge revealing process on G = G1 u G2, G1 ~ G(n, p1),
// G2 ~ G(n, p2) with p2 = p2_scale / n and (1 - p) = (1 - p1)(1 - p2),
// p = c / n. Every access to G1 and G2 goes through a logged oracle.
struct RevealOutcome {
  Vertex n = 0;
  double c = 0;
  double p2_scale = 0;
  VertexSet a0, a1, a2, a3, a4;
  VertexSet b0, b1, b2, b3, b3_minus, b4;
  std::int64_t m = 0;                // |E(G2[A4, B4])|, revealed as a count
  std::vector<Edge> revealed_edges;  // sorted
  std::int64_t iterations = 0;       // passes of the stabilization loop
  std::int64_t g_edges = 0;          // |E(G)|
  std::int64_t g2_edges = 0;         // |E(G2)|

  // Structural re-verification against the true G.
  bool r1_property_p = false;      // (G, A4, B4) has property P
  std::string r1_detail;           // failing rule, if any
  bool r2_no_g1_cross = false;     // E(G1[A4, B4]) empty
  bool r3_edges = false;           // revealed edges = E(G) minus E(A4, B4)
  bool r3_queries = false;         // no edge query touched a pair of A4 x B4
  std::int64_t unrevealed = 0;     // edges of G - E(A4, B4) never revealed
  std::int64_t over_revealed = 0;  // revealed edges inside E(A4, B4)

  bool verified() const {
    return r1_property_p && r2_no_g1_cross && r3_edges && r3_queries;
  }
};

// Throws std::invalid_argument unless n >= 2, 0 <= c <= n and
// 0 < p2_scale <= c. Throws std::runtime_error if the stabilization loop
// runs more than n passes. G1 uses stream kGraph, G2 stream kReveal.
RevealOutcome edge_reveal(Vertex n, double c, double p2_scale,
                          std::uint64_t seed);

// The same process on given rounds G1 and G2 (same vertex count). c and
// p2_scale are only recorded.
RevealOutcome edge_reveal(const Graph& g1, const Graph& g2, double c = 0,
                          double p2_scale = 0);

// Sizes, m, the verification flags and iteration count (no vertex lists).
std::string reveal_json(const RevealOutcome& r);

}  // namespace circumlab

#endif  // CIRCUMLAB_REVEAL_HPP_
