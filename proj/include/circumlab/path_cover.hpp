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

#ifndef CIRCUMLAB_PATH_COVER_HPP_
#define CIRCUMLAB_PATH_COVER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "circumlab/colouring.hpp"
#include "circumlab/graph.hpp"
#include "circumlab/rational.hpp"

namespace circumlab {

inline constexpr int kDefaultSizeCap = 64;

// Minimum number of vertices outside W left uncovered by vertex-disjoint
// paths whose endpoints lie in W, with one optimal family of such paths.
// Single W vertices appear as one-vertex paths.
struct PathCoverResult {
  std::int64_t uncovered = 0;
  std::vector<std::vector<Vertex>> witness;
};

// Raised when the exponential part of the search would exceed the cap.
class ComponentTooLarge : public std::runtime_error {
 public:
  ComponentTooLarge(std::int64_t size, std::int64_t cap,
                    std::int64_t component = -1);
  std::int64_t size() const { return size_; }
  std::int64_t cap() const { return cap_; }
  std::int64_t component() const { return component_; }
  ComponentTooLarge with_component(std::int64_t component) const {
    return ComponentTooLarge(size_, cap_, component);
  }

 private:
  std::int64_t size_;
  std::int64_t cap_;
  std::int64_t component_;
};

// Exact uc(h; w). Pendant trees are folded by dynamic programming, chains of
// the 2-core are compressed, and the remaining kernel is searched by branch
// and bound. `size_cap` bounds the number of kernel chains; components with
// at most one W vertex or no cycles never hit the cap.
PathCoverResult uc_exact(const Graph& h, const VertexSet& w,
                         int size_cap = kDefaultSizeCap);

// Enumerates every edge subset; |E(h)| <= 20.
std::int64_t uc_bruteforce(const Graph& h, const VertexSet& w);

// Structural re-check of a witness: disjoint simple paths along edges of h,
// endpoints in w, and `uncovered` consistent with the covered set.
CheckResult validate_witness(const Graph& h, const VertexSet& w,
                             const PathCoverResult& result);

// Global functional over the components of G[P u R].
struct PhiBreakdown {
  Vertex n = 0;
  std::int64_t phi_total = 0;
  std::vector<Fraction> per_vertex;              // 0 on sapphire vertices
  std::vector<VertexSet> components;             // red-purple components
  std::vector<std::int64_t> per_component;       // uc of each component
  std::vector<std::int32_t> component_of;        // -1 on sapphire vertices

  std::int64_t l_tilde() const { return n - phi_total; }
};

PhiBreakdown phi_global(const GraphView& g, const TriColouring& col,
                        int size_cap = kDefaultSizeCap);

// JSON object with phi_total, l_tilde, per_component and per_vertex entries.
std::string phi_breakdown_json(const PhiBreakdown& phi);

// Local share for the centre of an already coloured ball.
Fraction phi_local(const BallGraph& ball, const LocalColouring& local,
                   int size_cap = kDefaultSizeCap);
// Throws std::invalid_argument when k < 1.
Fraction phi_local(const GraphView& g, Vertex v, int k,
                   int size_cap = kDefaultSizeCap);

}  // namespace circumlab

#endif  // CIRCUMLAB_PATH_COVER_HPP_
