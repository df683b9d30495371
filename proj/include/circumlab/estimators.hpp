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

#ifndef CIRCUMLAB_ESTIMATORS_HPP_
#define CIRCUMLAB_ESTIMATORS_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "circumlab/graph.hpp"
#include "circumlab/path_cover.hpp"
#include "circumlab/rational.hpp"

namespace circumlab {

// Sentinel for a tree-size threshold too large to represent.
inline constexpr std::int64_t kUnboundedTruncation =
    std::numeric_limits<std::int64_t>::max();

// (10ck)^(2k), saturating to kUnboundedTruncation.
std::int64_t standard_truncation(double c, int k);

// n - Phi(G).
std::int64_t l_tilde(const GraphView& g, int size_cap = kDefaultSizeCap);

enum class LocalSum {
  kSkipGlobalSapphire,  // phi_k vanishes on S(G), so those balls are skipped
  kExhaustive,
};

// n - sum over v of phi_k(v).
BigRational l_tilde_k(const GraphView& g, int k,
                      int size_cap = kDefaultSizeCap,
                      LocalSum mode = LocalSum::kSkipGlobalSapphire);

// Sum over v of (1 - phi_k(v)) restricted to vertices whose induced k-ball is
// a tree on at most `truncation` vertices.
BigRational l_hat_k(const GraphView& g, int k, std::int64_t truncation,
                    int size_cap = kDefaultSizeCap);

// Tests whether G[B(v,k)] is a tree on at most `max_size` vertices, stopping
// as soon as either condition fails. Reusable across vertices of one graph.
class BallTreeProbe {
 public:
  explicit BallTreeProbe(Vertex n) : stamp_of_(n, 0), parent_(n, -1) {}
  bool small_tree(const GraphView& g, Vertex v, int k, std::int64_t max_size);

 private:
  std::vector<std::uint32_t> stamp_of_;
  std::vector<Vertex> parent_;
  std::uint32_t stamp_ = 0;
  std::vector<std::pair<Vertex, int>> queue_;
};

struct ProxyValues {
  std::int64_t l_tilde = 0;
  BigRational l_tilde_k;
  BigRational l_hat_k;
  int k = 0;
  std::int64_t truncation = kUnboundedTruncation;
};

ProxyValues compute_proxies(const GraphView& g, int k,
                            std::int64_t truncation,
                            int size_cap = kDefaultSizeCap);

// AHU code: "()" for a leaf, otherwise "(" + sorted child codes + ")".
// Throws std::invalid_argument unless t is a tree containing r.
std::string canonical_rooted_tree(const GraphView& t, Vertex r);

struct RootedTreeClass {
  std::string canonical_code;
  std::int64_t size = 0;
  Fraction alpha;  // 1 - phi_k of the root, computed on the tree itself
  std::int64_t count = 0;
};

// Vertices grouped by the isomorphism class of their k-ball, restricted to
// balls that are trees with at most `truncation` vertices. Keyed by code.
std::map<std::string, RootedTreeClass> neighbourhood_census(
    const GraphView& g, int k, std::int64_t truncation,
    int size_cap = kDefaultSizeCap);

// Sum of count * alpha over the census.
BigRational census_weighted_sum(
    const std::map<std::string, RootedTreeClass>& census);

// canonical_code,size,alpha_num,alpha_den,count
void write_census_csv(std::ostream& out,
                      const std::map<std::string, RootedTreeClass>& census);

}  // namespace circumlab

#endif  // CIRCUMLAB_ESTIMATORS_HPP_
