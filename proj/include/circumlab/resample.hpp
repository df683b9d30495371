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

#ifndef CIRCUMLAB_RESAMPLE_HPP_
#define CIRCUMLAB_RESAMPLE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "circumlab/colouring.hpp"
#include "circumlab/graph.hpp"
#include "circumlab/path_cover.hpp"
#include "circumlab/rational.hpp"
#include "circumlab/stats.hpp"

namespace circumlab {

// Everything that changes between G+e and G-e for e = {u, v}. The "plus"
// side has the edge, the "minus" side does not.
struct FlipAnalysis {
  Vertex u = -1;
  Vertex v = -1;
  int k = 0;
  TriColouring colour_plus;
  TriColouring colour_minus;
  VertexSet w_plus;    // C_u u C_v in G+
  VertexSet w_minus;   // C_u u C_v in G-
  VertexSet w_star;    // W- u W+ u {u, v}
  VertexSet w_star_r;  // red vertices of W* on either side
  VertexSet d;         // phi - phi_k changes
  VertexSet d_tilde;   // phi_k changes
  VertexSet i_star;    // global red-purple component unchanged
  VertexSet i_star_k;  // local red-purple component unchanged
  std::vector<Fraction> phi_plus;
  std::vector<Fraction> phi_minus;
  std::vector<Fraction> phik_plus;
  std::vector<Fraction> phik_minus;
  // Vertices whose phi_k was not evaluated (FlipScope::kLemmas only). Their
  // phik entries are 0. Those within distance k of u or v are left out of d
  // and d_tilde; for the rest both sides agree on phi_k by locality.
  VertexSet local_skipped;
};

// kFull evaluates phi_k at every vertex. kLemmas skips phi_k inside the W set
// named by the case split of check (a) unless both W sets have fewer than k
// vertices; (b) and (c) only speak about the other vertices.
enum class FlipScope { kFull, kLemmas };

// Analyses many flips of one base graph. Colouring, phi and local results of
// the base graph are computed once and reused for the side equal to it.
class FlipAnalyzer {
 public:
  // Throws std::invalid_argument when k < 1.
  FlipAnalyzer(const Graph& g, int k, int size_cap = kDefaultSizeCap,
               FlipScope scope = FlipScope::kFull);
  ~FlipAnalyzer();
  FlipAnalyzer(const FlipAnalyzer&) = delete;
  FlipAnalyzer& operator=(const FlipAnalyzer&) = delete;

  // `g` may or may not contain {u, v}; both sides are formed from it.
  // Throws std::invalid_argument when u == v, std::out_of_range for bad ids.
  // Propagates ComponentTooLarge.
  FlipAnalysis analyze(Vertex u, Vertex v);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

FlipAnalysis analyze_flip(const Graph& g, Vertex u, Vertex v, int k,
                          int size_cap = kDefaultSizeCap,
                          FlipScope scope = FlipScope::kFull);

struct FlipViolation {
  std::string lemma;  // "a" .. "g"
  std::string detail;
  VertexSet witness;
};

// First failed assertion among (a)..(g), or nothing. `g` is the graph the
// analysis was built from.
//   a  nested cores, nested red sets and nested W sets per the case split
//   b  D and D~ inside the larger W; everything outside it indifferent
//   c  D empty when both W sets are smaller than k
//   d  G+[W*] connected
//   e  red vertices of W* have all neighbours in W*
//   f  4 |W*_R| >= |W*| - 2
//   g  phi unchanged on I*, phi_k unchanged on I*_k
std::optional<FlipViolation> check_flip_lemmas(const Graph& g,
                                               const FlipAnalysis& fa);

// {"seed", "edge", "lemma", "detail", "witness"}.
std::string flip_violation_json(const FlipViolation& violation,
                                std::uint64_t trial_seed, Edge edge);

struct FlipLemmaReport {
  struct Record {
    std::uint64_t seed = 0;  // graph seed
    Edge edge;
    FlipViolation violation;
  };
  Vertex n = 0;
  double c = 0;
  int k = 0;
  std::int64_t flips = 0;
  std::int64_t checked = 0;
  std::int64_t too_large = 0;
  std::int64_t skipped_vertices = 0;  // summed local_skipped sizes
  std::vector<Record> violations;

  bool pass() const { return checked == flips && violations.empty(); }
};

// Runs check_flip_lemmas on `flips` uniform random pairs, drawing a fresh
// G(n, c/n) every `flips_per_graph` flips. Uses FlipScope::kLemmas.
FlipLemmaReport flip_lemma_audit(Vertex n, double c, int k, std::int64_t flips,
                                 std::uint64_t seed, int threads = 1,
                                 std::int64_t flips_per_graph = 100,
                                 int size_cap = kDefaultSizeCap);

std::string flip_lemma_json(const FlipLemmaReport& r);

struct EfronSteinReport {
  Vertex n = 0;
  double c = 0;
  int k = 0;
  std::int64_t trials = 0;
  int flips_per_trial = 0;
  double p = 0;
  // Var(L~_k) against 2 p (1 - p) n^2 E|D~|^2.
  double lhs = 0;
  double rhs = 0;
  Interval lhs_ci;
  Interval rhs_ci;
  // Same for L~ - L~_k against E|D|^2.
  double diff_lhs = 0;
  double diff_rhs = 0;
  Interval diff_lhs_ci;
  Interval diff_rhs_ci;
  std::int64_t too_large = 0;  // trials dropped for ComponentTooLarge

  // The lower end of the left interval does not exceed the upper end of the
  // right one.
  bool pass() const { return lhs_ci.lo <= rhs_ci.hi; }
  bool diff_pass() const { return diff_lhs_ci.lo <= diff_rhs_ci.hi; }
};

// Trial t samples G_t, records L~_k(G_t) and L~(G_t) - L~_k(G_t), and
// averages |D~|^2 and |D|^2 over `flips_per_trial` uniform pairs of G_t.
// Needs trials >= 2 and flips_per_trial >= 1.
EfronSteinReport efron_stein_audit(Vertex n, double c, int k,
                                   std::int64_t trials, std::uint64_t seed,
                                   int threads = 1, int bootstrap = 1000,
                                   int flips_per_trial = 100);

std::string efron_stein_json(const EfronSteinReport& r);

struct StarIdentityResult {
  BigRational l_tilde_k_h;       // L~_k(H)
  BigRational l_tilde_k_h_star;  // L~_k(H*)
  std::int64_t y = 0;            // stars of H[A, B] with >= 2 edges
  bool holds() const { return l_tilde_k_h == l_tilde_k_h_star + y; }
};

// Throws std::invalid_argument when k < 2 or (h, a, b) lacks property P.
StarIdentityResult star_identity_check(const GraphView& h, const VertexSet& a,
                                       const VertexSet& b, int k,
                                       int size_cap = kDefaultSizeCap);

struct CoreUpdateResult {
  VertexSet a_prime;  // vertices of A with degree >= 4 in H
  VertexSet b_prime;  // N_H(A \ A')
  bool s_ok = false;  // S(H) = (S(H*) \ B') u A'
  bool p_ok = false;  // P(H) = P(H*) u B'
  bool r_ok = false;  // R(H) = R(H*) \ A'
  bool holds() const { return s_ok && p_ok && r_ok; }
};

// Throws std::invalid_argument when (h, a, b) lacks property P.
CoreUpdateResult core_update_check(const GraphView& h, const VertexSet& a,
                                   const VertexSet& b);

struct PInstance {
  Graph h;
  VertexSet a;
  VertexSet b;
};

// Host: side x side triangular torus (6-regular, side >= 5) with each edge
// deleted independently with probability `thinning`. B is a greedy
// 5-separated set of robust candidates, A is `a_count` fresh vertices, and
// each a in A becomes the centre of a star to min_star..max_star unused B
// vertices (fewer once B runs out). Throws std::logic_error if the result
// lacks property P.
PInstance generate_p_instance(Vertex side, double thinning, Vertex a_count,
                              int min_star, int max_star, std::uint64_t seed);

}  // namespace circumlab

#endif  // CIRCUMLAB_RESAMPLE_HPP_
