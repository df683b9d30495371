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

#ifndef CIRCUMLAB_COLOURING_HPP_
#define CIRCUMLAB_COLOURING_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

// Sapphire / purple / red partition of V(G) produced by the global peel.
struct TriColouring {
  VertexSet s;
  VertexSet p;
  VertexSet r;
  std::vector<Vertex> peel_order;  // red vertices in the order they turned red

  friend bool operator==(const TriColouring&, const TriColouring&) = default;
};

enum class PeelTieBreak { kSmallestId, kLargestId };

// Repeatedly colours red a sapphire or purple vertex with fewer than four
// sapphire neighbours and turns its sapphire neighbours purple. The final
// partition does not depend on the tie-break; only peel_order does.
TriColouring global_colouring(const GraphView& g,
                              PeelTieBreak tie = PeelTieBreak::kSmallestId);

// Union of all A with: every x in A or N(A) has >= 4 neighbours in A.
// Exhaustive over subsets; n <= 16.
VertexSet brute_force_strong_core(const GraphView& g);

// The ball B(v, k) as a standalone graph. Local ids follow BFS order from the
// centre, so the centre is local vertex 0.
struct BallGraph {
  Graph graph;
  std::vector<Vertex> to_global;
  std::vector<int> depth;
  int radius = 0;
};

// Extracts balls from one host graph repeatedly without O(n) work per call.
class BallExtractor {
 public:
  explicit BallExtractor(Vertex n) : bfs_(n), local_(n, -1) {}
  BallGraph extract(const GraphView& g, Vertex v, int k);

 private:
  BfsWorkspace bfs_;
  std::vector<Vertex> local_;
};

BallGraph extract_ball(const GraphView& g, Vertex v, int k);
// Treats a whole graph as the ball of radius k around `root`; vertices beyond
// distance k are dropped.
BallGraph ball_of_tree(const Graph& t, Vertex root, int k);

// Local colouring of B(v, k). All sets are in the ids of whatever graph the
// ball was taken from.
struct LocalColouring {
  Vertex center = -1;
  int radius = 0;
  VertexSet s_k;
  VertexSet p_k;
  VertexSet r_k;
  VertexSet component;  // C_v^k, empty when v is locally sapphire
};

// How the purple set of a local colouring is read off.
//   kProcess: vertices left purple when the local peel stops.
//   kFormula: N(S_k minus the sphere) minus the sphere. This misses purple
//             vertices whose sapphire neighbours all lie on the sphere.
enum class LocalPurple { kProcess, kFormula };

// Runs the local peel on an extracted ball. Sets use local ids.
LocalColouring local_colouring(const BallGraph& ball,
                               LocalPurple rule = LocalPurple::kProcess);
// Convenience form in host ids. Throws std::invalid_argument when k < 1.
LocalColouring local_colouring(const GraphView& g, Vertex v, int k,
                               LocalPurple rule = LocalPurple::kProcess);

// Plain k-core by peeling.
VertexSet k_core(const GraphView& g, int k);

// Outcome of a structural predicate. `rule` names the first failed clause.
struct CheckResult {
  bool ok = true;
  std::string rule;
  Vertex witness = -1;
  std::string detail;

  explicit operator bool() const { return ok; }
  static CheckResult fail(std::string rule, Vertex witness,
                          std::string detail) {
    return {false, std::move(rule), witness, std::move(detail)};
  }
};

// RS1: every x in B or N(B) has {x} and N(x) inside S(h) and degree >= 5.
// RS2: distinct vertices of B are at distance >= 5.
CheckResult robust_sapphire_check(const GraphView& h, const VertexSet& b);
// Same, reusing an already computed S(h).
CheckResult robust_sapphire_check(const GraphView& h, const VertexSet& b,
                                  const VertexSet& sapphire);

// h minus all edges with one end in a and the other in b.
Graph remove_cross_edges(const GraphView& h, const VertexSet& a,
                         const VertexSet& b);

// P1 no edges inside a or inside b; P2 each vertex of b has at most one
// neighbour in a; P3 a is isolated once E(a, b) is removed; P4 b is robustly
// sapphire in that graph. Throws std::invalid_argument when a and b overlap.
CheckResult property_P_check(const GraphView& h, const VertexSet& a,
                             const VertexSet& b);

// Greedy subset of `candidates` (taken in increasing id order) whose members
// are pairwise at distance >= 5.
VertexSet greedy_separated(const GraphView& g, const VertexSet& candidates);

// Vertices b with {x} and N(x) inside `sapphire` and deg(x) >= 5 for every
// x in N[b].
VertexSet robust_candidates(const GraphView& g, const VertexSet& sapphire);

// "S: ...", "P: ...", "R: ..." lines.
void write_tri_colouring(std::ostream& out, const TriColouring& col);
TriColouring read_tri_colouring(std::istream& in);

}  // namespace circumlab

#endif  // CIRCUMLAB_COLOURING_HPP_
