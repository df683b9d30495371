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

#ifndef CIRCUMLAB_GRAPH_HPP_
#define CIRCUMLAB_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace circumlab {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free
using Edge = std::pair<Vertex, Vertex>;  // first < second

class GraphView;

// Immutable simple undirected graph in compressed sparse row form. Vertex
// ids are dense in [0, n). Neighbour lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  // Builds from an arbitrary edge list; self loops and duplicates are
  // rejected with std::invalid_argument.
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(neighbours_.size()) / 2;
  }
  std::span<const Vertex> neighbours(Vertex v) const {
    return {neighbours_.data() + offsets_[v],
            neighbours_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  GraphView view() const;
  operator GraphView() const;  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ &&
           a.neighbours_ == b.neighbours_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> neighbours_;
};

// Non-owning adjacency view over a Graph. Up to two vertices may have their
// neighbour lists replaced, which is how single-edge flips are represented
// without copying the base graph.
class GraphView {
 public:
  GraphView() = default;
  explicit GraphView(const Graph& base) : base_(&base) {}

  Vertex num_vertices() const { return base_->num_vertices(); }
  std::int64_t num_edges() const { return base_->num_edges() + edge_delta_; }
  std::span<const Vertex> neighbours(Vertex v) const {
    if (v == override_vertex_[0]) return override_list_[0];
    if (v == override_vertex_[1]) return override_list_[1];
    return base_->neighbours(v);
  }
  int degree(Vertex v) const {
    return static_cast<int>(neighbours(v).size());
  }
  bool has_edge(Vertex u, Vertex v) const;
  const Graph& base() const { return *base_; }

  // Copies the view into an owning graph.
  Graph materialize() const;

 private:
  friend class FlipPair;
  const Graph* base_ = nullptr;
  Vertex override_vertex_[2] = {-1, -1};
  std::span<const Vertex> override_list_[2];
  int edge_delta_ = 0;
};

// G + e and G - e for a single vertex pair e = {u, v}. Both views share the
// base adjacency; only the lists of u and v are held separately.
class FlipPair {
 public:
  FlipPair(const Graph& base, Vertex u, Vertex v);
  FlipPair(const FlipPair&) = delete;
  FlipPair& operator=(const FlipPair&) = delete;

  const Graph& base() const { return *base_; }
  Edge edge() const { return {u_, v_}; }
  bool base_has_edge() const { return base_has_edge_; }
  const GraphView& plus() const { return plus_; }
  const GraphView& minus() const { return minus_; }

 private:
  const Graph* base_;
  Vertex u_, v_;
  bool base_has_edge_;
  std::vector<Vertex> lists_[4];  // plus(u), plus(v), minus(u), minus(v)
  GraphView plus_;
  GraphView minus_;
};

// Parameters of G(n, c/n).
struct GnpParams {
  Vertex n = 1;
  double c = 0.0;
  std::uint64_t seed = 0;
};

// Samples G(n, c/n) by geometric skipping over the lexicographic pair order.
// Deterministic in (n, c, seed). Throws std::invalid_argument if c > n,
// c < 0 or n < 1.
Graph sample_gnp(const GnpParams& params);
// Same, with an explicit edge probability in [0, 1].
Graph sample_gnp_p(Vertex n, double p, std::uint64_t seed);

// Reusable scratch for repeated small BFS runs on one large graph. Marks are
// reset by bumping a stamp, so a run costs O(ball size) not O(n).
class BfsWorkspace {
 public:
  explicit BfsWorkspace(Vertex n) : stamp_of_(n, 0), depth_(n, 0) {}

  // Vertices of B(v, k) in BFS order, paired with their distance from v.
  const std::vector<std::pair<Vertex, int>>& run(const GraphView& g, Vertex v,
                                                  int k);
  // Same from a set of sources at distance 0.
  const std::vector<std::pair<Vertex, int>>& run(
      const GraphView& g, std::span<const Vertex> sources, int k);
  // Distance of x in the last run, or -1 if x was not reached.
  int depth(Vertex x) const {
    return stamp_of_[x] == stamp_ ? depth_[x] : -1;
  }

 private:
  std::vector<std::uint32_t> stamp_of_;
  std::vector<int> depth_;
  std::uint32_t stamp_ = 0;
  std::vector<std::pair<Vertex, int>> order_;
};

// Closed ball {y : dist(v, y) <= k}, sorted.
VertexSet ball(const GraphView& g, Vertex v, int k);
// Sphere {y : dist(v, y) = k}, sorted.
VertexSet sphere(const GraphView& g, Vertex v, int k);
// Distances from v up to max_depth; -1 beyond. Size n.
std::vector<int> bfs_depths(const GraphView& g, Vertex v, int max_depth);
// Multi-source BFS distances, -1 beyond max_depth.
std::vector<int> bfs_depths(const GraphView& g, std::span<const Vertex> sources,
                            int max_depth);

// Connected components of g[subset]. Blocks are sorted and ordered by their
// smallest vertex.
std::vector<VertexSet> components(const GraphView& g,
                                  std::span<const Vertex> subset);

// Induced subgraph on `vertices` (sorted); local id i maps to vertices[i].
Graph induced_subgraph(const GraphView& g, std::span<const Vertex> vertices);

// Edge-list text format: header "n m", then one "u v" per line.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
void save_edge_list(const std::string& path, const Graph& g);
Graph load_edge_list(const std::string& path);

// Set helpers over sorted vertex sets.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);
std::vector<char> to_mask(Vertex n, std::span<const Vertex> s);
VertexSet from_mask(const std::vector<char>& mask);
// External neighbourhood N(A) = {x not in A : x adjacent to A}.
VertexSet neighbourhood(const GraphView& g, const VertexSet& a);

}  // namespace circumlab

#endif  // CIRCUMLAB_GRAPH_HPP_
