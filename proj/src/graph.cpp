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

#include "circumlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "circumlab/rng.hpp"

namespace circumlab {

Graph::Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("self loop at " + std::to_string(u));
    }
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  neighbours_.resize(offsets_[n]);
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbours_[fill[u]++] = v;
    neighbours_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = neighbours_.begin() + offsets_[v];
    auto last = neighbours_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at vertex " +
                                  std::to_string(v));
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(neighbours_.size() / 2);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphView Graph::view() const { return GraphView(*this); }
Graph::operator GraphView() const { return GraphView(*this); }

bool GraphView::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph GraphView::materialize() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return Graph(num_vertices(), out);
}

FlipPair::FlipPair(const Graph& base, Vertex u, Vertex v)
    : base_(&base), u_(std::min(u, v)), v_(std::max(u, v)) {
  if (u == v) throw std::invalid_argument("flip needs two distinct vertices");
  if (u_ < 0 || v_ >= base.num_vertices()) {
    throw std::invalid_argument("flip vertex out of range");
  }
  base_has_edge_ = base.has_edge(u_, v_);
  auto with = [](std::span<const Vertex> nb, Vertex x) {
    std::vector<Vertex> out(nb.begin(), nb.end());
    auto it = std::lower_bound(out.begin(), out.end(), x);
    if (it == out.end() || *it != x) out.insert(it, x);
    return out;
  };
  auto without = [](std::span<const Vertex> nb, Vertex x) {
    std::vector<Vertex> out(nb.begin(), nb.end());
    auto it = std::lower_bound(out.begin(), out.end(), x);
    if (it != out.end() && *it == x) out.erase(it);
    return out;
  };
  lists_[0] = with(base.neighbours(u_), v_);
  lists_[1] = with(base.neighbours(v_), u_);
  lists_[2] = without(base.neighbours(u_), v_);
  lists_[3] = without(base.neighbours(v_), u_);
  plus_ = GraphView(base);
  plus_.override_vertex_[0] = u_;
  plus_.override_vertex_[1] = v_;
  plus_.override_list_[0] = lists_[0];
  plus_.override_list_[1] = lists_[1];
  plus_.edge_delta_ = base_has_edge_ ? 0 : 1;
  minus_ = GraphView(base);
  minus_.override_vertex_[0] = u_;
  minus_.override_vertex_[1] = v_;
  minus_.override_list_[0] = lists_[2];
  minus_.override_list_[1] = lists_[3];
  minus_.edge_delta_ = base_has_edge_ ? -1 : 0;
}

Graph sample_gnp_p(Vertex n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  if (p == 0.0 || n == 1) return Graph(n);
  if (p == 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return Graph(n, edges);
  }
  // Geometric skipping over pairs (w, v), w < v, in row order.
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  const double expected = p * 0.5 * static_cast<double>(n) * (n - 1);
  edges.reserve(static_cast<std::size_t>(expected * 1.05 + 16));
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = uniform01(rng);
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip > 4.0e18) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

Graph sample_gnp(const GnpParams& params) {
  if (params.n < 1) throw std::invalid_argument("sample_gnp: n must be >= 1");
  if (!(params.c >= 0.0)) {
    throw std::invalid_argument("sample_gnp: c must be >= 0");
  }
  if (params.c > params.n) {
    throw std::invalid_argument("sample_gnp: c > n gives p > 1");
  }
  return sample_gnp_p(params.n, params.c / params.n, params.seed);
}

const std::vector<std::pair<Vertex, int>>& BfsWorkspace::run(
    const GraphView& g, Vertex v, int k) {
  const Vertex src[1] = {v};
  return run(g, std::span<const Vertex>(src, 1), k);
}

const std::vector<std::pair<Vertex, int>>& BfsWorkspace::run(
    const GraphView& g, std::span<const Vertex> sources, int k) {
  if (++stamp_ == 0) {
    std::fill(stamp_of_.begin(), stamp_of_.end(), 0);
    stamp_ = 1;
  }
  order_.clear();
  for (Vertex s : sources) {
    if (stamp_of_[s] == stamp_) continue;
    stamp_of_[s] = stamp_;
    depth_[s] = 0;
    order_.emplace_back(s, 0);
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const auto [x, d] = order_[head];
    if (d >= k) continue;
    for (Vertex y : g.neighbours(x)) {
      if (stamp_of_[y] == stamp_) continue;
      stamp_of_[y] = stamp_;
      depth_[y] = d + 1;
      order_.emplace_back(y, d + 1);
    }
  }
  return order_;
}

VertexSet ball(const GraphView& g, Vertex v, int k) {
  if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("ball: vertex");
  if (k < 0) throw std::invalid_argument("ball: negative radius");
  BfsWorkspace ws(g.num_vertices());
  VertexSet out;
  for (const auto& [x, d] : ws.run(g, v, k)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet sphere(const GraphView& g, Vertex v, int k) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::out_of_range("sphere: vertex");
  }
  if (k < 0) throw std::invalid_argument("sphere: negative radius");
  BfsWorkspace ws(g.num_vertices());
  VertexSet out;
  for (const auto& [x, d] : ws.run(g, v, k)) {
    if (d == k) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bfs_depths(const GraphView& g, Vertex v, int max_depth) {
  const Vertex src[1] = {v};
  return bfs_depths(g, std::span<const Vertex>(src, 1), max_depth);
}

std::vector<int> bfs_depths(const GraphView& g, std::span<const Vertex> sources,
                            int max_depth) {
  std::vector<int> depth(g.num_vertices(), -1);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (depth[s] == 0) continue;
    depth[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (depth[x] >= max_depth) continue;
    for (Vertex y : g.neighbours(x)) {
      if (depth[y] != -1) continue;
      depth[y] = depth[x] + 1;
      queue.push_back(y);
    }
  }
  return depth;
}

std::vector<VertexSet> components(const GraphView& g,
                                  std::span<const Vertex> subset) {
  // 0 = outside subset, 1 = unvisited member, 2 = visited.
  std::vector<char> state(g.num_vertices(), 0);
  for (Vertex v : subset) state[v] = 1;
  VertexSet ordered(subset.begin(), subset.end());
  std::sort(ordered.begin(), ordered.end());
  std::vector<VertexSet> blocks;
  for (Vertex root : ordered) {
    if (state[root] != 1) continue;
    VertexSet block{root};
    state[root] = 2;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (Vertex y : g.neighbours(block[head])) {
        if (state[y] != 1) continue;
        state[y] = 2;
        block.push_back(y);
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Graph induced_subgraph(const GraphView& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex y : g.neighbours(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), y);
      if (it == vertices.end() || *it != y) continue;
      const auto j = static_cast<std::size_t>(it - vertices.begin());
      if (i < j) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(static_cast<Vertex>(vertices.size()), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw std::runtime_error("edge list: missing header");
  long long n = -1, m = -1;
  {
    std::istringstream ss(line);
    if (!(ss >> n >> m) || n < 0 || m < 0) {
      throw std::runtime_error("edge list: bad header at line " +
                               std::to_string(line_no));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, found " + std::to_string(i));
    }
    std::istringstream ss(line);
    long long u, v;
    std::string rest;
    if (!(ss >> u >> v) || (ss >> rest) || u < 0 || v < 0 || u >= n ||
        v >= n) {
      throw std::runtime_error("edge list: bad edge at line " +
                               std::to_string(line_no));
    }
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)),
                       static_cast<Vertex>(std::max(u, v)));
  }
  if (next_line()) {
    throw std::runtime_error("edge list: trailing data at line " +
                             std::to_string(line_no));
  }
  try {
    return Graph(static_cast<Vertex>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  try {
    return read_edge_list(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<char> to_mask(Vertex n, std::span<const Vertex> s) {
  std::vector<char> mask(n, 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

VertexSet from_mask(const std::vector<char>& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet neighbourhood(const GraphView& g, const VertexSet& a) {
  std::vector<char> in_a = to_mask(g.num_vertices(), a);
  std::vector<char> hit(g.num_vertices(), 0);
  for (Vertex x : a) {
    for (Vertex y : g.neighbours(x)) {
      if (!in_a[y]) hit[y] = 1;
    }
  }
  return from_mask(hit);
}

}  // namespace circumlab
