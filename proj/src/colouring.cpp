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

#include "circumlab/colouring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace circumlab {
namespace {

enum Colour : std::uint8_t { kSapphire = 0, kPurple = 1, kRed = 2 };

// Shared peel. `frozen[x]` vertices stay sapphire and are never recoloured.
// Returns per-vertex colours and fills `order`.
template <typename Adj, typename Cmp>
std::vector<std::uint8_t> peel(Vertex n, const Adj& adj,
                               const std::vector<char>* frozen,
                               std::vector<Vertex>& order) {
  std::vector<std::uint8_t> colour(n, kSapphire);
  std::vector<int> sapphire_nbrs(n);
  std::vector<char> queued(n, 0);
  std::priority_queue<Vertex, std::vector<Vertex>, Cmp> heap;
  auto movable = [&](Vertex x) { return frozen == nullptr || !(*frozen)[x]; };
  for (Vertex x = 0; x < n; ++x) {
    sapphire_nbrs[x] = static_cast<int>(adj(x).size());
    if (sapphire_nbrs[x] < 4 && movable(x)) {
      queued[x] = 1;
      heap.push(x);
    }
  }
  auto lose_sapphire = [&](Vertex y) {
    for (Vertex z : adj(y)) {
      if (--sapphire_nbrs[z] < 4 && !queued[z] && colour[z] != kRed &&
          movable(z)) {
        queued[z] = 1;
        heap.push(z);
      }
    }
  };
  while (!heap.empty()) {
    const Vertex x = heap.top();
    heap.pop();
    if (colour[x] == kRed) continue;
    const bool was_sapphire = colour[x] == kSapphire;
    colour[x] = kRed;
    order.push_back(x);
    if (was_sapphire) lose_sapphire(x);
    for (Vertex y : adj(x)) {
      if (colour[y] == kSapphire && movable(y)) {
        colour[y] = kPurple;
        lose_sapphire(y);
      }
    }
  }
  return colour;
}

}  // namespace

TriColouring global_colouring(const GraphView& g, PeelTieBreak tie) {
  const Vertex n = g.num_vertices();
  auto adj = [&g](Vertex x) { return g.neighbours(x); };
  TriColouring out;
  std::vector<std::uint8_t> colour =
      tie == PeelTieBreak::kSmallestId
          ? peel<decltype(adj), std::greater<Vertex>>(n, adj, nullptr,
                                                      out.peel_order)
          : peel<decltype(adj), std::less<Vertex>>(n, adj, nullptr,
                                                   out.peel_order);
  for (Vertex x = 0; x < n; ++x) {
    switch (colour[x]) {
      case kSapphire: out.s.push_back(x); break;
      case kPurple: out.p.push_back(x); break;
      default: out.r.push_back(x); break;
    }
  }
  return out;
}

VertexSet brute_force_strong_core(const GraphView& g) {
  const Vertex n = g.num_vertices();
  if (n > 16) {
    throw std::invalid_argument("brute_force_strong_core: n > 16");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.neighbours(x)) adj[x] |= 1u << y;
  }
  std::uint32_t core = 0;
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    std::uint32_t closed = a;
    for (Vertex x = 0; x < n; ++x) {
      if (a >> x & 1u) closed |= adj[x];
    }
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x) {
      if ((closed >> x & 1u) && std::popcount(adj[x] & a) < 4) ok = false;
    }
    if (ok) core |= a;
  }
  VertexSet out;
  for (Vertex x = 0; x < n; ++x) {
    if (core >> x & 1u) out.push_back(x);
  }
  return out;
}

BallGraph BallExtractor::extract(const GraphView& g, Vertex v, int k) {
  if (k < 0) throw std::invalid_argument("ball radius must be >= 0");
  const auto& order = bfs_.run(g, v, k);
  BallGraph ball;
  ball.radius = k;
  ball.to_global.reserve(order.size());
  ball.depth.reserve(order.size());
  for (const auto& [x, d] : order) {
    local_[x] = static_cast<Vertex>(ball.to_global.size());
    ball.to_global.push_back(x);
    ball.depth.push_back(d);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i].first;
    for (Vertex y : g.neighbours(x)) {
      const Vertex j = local_[y];
      if (j > static_cast<Vertex>(i)) {
        edges.emplace_back(static_cast<Vertex>(i), j);
      }
    }
  }
  for (const auto& [x, d] : order) local_[x] = -1;
  ball.graph = Graph(static_cast<Vertex>(ball.to_global.size()), edges);
  return ball;
}

BallGraph extract_ball(const GraphView& g, Vertex v, int k) {
  BallExtractor ex(g.num_vertices());
  return ex.extract(g, v, k);
}

BallGraph ball_of_tree(const Graph& t, Vertex root, int k) {
  return extract_ball(t, root, k);
}

LocalColouring local_colouring(const BallGraph& ball, LocalPurple rule) {
  const Graph& g = ball.graph;
  const Vertex n = g.num_vertices();
  const int k = ball.radius;
  std::vector<char> boundary(n, 0);
  for (Vertex x = 0; x < n; ++x) boundary[x] = ball.depth[x] >= k;
  auto adj = [&g](Vertex x) { return g.neighbours(x); };
  std::vector<Vertex> order;
  std::vector<std::uint8_t> colour =
      peel<decltype(adj), std::greater<Vertex>>(n, adj, &boundary, order);

  LocalColouring out;
  out.center = 0;
  out.radius = k;
  std::vector<char> in_a(n, 0), in_p(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    in_a[x] = !boundary[x] && colour[x] == kSapphire;
  }
  if (rule == LocalPurple::kProcess) {
    for (Vertex x = 0; x < n; ++x) in_p[x] = colour[x] == kPurple;
  } else {
    for (Vertex x = 0; x < n; ++x) {
      if (!in_a[x]) continue;
      for (Vertex y : g.neighbours(x)) {
        if (!in_a[y] && !boundary[y]) in_p[y] = 1;
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (in_a[x] || boundary[x]) {
      out.s_k.push_back(x);
    } else if (in_p[x]) {
      out.p_k.push_back(x);
    } else {
      out.r_k.push_back(x);
    }
  }
  if (n > 0 && !in_a[0] && !boundary[0]) {
    std::vector<char> seen(n, 0);
    out.component.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < out.component.size(); ++head) {
      for (Vertex y : g.neighbours(out.component[head])) {
        if (seen[y] || in_a[y] || boundary[y]) continue;
        seen[y] = 1;
        out.component.push_back(y);
      }
    }
    std::sort(out.component.begin(), out.component.end());
  }
  return out;
}

LocalColouring local_colouring(const GraphView& g, Vertex v, int k,
                               LocalPurple rule) {
  if (k < 1) throw std::invalid_argument("local colouring needs k >= 1");
  if (v < 0 || v >= g.num_vertices()) {
    throw std::out_of_range("local colouring: vertex");
  }
  BallGraph ball = extract_ball(g, v, k);
  LocalColouring local = local_colouring(ball, rule);
  auto lift = [&ball](VertexSet& s) {
    for (Vertex& x : s) x = ball.to_global[x];
    std::sort(s.begin(), s.end());
  };
  lift(local.s_k);
  lift(local.p_k);
  lift(local.r_k);
  lift(local.component);
  local.center = v;
  return local;
}

VertexSet k_core(const GraphView& g, int k) {
  if (k < 0) throw std::invalid_argument("k_core: k must be >= 0");
  const Vertex n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> stack;
  for (Vertex x = 0; x < n; ++x) {
    deg[x] = g.degree(x);
    if (deg[x] < k) {
      removed[x] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbours(x)) {
      if (!removed[y] && --deg[y] < k) {
        removed[y] = 1;
        stack.push_back(y);
      }
    }
  }
  VertexSet out;
  for (Vertex x = 0; x < n; ++x) {
    if (!removed[x]) out.push_back(x);
  }
  return out;
}

CheckResult robust_sapphire_check(const GraphView& h, const VertexSet& b) {
  return robust_sapphire_check(h, b, global_colouring(h).s);
}

CheckResult robust_sapphire_check(const GraphView& h, const VertexSet& b,
                                  const VertexSet& sapphire) {
  const Vertex n = h.num_vertices();
  std::vector<char> in_s = to_mask(n, sapphire);
  auto rs1 = [&](Vertex x) -> CheckResult {
    if (!in_s[x]) {
      return CheckResult::fail("RS1", x, "vertex not sapphire");
    }
    if (h.degree(x) < 5) {
      return CheckResult::fail("RS1", x,
                               "degree " + std::to_string(h.degree(x)) + " < 5");
    }
    for (Vertex y : h.neighbours(x)) {
      if (!in_s[y]) {
        return CheckResult::fail("RS1", x,
                                 "neighbour " + std::to_string(y) +
                                     " not sapphire");
      }
    }
    return {};
  };
  for (Vertex x : b) {
    if (auto r = rs1(x); !r) return r;
    for (Vertex y : h.neighbours(x)) {
      if (auto r = rs1(y); !r) return r;
    }
  }
  // Two vertices of b are within distance 4 iff their radius-2 regions
  // meet, which a nearest-owner BFS detects along a single edge.
  std::vector<int> depth(n, -1);
  std::vector<Vertex> owner(n, -1);
  std::vector<Vertex> queue;
  for (Vertex x : b) {
    depth[x] = 0;
    owner[x] = x;
    queue.push_back(x);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : h.neighbours(x)) {
      if (depth[y] == -1) {
        if (depth[x] >= 2) continue;
        depth[y] = depth[x] + 1;
        owner[y] = owner[x];
        queue.push_back(y);
      } else if (owner[y] != owner[x] && depth[x] + depth[y] + 1 <= 4) {
        const Vertex b1 = std::min(owner[x], owner[y]);
        const Vertex b2 = std::max(owner[x], owner[y]);
        return CheckResult::fail(
            "RS2", b1,
            "vertices " + std::to_string(b1) + " and " + std::to_string(b2) +
                " at distance <= " +
                std::to_string(depth[x] + depth[y] + 1));
      }
    }
  }
  return {};
}

Graph remove_cross_edges(const GraphView& h, const VertexSet& a,
                         const VertexSet& b) {
  std::vector<char> in_a = to_mask(h.num_vertices(), a);
  std::vector<char> in_b = to_mask(h.num_vertices(), b);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < h.num_vertices(); ++x) {
    for (Vertex y : h.neighbours(x)) {
      if (x >= y) continue;
      if ((in_a[x] && in_b[y]) || (in_b[x] && in_a[y])) continue;
      edges.emplace_back(x, y);
    }
  }
  return Graph(h.num_vertices(), edges);
}

CheckResult property_P_check(const GraphView& h, const VertexSet& a,
                             const VertexSet& b) {
  if (!set_intersection(a, b).empty()) {
    throw std::invalid_argument("property_P_check: a and b overlap");
  }
  std::vector<char> in_a = to_mask(h.num_vertices(), a);
  std::vector<char> in_b = to_mask(h.num_vertices(), b);
  for (Vertex x : a) {
    for (Vertex y : h.neighbours(x)) {
      if (in_a[y]) {
        return CheckResult::fail("P1", x,
                                 "edge inside a to " + std::to_string(y));
      }
    }
  }
  for (Vertex x : b) {
    for (Vertex y : h.neighbours(x)) {
      if (in_b[y]) {
        return CheckResult::fail("P1", x,
                                 "edge inside b to " + std::to_string(y));
      }
    }
  }
  for (Vertex x : b) {
    int hits = 0;
    for (Vertex y : h.neighbours(x)) hits += in_a[y];
    if (hits > 1) {
      return CheckResult::fail(
          "P2", x, std::to_string(hits) + " neighbours in a (max 1)");
    }
  }
  for (Vertex x : a) {
    for (Vertex y : h.neighbours(x)) {
      if (!in_b[y]) {
        return CheckResult::fail("P3", x,
                                 "neighbour " + std::to_string(y) +
                                     " outside b");
      }
    }
  }
  Graph h_star = remove_cross_edges(h, a, b);
  CheckResult rs = robust_sapphire_check(h_star, b);
  if (!rs) rs.rule = "P4/" + rs.rule;
  return rs;
}

VertexSet greedy_separated(const GraphView& g, const VertexSet& candidates) {
  BfsWorkspace bfs(g.num_vertices());
  std::vector<char> blocked(g.num_vertices(), 0);
  VertexSet chosen;
  for (Vertex c : candidates) {
    if (blocked[c]) continue;
    chosen.push_back(c);
    for (const auto& [x, d] : bfs.run(g, c, 4)) blocked[x] = 1;
  }
  return chosen;
}

VertexSet robust_candidates(const GraphView& g, const VertexSet& sapphire) {
  const Vertex n = g.num_vertices();
  std::vector<char> in_s = to_mask(n, sapphire);
  // good[x]: x and all its neighbours sapphire and deg(x) >= 5.
  std::vector<char> good(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    if (!in_s[x] || g.degree(x) < 5) continue;
    bool ok = true;
    for (Vertex y : g.neighbours(x)) {
      if (!in_s[y]) {
        ok = false;
        break;
      }
    }
    good[x] = ok;
  }
  VertexSet out;
  for (Vertex x = 0; x < n; ++x) {
    if (!good[x]) continue;
    bool ok = true;
    for (Vertex y : g.neighbours(x)) {
      if (!good[y]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

void write_tri_colouring(std::ostream& out, const TriColouring& col) {
  auto line = [&out](const char* tag, const VertexSet& s) {
    out << tag << ':';
    for (Vertex x : s) out << ' ' << x;
    out << '\n';
  };
  line("S", col.s);
  line("P", col.p);
  line("R", col.r);
}

TriColouring read_tri_colouring(std::istream& in) {
  TriColouring col;
  bool seen[3] = {false, false, false};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("colouring: missing ':' at line " +
                               std::to_string(line_no));
    }
    std::string tag = line.substr(0, colon);
    tag.erase(0, tag.find_first_not_of(" \t"));
    tag.erase(tag.find_last_not_of(" \t") + 1);
    int slot;
    VertexSet* target;
    if (tag == "S") {
      slot = 0;
      target = &col.s;
    } else if (tag == "P") {
      slot = 1;
      target = &col.p;
    } else if (tag == "R") {
      slot = 2;
      target = &col.r;
    } else {
      throw std::runtime_error("colouring: unknown tag '" + tag +
                               "' at line " + std::to_string(line_no));
    }
    if (seen[slot]) {
      throw std::runtime_error("colouring: repeated tag at line " +
                               std::to_string(line_no));
    }
    seen[slot] = true;
    std::istringstream ss(line.substr(colon + 1));
    long long x;
    while (ss >> x) {
      if (x < 0) {
        throw std::runtime_error("colouring: negative id at line " +
                                 std::to_string(line_no));
      }
      target->push_back(static_cast<Vertex>(x));
    }
    if (!ss.eof()) {
      throw std::runtime_error("colouring: bad id at line " +
                               std::to_string(line_no));
    }
    std::sort(target->begin(), target->end());
  }
  if (!(seen[0] && seen[1] && seen[2])) {
    throw std::runtime_error("colouring: expected S, P and R lines");
  }
  return col;
}

}  // namespace circumlab
