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

#include "circumlab/reveal.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include <json.hpp>

#include "circumlab/colouring.hpp"
#include "circumlab/rng.hpp"

namespace circumlab {
namespace {

// A vertex set or its complement.
struct SetRef {
  VertexSet set;
  bool complement = false;
};

SetRef only(VertexSet s) { return {std::move(s), false}; }
SetRef all_but(VertexSet s) { return {std::move(s), true}; }

// Edge-revealing queries are logged by the vertex region they cover.
struct Query {
  enum Kind { kInduced, kBetween } kind;
  SetRef x;
  SetRef y;  // unused for kInduced
};

class EdgeOracle {
 public:
  EdgeOracle(const Graph& g1, const Graph& g2)
      : g1_(g1), g2_(g2), mark_x_(g1.num_vertices(), 0),
        mark_y_(g1.num_vertices(), 0) {}

  std::vector<Edge> g1_all() const { return g1_.edges(); }

  std::vector<Edge> g2_induced(const SetRef& x) {
    log_.push_back({Query::kInduced, x, {}});
    fill(mark_x_, x);
    std::vector<Edge> out;
    for (Vertex a = 0; a < g2_.num_vertices(); ++a) {
      if (!mark_x_[a]) continue;
      for (Vertex b : g2_.neighbours(a)) {
        if (b > a && mark_x_[b]) out.emplace_back(a, b);
      }
    }
    return out;
  }

  // Edges of G2 (or of G = G1 u G2) with one end in x and the other in y.
  std::vector<Edge> between(const SetRef& x, const SetRef& y, bool whole_g) {
    log_.push_back({Query::kBetween, x, y});
    fill(mark_x_, x);
    fill(mark_y_, y);
    std::vector<Edge> out;
    auto scan = [&](const Graph& g) {
      for (Vertex a = 0; a < g.num_vertices(); ++a) {
        if (!mark_x_[a] && !mark_y_[a]) continue;
        for (Vertex b : g.neighbours(a)) {
          if ((mark_x_[a] && mark_y_[b]) || (mark_y_[a] && mark_x_[b])) {
            out.emplace_back(std::min(a, b), std::max(a, b));
          }
        }
      }
    };
    scan(g2_);
    if (whole_g) scan(g1_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // One bit: |N_G(b) cap x| >= 2. Not an edge query.
  bool at_least_two(Vertex b, const std::vector<char>& x) const {
    int hits = 0;
    for (Vertex y : g1_.neighbours(b)) hits += x[y];
    for (Vertex y : g2_.neighbours(b)) hits += x[y];
    return hits >= 2;
  }

  // A count only. Not an edge query.
  std::int64_t g2_count(const VertexSet& x, const std::vector<char>& y) const {
    std::int64_t m = 0;
    for (Vertex a : x) {
      for (Vertex b : g2_.neighbours(a)) m += y[b];
    }
    return m;
  }

  const std::vector<Query>& log() const { return log_; }

 private:
  void fill(std::vector<char>& mark, const SetRef& s) const {
    std::fill(mark.begin(), mark.end(), s.complement ? 1 : 0);
    for (Vertex v : s.set) mark[v] = s.complement ? 0 : 1;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<char> mark_x_;
  std::vector<char> mark_y_;
  std::vector<Query> log_;
};

bool meets(const SetRef& s, const std::vector<char>& mask) {
  if (!s.complement) {
    for (Vertex v : s.set) {
      if (mask[v]) return true;
    }
    return false;
  }
  const std::vector<char> out = to_mask(static_cast<Vertex>(mask.size()), s.set);
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v] && !out[v]) return true;
  }
  return false;
}

void add_edges(std::vector<Edge>& into, const std::vector<Edge>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

Graph graph_of(Vertex n, std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

VertexSet isolated_in(const Graph& g, const VertexSet& among) {
  VertexSet out;
  for (Vertex v : among) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

// Greedy 5-separated subset of the RS1 candidates of g that lie in `within`.
VertexSet robust_subset(const Graph& g, const VertexSet& within) {
  const TriColouring col = global_colouring(g);
  return greedy_separated(g, set_intersection(robust_candidates(g, col.s), within));
}

}  // namespace

RevealOutcome edge_reveal(const Graph& g1, const Graph& g2, double c,
                          double p2_scale) {
  const Vertex n = g1.num_vertices();
  if (g2.num_vertices() != n) {
    throw std::invalid_argument("edge_reveal: G1 and G2 differ in size");
  }
  RevealOutcome out;
  out.n = n;
  out.c = c;
  out.p2_scale = p2_scale;
  out.g2_edges = g2.num_edges();
  EdgeOracle oracle(g1, g2);
  VertexSet everything(n);
  for (Vertex v = 0; v < n; ++v) everything[v] = v;

  std::vector<Edge> revealed = oracle.g1_all();
  out.a0 = isolated_in(g1, everything);

  // A1: vertices of A0 with no G2 neighbour inside A0.
  const std::vector<Edge> inside_a0 = oracle.g2_induced(only(out.a0));
  add_edges(revealed, inside_a0);
  {
    std::vector<char> touched(n, 0);
    for (const Edge& e : inside_a0) touched[e.first] = touched[e.second] = 1;
    for (Vertex v : out.a0) {
      if (!touched[v]) out.a1.push_back(v);
    }
  }
  add_edges(revealed, oracle.g2_induced(all_but(out.a1)));
  Graph g_star = graph_of(n, revealed);

  {
    const TriColouring col = global_colouring(g_star);
    out.b0 = robust_candidates(g_star, col.s);
    out.b1 = greedy_separated(g_star, out.b0);
  }

  VertexSet a2 = out.a1, b2 = out.b1;
  while (true) {
    if (++out.iterations > n) {
      throw std::runtime_error("edge_reveal: stabilization loop exceeded n passes");
    }
    add_edges(revealed, oracle.between(only(a2), all_but(b2), false));
    g_star = graph_of(n, revealed);
    const VertexSet a_next = isolated_in(g_star, a2);
    const VertexSet b_next = robust_subset(g_star, b2);
    if (a_next == a2 && b_next == b2) break;
    a2 = a_next;
    b2 = b_next;
  }
  out.a2 = a2;
  out.b2 = b2;
  out.a3 = a2;
  out.b3 = b2;

  const std::vector<char> in_a3 = to_mask(n, out.a3);
  for (Vertex b : out.b3) {
    if (oracle.at_least_two(b, in_a3)) out.b3_minus.push_back(b);
  }
  add_edges(revealed, oracle.between(only(out.a3), only(out.b3_minus), true));
  g_star = graph_of(n, revealed);
  out.a4 = set_difference(out.a3, neighbourhood(g_star, out.b3_minus));

  const VertexSet a_gone = set_difference(out.a3, out.a4);
  add_edges(revealed, oracle.between(only(a_gone), only(out.b3), true));
  g_star = graph_of(n, revealed);
  out.b4 = set_difference(out.b3, neighbourhood(g_star, a_gone));

  out.m = oracle.g2_count(out.a4, to_mask(n, out.b4));
  out.revealed_edges = std::move(revealed);
  std::sort(out.revealed_edges.begin(), out.revealed_edges.end());
  out.revealed_edges.erase(
      std::unique(out.revealed_edges.begin(), out.revealed_edges.end()),
      out.revealed_edges.end());

  // Re-verification against the true G.
  std::vector<Edge> g_edges = g1.edges();
  add_edges(g_edges, g2.edges());
  const Graph g = graph_of(n, g_edges);
  out.g_edges = g.num_edges();
  const std::vector<char> in_a4 = to_mask(n, out.a4);
  const std::vector<char> in_b4 = to_mask(n, out.b4);
  auto cross = [&](const Edge& e) {
    return (in_a4[e.first] && in_b4[e.second]) ||
           (in_b4[e.first] && in_a4[e.second]);
  };
  const CheckResult p = property_P_check(g, out.a4, out.b4);
  out.r1_property_p = p.ok;
  if (!p.ok) out.r1_detail = p.rule + ": " + p.detail;
  {
    const std::vector<Edge> g1_edges = g1.edges();
    out.r2_no_g1_cross = std::none_of(g1_edges.begin(), g1_edges.end(), cross);
  }
  std::vector<Edge> g_star_true;
  for (const Edge& e : g_edges) {
    if (!cross(e)) g_star_true.push_back(e);
  }
  for (const Edge& e : out.revealed_edges) out.over_revealed += cross(e);
  std::vector<Edge> missing;
  std::set_difference(g_star_true.begin(), g_star_true.end(),
                      out.revealed_edges.begin(), out.revealed_edges.end(),
                      std::back_inserter(missing));
  out.unrevealed = static_cast<std::int64_t>(missing.size());
  out.r3_edges = out.unrevealed == 0 && out.over_revealed == 0;

  out.r3_queries = true;
  for (const Query& q : oracle.log()) {
    const bool bad =
        q.kind == Query::kInduced
            ? meets(q.x, in_a4) && meets(q.x, in_b4)
            : (meets(q.x, in_a4) && meets(q.y, in_b4)) ||
                  (meets(q.y, in_a4) && meets(q.x, in_b4));
    if (bad) out.r3_queries = false;
  }
  return out;
}

RevealOutcome edge_reveal(Vertex n, double c, double p2_scale,
                          std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("edge_reveal needs n >= 2");
  if (!(c >= 0 && c <= n)) throw std::invalid_argument("edge_reveal: c out of range");
  if (!(p2_scale > 0 && p2_scale <= c)) {
    throw std::invalid_argument("edge_reveal needs 0 < p2_scale <= c");
  }
  const double p = c / n;
  const double p2 = p2_scale / n;
  const double p1 = 1.0 - (1.0 - p) / (1.0 - p2);
  const Graph g1 =
      sample_gnp_p(n, std::max(0.0, p1), derive_seed(seed, Stream::kGraph, 0));
  const Graph g2 = sample_gnp_p(n, p2, derive_seed(seed, Stream::kReveal, 0));
  return edge_reveal(g1, g2, c, p2_scale);
}

std::string reveal_json(const RevealOutcome& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["p2_scale"] = r.p2_scale;
  j["g_edges"] = r.g_edges;
  j["g2_edges"] = r.g2_edges;
  j["sizes"] = {{"a0", r.a0.size()}, {"a1", r.a1.size()}, {"a2", r.a2.size()},
                {"a3", r.a3.size()}, {"a4", r.a4.size()}, {"b0", r.b0.size()},
                {"b1", r.b1.size()}, {"b2", r.b2.size()}, {"b3", r.b3.size()},
                {"b3_minus", r.b3_minus.size()}, {"b4", r.b4.size()}};
  j["m"] = r.m;
  j["iterations"] = r.iterations;
  j["revealed_edges"] = r.revealed_edges.size();
  j["r1_property_p"] = r.r1_property_p;
  j["r1_detail"] = r.r1_detail;
  j["r2_no_g1_cross"] = r.r2_no_g1_cross;
  j["r3_edges"] = r.r3_edges;
  j["r3_queries"] = r.r3_queries;
  j["unrevealed"] = r.unrevealed;
  j["over_revealed"] = r.over_revealed;
  j["verified"] = r.verified();
  return j.dump(2);
}

}  // namespace circumlab
