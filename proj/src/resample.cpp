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

#include "circumlab/resample.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "circumlab/estimators.hpp"
#include "circumlab/parallel.hpp"
#include "circumlab/rng.hpp"

namespace circumlab {
namespace {

struct GlobalSide {
  TriColouring col;
  PhiBreakdown phi;
  std::vector<char> in_s;
  std::vector<char> in_r;
};

GlobalSide global_side(const GraphView& g, int cap) {
  GlobalSide out;
  out.col = global_colouring(g);
  out.phi = phi_global(g, out.col, cap);
  out.in_s = to_mask(g.num_vertices(), out.col.s);
  out.in_r = to_mask(g.num_vertices(), out.col.r);
  return out;
}

const VertexSet& component_at(const GlobalSide& side, Vertex x) {
  static const VertexSet kEmpty;
  const std::int32_t id = side.phi.component_of[x];
  return id < 0 ? kEmpty : side.phi.components[id];
}

// Local colouring around one centre, translated to host ids.
struct LocalSide {
  BallGraph ball;
  LocalColouring lc;
  VertexSet comp;  // empty when the centre is locally sapphire
  VertexSet comp_red;
  std::optional<Fraction> phi_k;

  Fraction phi(int cap) {
    if (!phi_k) phi_k = phi_local(ball, lc, cap);
    return *phi_k;
  }
};

std::unique_ptr<LocalSide> local_side(BallExtractor& ex, const GraphView& g,
                                      Vertex w, int k) {
  auto out = std::make_unique<LocalSide>();
  out->ball = ex.extract(g, w, k);
  out->lc = local_colouring(out->ball);
  for (Vertex x : out->lc.component) {
    const Vertex host = out->ball.to_global[x];
    out->comp.push_back(host);
    if (contains(out->lc.r_k, x)) out->comp_red.push_back(host);
  }
  std::sort(out->comp.begin(), out->comp.end());
  std::sort(out->comp_red.begin(), out->comp_red.end());
  return out;
}

// Same red-purple component on both sides: vertex set, red set and induced
// edges. The induced edges differ exactly when both ends of the flip lie in C.
bool same_component(const VertexSet& cp, const VertexSet& rp,
                    const VertexSet& cm, const VertexSet& rm, Vertex u,
                    Vertex v) {
  if (cp != cm || rp != rm) return false;
  return !(contains(cp, u) && contains(cp, v));
}

BigRational difference(const Fraction& a, const Fraction& b) {
  return to_big(a) - to_big(b);
}

}  // namespace

struct FlipAnalyzer::State {
  const Graph& g;
  int k;
  int cap;
  FlipScope scope;
  GlobalSide base;
  std::vector<std::unique_ptr<LocalSide>> base_local;
  BallExtractor extractor;
  BfsWorkspace bfs;

  State(const Graph& graph, int radius, int size_cap, FlipScope s)
      : g(graph),
        k(radius),
        cap(size_cap),
        scope(s),
        base(global_side(graph, size_cap)),
        base_local(graph.num_vertices()),
        extractor(graph.num_vertices()),
        bfs(graph.num_vertices()) {}

  LocalSide& base_at(Vertex w) {
    if (!base_local[w]) base_local[w] = local_side(extractor, g, w, k);
    return *base_local[w];
  }
};

FlipAnalyzer::FlipAnalyzer(const Graph& g, int k, int size_cap,
                           FlipScope scope) {
  if (k < 1) throw std::invalid_argument("analyze_flip needs k >= 1");
  state_ = std::make_unique<State>(g, k, size_cap, scope);
}

FlipAnalyzer::~FlipAnalyzer() = default;

FlipAnalysis FlipAnalyzer::analyze(Vertex u, Vertex v) {
  State& st = *state_;
  const Vertex n = st.g.num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::out_of_range("analyze_flip: vertex");
  }
  if (u == v) throw std::invalid_argument("analyze_flip needs u != v");
  const FlipPair fp(st.g, u, v);
  const bool base_is_plus = fp.base_has_edge();
  const GraphView& other_view = base_is_plus ? fp.minus() : fp.plus();
  const GlobalSide other = global_side(other_view, st.cap);
  const GlobalSide& sp = base_is_plus ? st.base : other;
  const GlobalSide& sm = base_is_plus ? other : st.base;

  FlipAnalysis fa;
  fa.u = u;
  fa.v = v;
  fa.k = st.k;
  fa.colour_plus = sp.col;
  fa.colour_minus = sm.col;
  fa.w_plus = set_union(component_at(sp, u), component_at(sp, v));
  fa.w_minus = set_union(component_at(sm, u), component_at(sm, v));
  fa.w_star = set_union(set_union(fa.w_plus, fa.w_minus),
                        VertexSet{std::min(u, v), std::max(u, v)});
  for (Vertex x : fa.w_star) {
    if (sp.in_r[x] || sm.in_r[x]) fa.w_star_r.push_back(x);
  }
  fa.phi_plus = sp.phi.per_vertex;
  fa.phi_minus = sm.phi.per_vertex;
  fa.phik_plus.assign(n, Fraction());
  fa.phik_minus.assign(n, Fraction());

  const bool case_one = !sp.in_s[u] && !sp.in_s[v];
  const std::vector<char> in_case_w =
      to_mask(n, case_one ? fa.w_plus : fa.w_minus);
  const bool small_w =
      std::max(fa.w_plus.size(), fa.w_minus.size()) < static_cast<std::size_t>(st.k);

  // Balls missing u and v are the same on both sides.
  std::vector<char> near(n, 0);
  const Vertex ends[2] = {u, v};
  for (const auto& [x, d] : st.bfs.run(fp.minus(), ends, st.k)) near[x] = 1;

  std::map<std::pair<std::int32_t, std::int32_t>, bool> same_global;
  for (Vertex w = 0; w < n; ++w) {
    // I*
    if (sp.in_s[w] && sm.in_s[w]) {
      fa.i_star.push_back(w);
    } else if (!sp.in_s[w] && !sm.in_s[w]) {
      const auto key = std::make_pair(sp.phi.component_of[w],
                                      sm.phi.component_of[w]);
      auto it = same_global.find(key);
      if (it == same_global.end()) {
        const VertexSet& cp = component_at(sp, w);
        const VertexSet& cm = component_at(sm, w);
        VertexSet rp, rm;
        for (Vertex x : cp) {
          if (sp.in_r[x]) rp.push_back(x);
        }
        for (Vertex x : cm) {
          if (sm.in_r[x]) rm.push_back(x);
        }
        it = same_global.emplace(key, same_component(cp, rp, cm, rm, u, v))
                 .first;
      }
      if (it->second) fa.i_star.push_back(w);
    }

    const bool needs_value =
        st.scope == FlipScope::kFull || !in_case_w[w] || small_w;
    // Globally sapphire on both sides: locally sapphire too, phi_k = 0.
    if (sp.in_s[w] && sm.in_s[w]) {
      fa.i_star_k.push_back(w);
      continue;
    }
    if (!near[w]) {
      fa.i_star_k.push_back(w);
      if (needs_value) {
        fa.phik_plus[w] = fa.phik_minus[w] = st.base_at(w).phi(st.cap);
      } else {
        fa.local_skipped.push_back(w);
      }
      if (fa.phi_plus[w] != fa.phi_minus[w]) fa.d.push_back(w);
      continue;
    }
    std::unique_ptr<LocalSide> fresh = local_side(st.extractor, other_view, w, st.k);
    LocalSide& lb = st.base_at(w);
    LocalSide& lp = base_is_plus ? lb : *fresh;
    LocalSide& lm = base_is_plus ? *fresh : lb;
    if (same_component(lp.comp, lp.comp_red, lm.comp, lm.comp_red, u, v)) {
      fa.i_star_k.push_back(w);
    }
    if (!needs_value) {
      fa.local_skipped.push_back(w);
      continue;
    }
    fa.phik_plus[w] = lp.phi(st.cap);
    fa.phik_minus[w] = lm.phi(st.cap);
    if (fa.phik_plus[w] != fa.phik_minus[w]) fa.d_tilde.push_back(w);
    if (difference(fa.phi_plus[w], fa.phik_plus[w]) !=
        difference(fa.phi_minus[w], fa.phik_minus[w])) {
      fa.d.push_back(w);
    }
  }
  return fa;
}

FlipAnalysis analyze_flip(const Graph& g, Vertex u, Vertex v, int k,
                          int size_cap, FlipScope scope) {
  return FlipAnalyzer(g, k, size_cap, scope).analyze(u, v);
}

namespace {

FlipViolation violation(std::string lemma, std::string detail,
                        VertexSet witness) {
  return {std::move(lemma), std::move(detail), std::move(witness)};
}

bool same_partition(const TriColouring& a, const TriColouring& b) {
  return a.s == b.s && a.p == b.p && a.r == b.r;
}

}  // namespace

std::optional<FlipViolation> check_flip_lemmas(const Graph& g,
                                               const FlipAnalysis& fa) {
  const Vertex n = g.num_vertices();
  const FlipPair fp(g, fa.u, fa.v);
  const GraphView& plus = fp.plus();
  const TriColouring& cp = fa.colour_plus;
  const TriColouring& cm = fa.colour_minus;

  // (a)
  const bool case_one = !contains(cp.s, fa.u) && !contains(cp.s, fa.v);
  if (case_one) {
    if (!is_subset(cp.s, cm.s)) {
      return violation("a", "S+ not inside S-", set_difference(cp.s, cm.s));
    }
    if (!is_subset(cm.r, cp.r)) {
      return violation("a", "R- not inside R+", set_difference(cm.r, cp.r));
    }
    if (!is_subset(fa.w_minus, fa.w_plus)) {
      return violation("a", "W- not inside W+",
                       set_difference(fa.w_minus, fa.w_plus));
    }
    const VertexSet boundary = neighbourhood(plus, fa.w_plus);
    if (!is_subset(boundary, cp.s)) {
      return violation("a", "N(W+) not sapphire in G+",
                       set_difference(boundary, cp.s));
    }
  } else {
    if (!is_subset(cm.s, cp.s)) {
      return violation("a", "S- not inside S+", set_difference(cm.s, cp.s));
    }
    if (!is_subset(cp.r, cm.r)) {
      return violation("a", "R+ not inside R-", set_difference(cp.r, cm.r));
    }
    if (!is_subset(fa.w_plus, fa.w_minus)) {
      return violation("a", "W+ not inside W-",
                       set_difference(fa.w_plus, fa.w_minus));
    }
  }
  if (contains(cm.s, fa.u) && contains(cm.s, fa.v)) {
    if (!same_partition(cp, cm)) {
      return violation("a", "both ends in S- but colourings differ", {});
    }
    if (static_cast<Vertex>(fa.i_star.size()) != n) {
      VertexSet all(n);
      for (Vertex x = 0; x < n; ++x) all[x] = x;
      return violation("a", "both ends in S- but I* is not V",
                       set_difference(all, fa.i_star));
    }
  }

  // (b)
  const VertexSet& w_case = case_one ? fa.w_plus : fa.w_minus;
  const VertexSet changed = set_union(fa.d, fa.d_tilde);
  if (!is_subset(changed, w_case)) {
    return violation("b", case_one ? "D u D~ not inside W+" : "D u D~ not inside W-",
                     set_difference(changed, w_case));
  }
  {
    const VertexSet settled = set_intersection(fa.i_star, fa.i_star_k);
    VertexSet outside;
    for (Vertex x = 0, j = 0; x < n; ++x) {
      while (j < static_cast<Vertex>(w_case.size()) && w_case[j] < x) ++j;
      if (j < static_cast<Vertex>(w_case.size()) && w_case[j] == x) continue;
      outside.push_back(x);
    }
    if (!is_subset(outside, settled)) {
      return violation("b", "vertex outside W not in I* and I*_k",
                       set_difference(outside, settled));
    }
  }

  // (c)
  if (std::max(fa.w_plus.size(), fa.w_minus.size()) <
          static_cast<std::size_t>(fa.k) &&
      !fa.d.empty()) {
    return violation("c", "both W sets smaller than k but D nonempty", fa.d);
  }

  // (d)
  if (components(plus, fa.w_star).size() != 1) {
    return violation("d", "G+[W*] disconnected", fa.w_star);
  }

  // (e)
  for (Vertex x : fa.w_star_r) {
    for (Vertex y : plus.neighbours(x)) {
      if (!contains(fa.w_star, y)) {
        return violation("e", "red vertex of W* with neighbour outside W*",
                         {x, y});
      }
    }
  }

  // (f)
  if (4 * fa.w_star_r.size() + 2 < fa.w_star.size()) {
    return violation("f",
                     "|W*_R| = " + std::to_string(fa.w_star_r.size()) +
                         ", |W*| = " + std::to_string(fa.w_star.size()),
                     fa.w_star_r);
  }

  // (g)
  for (Vertex w : fa.i_star) {
    if (fa.phi_plus[w] != fa.phi_minus[w]) {
      return violation("g", "phi changed on I*", {w});
    }
  }
  for (Vertex w : fa.i_star_k) {
    if (contains(fa.local_skipped, w)) continue;
    if (fa.phik_plus[w] != fa.phik_minus[w]) {
      return violation("g", "phi_k changed on I*_k", {w});
    }
  }
  return std::nullopt;
}

std::string flip_violation_json(const FlipViolation& violation,
                                std::uint64_t trial_seed, Edge edge) {
  nlohmann::ordered_json j;
  j["seed"] = trial_seed;
  j["edge"] = {edge.first, edge.second};
  j["lemma"] = violation.lemma;
  j["detail"] = violation.detail;
  j["witness"] = violation.witness;
  return j.dump();
}

FlipLemmaReport flip_lemma_audit(Vertex n, double c, int k, std::int64_t flips,
                                 std::uint64_t seed, int threads,
                                 std::int64_t flips_per_graph, int size_cap) {
  if (flips_per_graph < 1) {
    throw std::invalid_argument("flips_per_graph must be positive");
  }
  if (n < 2) throw std::invalid_argument("flip audit needs n >= 2");
  const std::int64_t graphs = (flips + flips_per_graph - 1) / flips_per_graph;
  struct Batch {
    std::int64_t checked = 0;
    std::int64_t too_large = 0;
    std::int64_t skipped_vertices = 0;
    std::vector<FlipLemmaReport::Record> violations;
  };
  std::vector<Batch> batches(graphs);
  parallel_for(graphs, threads, [&](std::int64_t gi) {
    Batch& b = batches[gi];
    const std::uint64_t gseed =
        derive_seed(seed, Stream::kGraph, static_cast<std::uint64_t>(gi));
    const Graph g = sample_gnp({n, c, gseed});
    FlipAnalyzer analyzer(g, k, size_cap, FlipScope::kLemmas);
    Rng rng = make_rng(seed, Stream::kFlip, static_cast<std::uint64_t>(gi));
    const std::int64_t count = std::min(flips_per_graph, flips - gi * flips_per_graph);
    for (std::int64_t f = 0; f < count; ++f) {
      const Vertex u = static_cast<Vertex>(uniform_below(rng, n));
      Vertex v = static_cast<Vertex>(uniform_below(rng, n - 1));
      if (v >= u) ++v;
      try {
        const FlipAnalysis fa = analyzer.analyze(u, v);
        ++b.checked;
        b.skipped_vertices += static_cast<std::int64_t>(fa.local_skipped.size());
        if (auto bad = check_flip_lemmas(g, fa)) {
          b.violations.push_back({gseed, {std::min(u, v), std::max(u, v)}, *bad});
        }
      } catch (const ComponentTooLarge&) {
        ++b.too_large;
      }
    }
  });
  FlipLemmaReport rep;
  rep.n = n;
  rep.c = c;
  rep.k = k;
  rep.flips = flips;
  for (Batch& b : batches) {
    rep.checked += b.checked;
    rep.too_large += b.too_large;
    rep.skipped_vertices += b.skipped_vertices;
    for (auto& r : b.violations) rep.violations.push_back(std::move(r));
  }
  return rep;
}

std::string flip_lemma_json(const FlipLemmaReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["k"] = r.k;
  j["flips"] = r.flips;
  j["checked"] = r.checked;
  j["too_large"] = r.too_large;
  j["skipped_vertices"] = r.skipped_vertices;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back(
        nlohmann::ordered_json::parse(flip_violation_json(v.violation, v.seed, v.edge)));
  }
  return j.dump(2);
}

EfronSteinReport efron_stein_audit(Vertex n, double c, int k,
                                   std::int64_t trials, std::uint64_t seed,
                                   int threads, int bootstrap,
                                   int flips_per_trial) {
  if (trials < 2) throw std::invalid_argument("efron_stein_audit needs trials >= 2");
  if (flips_per_trial < 1) {
    throw std::invalid_argument("efron_stein_audit needs flips_per_trial >= 1");
  }
  if (n < 2) throw std::invalid_argument("efron_stein_audit needs n >= 2");
  if (k < 1) throw std::invalid_argument("efron_stein_audit needs k >= 1");
  struct Trial {
    bool ok = false;
    double l_tilde_k = 0;
    double diff = 0;
    double d_tilde_sq = 0;  // mean of |D~|^2 over the trial's flips
    double d_sq = 0;
  };
  std::vector<Trial> rec(trials);
  parallel_for(trials, threads, [&](std::int64_t t) {
    const Graph g = sample_gnp(
        {n, c, derive_seed(seed, Stream::kGraph, static_cast<std::uint64_t>(t))});
    Rng rng = make_rng(seed, Stream::kFlip, static_cast<std::uint64_t>(t));
    try {
      const BigRational lk = l_tilde_k(g, k);
      const std::int64_t l = l_tilde(g);
      FlipAnalyzer analyzer(g, k);
      double dt = 0, dd = 0;
      for (int f = 0; f < flips_per_trial; ++f) {
        const Vertex u = static_cast<Vertex>(uniform_below(rng, n));
        Vertex v = static_cast<Vertex>(uniform_below(rng, n - 1));
        if (v >= u) ++v;
        const FlipAnalysis fa = analyzer.analyze(u, v);
        dt += static_cast<double>(fa.d_tilde.size() * fa.d_tilde.size());
        dd += static_cast<double>(fa.d.size() * fa.d.size());
      }
      Trial& r = rec[t];
      r.l_tilde_k = to_double(lk);
      r.diff = to_double(BigRational(l) - lk);
      r.d_tilde_sq = dt / flips_per_trial;
      r.d_sq = dd / flips_per_trial;
      r.ok = true;
    } catch (const ComponentTooLarge&) {
    }
  });

  EfronSteinReport rep;
  rep.n = n;
  rep.c = c;
  rep.k = k;
  rep.trials = trials;
  rep.flips_per_trial = flips_per_trial;
  rep.p = c / static_cast<double>(n);
  std::vector<double> lk, diff, dt2, d2;
  for (const Trial& r : rec) {
    if (!r.ok) {
      ++rep.too_large;
      continue;
    }
    lk.push_back(r.l_tilde_k);
    diff.push_back(r.diff);
    dt2.push_back(r.d_tilde_sq);
    d2.push_back(r.d_sq);
  }
  if (lk.size() < 2) return rep;
  const double scale = 2.0 * rep.p * (1.0 - rep.p) * static_cast<double>(n) *
                       static_cast<double>(n);
  auto var = [](std::span<const double> x) { return sample_variance(x); };
  auto scaled_mean = [scale](std::span<const double> x) {
    return scale * mean(x);
  };
  rep.lhs = sample_variance(lk);
  rep.rhs = scaled_mean(dt2);
  rep.diff_lhs = sample_variance(diff);
  rep.diff_rhs = scaled_mean(d2);
  rep.lhs_ci = bootstrap_ci(lk, var, bootstrap, 0.95,
                            derive_seed(seed, Stream::kBootstrap, 0));
  rep.rhs_ci = bootstrap_ci(dt2, scaled_mean, bootstrap, 0.95,
                            derive_seed(seed, Stream::kBootstrap, 1));
  rep.diff_lhs_ci = bootstrap_ci(diff, var, bootstrap, 0.95,
                                 derive_seed(seed, Stream::kBootstrap, 2));
  rep.diff_rhs_ci = bootstrap_ci(d2, scaled_mean, bootstrap, 0.95,
                                 derive_seed(seed, Stream::kBootstrap, 3));
  return rep;
}

std::string efron_stein_json(const EfronSteinReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["flips_per_trial"] = r.flips_per_trial;
  j["too_large"] = r.too_large;
  j["p"] = r.p;
  j["lhs"] = r.lhs;
  j["lhs_ci"] = {r.lhs_ci.lo, r.lhs_ci.hi};
  j["rhs"] = r.rhs;
  j["rhs_ci"] = {r.rhs_ci.lo, r.rhs_ci.hi};
  j["pass"] = r.pass();
  j["diff_lhs"] = r.diff_lhs;
  j["diff_lhs_ci"] = {r.diff_lhs_ci.lo, r.diff_lhs_ci.hi};
  j["diff_rhs"] = r.diff_rhs;
  j["diff_rhs_ci"] = {r.diff_rhs_ci.lo, r.diff_rhs_ci.hi};
  j["diff_pass"] = r.diff_pass();
  return j.dump(2);
}

namespace {

void require_property_p(const GraphView& h, const VertexSet& a,
                        const VertexSet& b) {
  const CheckResult check = property_P_check(h, a, b);
  if (!check.ok) {
    throw std::invalid_argument("input lacks property P (" + check.rule +
                                "): " + check.detail);
  }
}

}  // namespace

StarIdentityResult star_identity_check(const GraphView& h, const VertexSet& a,
                                       const VertexSet& b, int k,
                                       int size_cap) {
  if (k < 2) throw std::invalid_argument("star identity needs k >= 2");
  require_property_p(h, a, b);
  const Graph h_star = remove_cross_edges(h, a, b);
  StarIdentityResult out;
  out.l_tilde_k_h = l_tilde_k(h, k, size_cap);
  out.l_tilde_k_h_star = l_tilde_k(h_star, k, size_cap);
  const std::vector<char> in_b = to_mask(h.num_vertices(), b);
  for (Vertex x : a) {
    int to_b = 0;
    for (Vertex y : h.neighbours(x)) to_b += in_b[y];
    if (to_b >= 2) ++out.y;
  }
  return out;
}

CoreUpdateResult core_update_check(const GraphView& h, const VertexSet& a,
                                   const VertexSet& b) {
  require_property_p(h, a, b);
  const Graph h_star = remove_cross_edges(h, a, b);
  const TriColouring col = global_colouring(h);
  const TriColouring col_star = global_colouring(h_star);
  CoreUpdateResult out;
  VertexSet low;
  for (Vertex x : a) {
    (h.degree(x) >= 4 ? out.a_prime : low).push_back(x);
  }
  out.b_prime = neighbourhood(h, low);
  out.s_ok = col.s == set_union(set_difference(col_star.s, out.b_prime), out.a_prime);
  out.p_ok = col.p == set_union(col_star.p, out.b_prime);
  out.r_ok = col.r == set_difference(col_star.r, out.a_prime);
  return out;
}

PInstance generate_p_instance(Vertex side, double thinning, Vertex a_count,
                              int min_star, int max_star, std::uint64_t seed) {
  if (side < 5) throw std::invalid_argument("torus side must be >= 5");
  if (a_count < 0 || min_star < 0 || max_star < min_star) {
    throw std::invalid_argument("bad star parameters");
  }
  Rng rng = make_rng(seed, Stream::kFixture, 0);
  const Vertex host = side * side;
  auto id = [side](Vertex i, Vertex j) {
    return ((i + side) % side) * side + (j + side) % side;
  };
  std::vector<Edge> edges;
  for (Vertex i = 0; i < side; ++i) {
    for (Vertex j = 0; j < side; ++j) {
      const Vertex x = id(i, j);
      for (Vertex y : {id(i + 1, j), id(i, j + 1), id(i + 1, j - 1)}) {
        if (uniform01(rng) < thinning) continue;
        edges.emplace_back(std::min(x, y), std::max(x, y));
      }
    }
  }
  const Graph h_star(host + a_count, edges);
  const TriColouring col = global_colouring(h_star);
  PInstance out;
  out.b = greedy_separated(h_star, robust_candidates(h_star, col.s));
  for (Vertex x = 0; x < a_count; ++x) out.a.push_back(host + x);

  VertexSet pool = out.b;
  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[uniform_below(rng, i)]);
  }
  std::size_t next = 0;
  for (Vertex x : out.a) {
    const int want =
        min_star + static_cast<int>(uniform_below(rng, max_star - min_star + 1));
    for (int s = 0; s < want && next < pool.size(); ++s) {
      const Vertex y = pool[next++];
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  out.h = Graph(host + a_count, edges);
  const CheckResult check = property_P_check(out.h, out.a, out.b);
  if (!check.ok) {
    throw std::logic_error("generated instance lacks property P: " + check.rule);
  }
  return out;
}

}  // namespace circumlab
