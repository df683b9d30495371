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

#include "circumlab/path_cover.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace circumlab {
namespace {

constexpr std::int64_t kNeg = -(std::int64_t{1} << 40);

bool invalid(std::int64_t v) { return v <= kNeg / 2; }

std::int64_t plus(std::int64_t a, std::int64_t b) {
  return (invalid(a) || invalid(b)) ? kNeg : a + b;
}

// Union-find with an undo log, for acyclicity of fully used chains.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
    return true;
  }
  void undo() {
    const int b = log_.back();
    log_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> log_;
};

struct Chain {
  int a = -1;  // kernel indices of the two ends
  int b = -1;
  Vertex va = -1;  // host ids of the ends
  Vertex vb = -1;
  std::vector<Vertex> internal;
  // value[s0][sL][all]: best internal gain for that end/usage pattern.
  std::int64_t value[2][2][2];
  std::vector<std::array<int, 3>> options;  // sorted by value, descending
  std::int64_t best = 0;
};

class Solver {
 public:
  Solver(const Graph& h, const std::vector<char>& in_w, int cap)
      : h_(h),
        in_w_(in_w),
        cap_(cap),
        parent_(h.num_vertices(), -1),
        removed_(h.num_vertices(), 0),
        core_deg_(h.num_vertices(), 0),
        children_(h.num_vertices()),
        base_(h.num_vertices(), 0),
        dp_(h.num_vertices(), {0, 0}),
        dp_choice_(h.num_vertices(), {0, 0}),
        f_(h.num_vertices(), {kNeg, kNeg, kNeg}),
        f_choice_(h.num_vertices(), {0, 0, 0}) {}

  // Solves one connected component; appends used edges. Returns the number
  // of covered non-W vertices.
  std::int64_t solve(const VertexSet& comp, std::vector<Edge>& used);

 private:
  std::int64_t gain(Vertex x, int d) const {
    return (!in_w_[x] && d == 2) ? 1 : 0;
  }
  bool allowed(Vertex x, int d) const { return in_w_[x] || d != 1; }
  std::int64_t delta(Vertex ch) const {
    return invalid(dp_[ch][1]) ? kNeg : dp_[ch][1] - dp_[ch][0];
  }
  std::int64_t with_children(Vertex x, int t) const {
    if (t > static_cast<int>(children_[x].size())) return kNeg;
    std::int64_t s = base_[x];
    for (int i = 0; i < t; ++i) s = plus(s, delta(children_[x][i]));
    return s;
  }
  void fold_children(Vertex x);
  void emit_pendant(Vertex x, int t, std::vector<Edge>& used) const;
  void build_chain_table(Chain& c) const;
  std::vector<char> chain_usage(const Chain& c, int s0, int sl, int all) const;
  void search(std::size_t ci, std::int64_t chain_sum);

  const Graph& h_;
  const std::vector<char>& in_w_;
  const int cap_;
  std::vector<Vertex> parent_;
  std::vector<char> removed_;
  std::vector<int> core_deg_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::int64_t> base_;
  std::vector<std::array<std::int64_t, 2>> dp_;
  std::vector<std::array<int, 2>> dp_choice_;
  std::vector<std::array<std::int64_t, 3>> f_;
  std::vector<std::array<int, 3>> f_choice_;

  // Kernel search state.
  std::vector<Vertex> kernel_;
  std::vector<Chain> chains_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> suffix_best_;
  std::vector<int> kdeg_;
  std::vector<int> remaining_;
  std::unique_ptr<RollbackUnionFind> uf_;
  std::vector<int> current_;
  std::vector<int> best_choice_;
  std::int64_t best_ = -1;
};

void Solver::fold_children(Vertex x) {
  auto& ch = children_[x];
  std::sort(ch.begin(), ch.end(), [this](Vertex p, Vertex q) {
    const std::int64_t dp = delta(p), dq = delta(q);
    return dp != dq ? dp > dq : p < q;
  });
  base_[x] = 0;
  for (Vertex c : ch) base_[x] += dp_[c][0];
}

void Solver::emit_pendant(Vertex x, int t, std::vector<Edge>& used) const {
  std::vector<std::pair<Vertex, int>> stack{{x, t}};
  while (!stack.empty()) {
    const auto [y, take] = stack.back();
    stack.pop_back();
    const auto& ch = children_[y];
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const bool on = static_cast<int>(i) < take;
      if (on) used.emplace_back(std::min(y, ch[i]), std::max(y, ch[i]));
      stack.emplace_back(ch[i], dp_choice_[ch[i]][on ? 1 : 0]);
    }
  }
}

void Solver::build_chain_table(Chain& c) const {
  for (auto& a : c.value) {
    for (auto& b : a) b[0] = b[1] = kNeg;
  }
  const std::size_t len = c.internal.size();
  if (len == 0) {
    c.value[0][0][0] = 0;
    c.value[1][1][1] = 0;
  } else {
    for (int s0 = 0; s0 < 2; ++s0) {
      std::int64_t cur[2][2] = {{kNeg, kNeg}, {kNeg, kNeg}};
      cur[s0][s0] = 0;
      for (Vertex x : c.internal) {
        std::int64_t nxt[2][2] = {{kNeg, kNeg}, {kNeg, kNeg}};
        for (int prev = 0; prev < 2; ++prev) {
          for (int all = 0; all < 2; ++all) {
            if (invalid(cur[prev][all])) continue;
            for (int e = 0; e < 2; ++e) {
              const std::int64_t v = plus(cur[prev][all], f_[x][prev + e]);
              std::int64_t& slot = nxt[e][all & e];
              slot = std::max(slot, v);
            }
          }
        }
        std::copy(&nxt[0][0], &nxt[0][0] + 4, &cur[0][0]);
      }
      for (int sl = 0; sl < 2; ++sl) {
        for (int all = 0; all < 2; ++all) c.value[s0][sl][all] = cur[sl][all];
      }
    }
  }
  if (c.a == c.b) {
    // A fully used loop would close a cycle.
    for (auto& a : c.value) {
      for (auto& b : a) b[1] = kNeg;
    }
  }
  c.options.clear();
  for (int s0 = 0; s0 < 2; ++s0) {
    for (int sl = 0; sl < 2; ++sl) {
      for (int all = 0; all < 2; ++all) {
        if (!invalid(c.value[s0][sl][all])) c.options.push_back({s0, sl, all});
      }
    }
  }
  std::stable_sort(c.options.begin(), c.options.end(),
                   [&c](const auto& p, const auto& q) {
                     return c.value[p[0]][p[1]][p[2]] >
                            c.value[q[0]][q[1]][q[2]];
                   });
  c.best = c.value[c.options[0][0]][c.options[0][1]][c.options[0][2]];
}

std::vector<char> Solver::chain_usage(const Chain& c, int s0, int sl,
                                      int all) const {
  const std::size_t len = c.internal.size();
  std::vector<char> usage(len + 1, 0);
  if (len == 0) {
    usage[0] = static_cast<char>(s0);
    return usage;
  }
  // back[i][e][all] = packed (prev, prev_all) reaching state after edge i+1.
  std::vector<std::array<std::array<int, 2>, 2>> back(len);
  std::int64_t cur[2][2] = {{kNeg, kNeg}, {kNeg, kNeg}};
  cur[s0][s0] = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex x = c.internal[i];
    std::int64_t nxt[2][2] = {{kNeg, kNeg}, {kNeg, kNeg}};
    for (int prev = 0; prev < 2; ++prev) {
      for (int a = 0; a < 2; ++a) {
        if (invalid(cur[prev][a])) continue;
        for (int e = 0; e < 2; ++e) {
          const std::int64_t v = plus(cur[prev][a], f_[x][prev + e]);
          if (v > nxt[e][a & e]) {
            nxt[e][a & e] = v;
            back[i][e][a & e] = prev * 2 + a;
          }
        }
      }
    }
    std::copy(&nxt[0][0], &nxt[0][0] + 4, &cur[0][0]);
  }
  if (cur[sl][all] != c.value[s0][sl][all]) {
    throw std::logic_error("uc_exact: chain traceback mismatch");
  }
  int e = sl, a = all;
  for (std::size_t i = len; i-- > 0;) {
    usage[i + 1] = static_cast<char>(e);
    const int packed = back[i][e][a];
    e = packed / 2;
    a = packed % 2;
  }
  usage[0] = static_cast<char>(e);
  return usage;
}

void Solver::search(std::size_t ci, std::int64_t chain_sum) {
  std::int64_t bound = chain_sum + suffix_best_[ci];
  for (std::size_t k = 0; k < kernel_.size(); ++k) {
    const Vertex x = kernel_[k];
    std::int64_t m = kNeg;
    const int hi = std::min(2, kdeg_[k] + remaining_[k]);
    for (int d = kdeg_[k]; d <= hi; ++d) m = std::max(m, f_[x][d]);
    if (invalid(m)) return;
    bound += m;
  }
  if (bound <= best_) return;
  if (ci == order_.size()) {
    std::int64_t total = chain_sum;
    for (std::size_t k = 0; k < kernel_.size(); ++k) {
      total = plus(total, f_[kernel_[k]][kdeg_[k]]);
    }
    if (!invalid(total) && total > best_) {
      best_ = total;
      best_choice_ = current_;
    }
    return;
  }
  const std::size_t c_idx = order_[ci];
  const Chain& c = chains_[c_idx];
  for (std::size_t oi = 0; oi < c.options.size(); ++oi) {
    const auto& [s0, sl, all] = c.options[oi];
    kdeg_[c.a] += s0;
    kdeg_[c.b] += sl;
    --remaining_[c.a];
    --remaining_[c.b];
    bool ok = kdeg_[c.a] <= 2 && kdeg_[c.b] <= 2;
    bool merged = false;
    if (ok && all) {
      merged = uf_->unite(c.a, c.b);
      ok = merged;
    }
    if (ok && remaining_[c.a] == 0 && invalid(f_[kernel_[c.a]][kdeg_[c.a]])) {
      ok = false;
    }
    if (ok && remaining_[c.b] == 0 && invalid(f_[kernel_[c.b]][kdeg_[c.b]])) {
      ok = false;
    }
    if (ok) {
      current_[c_idx] = static_cast<int>(oi);
      search(ci + 1, chain_sum + c.value[s0][sl][all]);
    }
    if (merged) uf_->undo();
    kdeg_[c.a] -= s0;
    kdeg_[c.b] -= sl;
    ++remaining_[c.a];
    ++remaining_[c.b];
  }
}

std::int64_t Solver::solve(const VertexSet& comp, std::vector<Edge>& used) {
  // Peel degree <= 1 vertices; what remains is the 2-core.
  std::vector<Vertex> stack;
  for (Vertex x : comp) {
    core_deg_[x] = h_.degree(x);
    if (core_deg_[x] <= 1) stack.push_back(x);
  }
  std::vector<Vertex> peeled;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (removed_[x]) continue;
    removed_[x] = 1;
    peeled.push_back(x);
    for (Vertex y : h_.neighbours(x)) {
      if (removed_[y]) continue;
      parent_[x] = y;
      if (--core_deg_[y] <= 1) stack.push_back(y);
    }
  }
  for (Vertex x : peeled) {
    if (parent_[x] >= 0) children_[parent_[x]].push_back(x);
  }
  for (Vertex x : peeled) {
    fold_children(x);
    for (int up = 0; up < 2; ++up) {
      std::int64_t best = kNeg;
      int best_t = 0;
      for (int t = 0; t <= 2 - up; ++t) {
        const int d = up + t;
        if (!allowed(x, d)) continue;
        const std::int64_t v = plus(with_children(x, t), gain(x, d));
        if (v > best) {
          best = v;
          best_t = t;
        }
      }
      dp_[x][up] = best;
      dp_choice_[x][up] = best_t;
    }
  }

  VertexSet core;
  for (Vertex x : comp) {
    if (!removed_[x]) core.push_back(x);
  }
  if (core.empty()) {
    const Vertex root = peeled.back();
    emit_pendant(root, dp_choice_[root][0], used);
    return dp_[root][0];
  }

  for (Vertex r : core) {
    fold_children(r);
    for (int d = 0; d <= 2; ++d) {
      std::int64_t best = kNeg;
      int best_j = 0;
      for (int j = 0; j + d <= 2; ++j) {
        if (!allowed(r, d + j)) continue;
        const std::int64_t v = plus(with_children(r, j), gain(r, d + j));
        if (v > best) {
          best = v;
          best_j = j;
        }
      }
      f_[r][d] = best;
      f_choice_[r][d] = best_j;
    }
  }

  // Kernel vertices: core degree >= 3, or one stand-in on a bare cycle.
  std::vector<int> kernel_index(h_.num_vertices(), -1);
  kernel_.clear();
  for (Vertex r : core) {
    if (core_deg_[r] >= 3) {
      kernel_index[r] = static_cast<int>(kernel_.size());
      kernel_.push_back(r);
    }
  }
  if (kernel_.empty()) {
    kernel_index[core[0]] = 0;
    kernel_.push_back(core[0]);
  }
  auto core_neighbours = [this](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex y : h_.neighbours(x)) {
      if (!removed_[y]) out.push_back(y);
    }
    return out;
  };
  chains_.clear();
  std::set<std::pair<Vertex, Vertex>> started;
  for (Vertex a : kernel_) {
    for (Vertex y : core_neighbours(a)) {
      if (started.count({a, y})) continue;
      Chain c;
      c.va = a;
      c.a = kernel_index[a];
      Vertex prev = a, cur = y;
      while (kernel_index[cur] < 0) {
        c.internal.push_back(cur);
        Vertex next = -1;
        for (Vertex z : core_neighbours(cur)) {
          if (z != prev) next = z;
        }
        prev = cur;
        cur = next;
      }
      c.vb = cur;
      c.b = kernel_index[cur];
      started.insert({a, y});
      started.insert({cur, prev});
      chains_.push_back(std::move(c));
      if (static_cast<int>(chains_.size()) > cap_) {
        throw ComponentTooLarge(static_cast<std::int64_t>(chains_.size()),
                                cap_);
      }
    }
  }
  for (Chain& c : chains_) build_chain_table(c);

  // Order chains by a BFS over the kernel so vertices close early.
  std::vector<int> pos(kernel_.size(), -1);
  {
    std::vector<std::vector<std::size_t>> incident(kernel_.size());
    for (std::size_t i = 0; i < chains_.size(); ++i) {
      incident[chains_[i].a].push_back(i);
      incident[chains_[i].b].push_back(i);
    }
    std::vector<int> queue{0};
    pos[0] = 0;
    int next_pos = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t i : incident[queue[head]]) {
        for (int end : {chains_[i].a, chains_[i].b}) {
          if (pos[end] < 0) {
            pos[end] = next_pos++;
            queue.push_back(end);
          }
        }
      }
    }
  }
  order_.resize(chains_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t p, std::size_t q) {
                     const auto kp = std::minmax(pos[chains_[p].a],
                                                 pos[chains_[p].b]);
                     const auto kq = std::minmax(pos[chains_[q].a],
                                                 pos[chains_[q].b]);
                     return kp < kq;
                   });
  suffix_best_.assign(order_.size() + 1, 0);
  for (std::size_t i = order_.size(); i-- > 0;) {
    suffix_best_[i] = suffix_best_[i + 1] + chains_[order_[i]].best;
  }
  kdeg_.assign(kernel_.size(), 0);
  remaining_.assign(kernel_.size(), 0);
  for (const Chain& c : chains_) {
    ++remaining_[c.a];
    ++remaining_[c.b];
  }
  uf_ = std::make_unique<RollbackUnionFind>(static_cast<int>(kernel_.size()));
  current_.assign(chains_.size(), 0);
  best_choice_.clear();
  best_ = -1;
  search(0, 0);
  if (best_choice_.empty() && !chains_.empty()) {
    throw std::logic_error("uc_exact: kernel search found no solution");
  }

  // Rebuild the edge set and the core degree of every core vertex.
  std::vector<int> deg_of(h_.num_vertices(), 0);
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    const Chain& c = chains_[i];
    const auto& [s0, sl, all] = c.options[best_choice_[i]];
    const std::vector<char> usage = chain_usage(c, s0, sl, all);
    std::vector<Vertex> walk;
    walk.push_back(c.va);
    walk.insert(walk.end(), c.internal.begin(), c.internal.end());
    walk.push_back(c.vb);
    for (std::size_t e = 0; e < usage.size(); ++e) {
      if (!usage[e]) continue;
      const Vertex x = walk[e], y = walk[e + 1];
      used.emplace_back(std::min(x, y), std::max(x, y));
      ++deg_of[x];
      ++deg_of[y];
    }
  }
  for (Vertex r : core) {
    if (deg_of[r] > 2 || invalid(f_[r][deg_of[r]])) {
      throw std::logic_error("uc_exact: inconsistent core degrees");
    }
    emit_pendant(r, f_choice_[r][deg_of[r]], used);
  }
  return best_;
}

}  // namespace

ComponentTooLarge::ComponentTooLarge(std::int64_t size, std::int64_t cap,
                                     std::int64_t component)
    : std::runtime_error("component too large: search size " +
                         std::to_string(size) + " exceeds cap " +
                         std::to_string(cap) +
                         (component >= 0
                              ? " (component " + std::to_string(component) + ")"
                              : std::string())),
      size_(size),
      cap_(cap),
      component_(component) {}

PathCoverResult uc_exact(const Graph& h, const VertexSet& w, int size_cap) {
  const Vertex n = h.num_vertices();
  std::vector<char> in_w(n, 0);
  for (Vertex x : w) {
    if (x < 0 || x >= n) throw std::invalid_argument("uc_exact: w not in V(h)");
    in_w[x] = 1;
  }
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  PathCoverResult result;
  std::vector<Edge> used;
  Solver solver(h, in_w, size_cap);
  for (const VertexSet& comp : components(h, all)) {
    std::int64_t non_w = 0, in_w_count = 0;
    for (Vertex x : comp) (in_w[x] ? in_w_count : non_w) += 1;
    if (in_w_count <= 1) {
      // No path with an edge can have both ends in W.
      result.uncovered += non_w;
      continue;
    }
    result.uncovered += non_w - solver.solve(comp, used);
  }

  // Assemble the paths of F.
  std::vector<std::array<Vertex, 2>> fadj(n, {-1, -1});
  std::vector<int> fdeg(n, 0);
  for (const auto& [x, y] : used) {
    if (fdeg[x] >= 2 || fdeg[y] >= 2) {
      throw std::logic_error("uc_exact: degree above 2 in witness");
    }
    fadj[x][fdeg[x]++] = y;
    fadj[y][fdeg[y]++] = x;
  }
  std::vector<char> seen(n, 0);
  std::int64_t covered = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (seen[x]) continue;
    if (fdeg[x] == 0) {
      if (in_w[x]) result.witness.push_back({x});
      continue;
    }
    if (fdeg[x] != 1) continue;
    std::vector<Vertex> path{x};
    seen[x] = 1;
    Vertex prev = -1, cur = x;
    while (true) {
      Vertex next = -1;
      for (int i = 0; i < fdeg[cur]; ++i) {
        if (fadj[cur][i] != prev) next = fadj[cur][i];
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      seen[cur] = 1;
      path.push_back(cur);
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) covered += !in_w[path[i]];
    result.witness.push_back(std::move(path));
  }
  for (Vertex x = 0; x < n; ++x) {
    if (fdeg[x] > 0 && !seen[x]) {
      throw std::logic_error("uc_exact: witness contains a cycle");
    }
  }
  const std::int64_t non_w_total =
      n - static_cast<std::int64_t>(std::count(in_w.begin(), in_w.end(), 1));
  if (non_w_total - covered != result.uncovered) {
    throw std::logic_error("uc_exact: witness does not match optimum");
  }
  return result;
}

std::int64_t uc_bruteforce(const Graph& h, const VertexSet& w) {
  const std::vector<Edge> edges = h.edges();
  if (edges.size() > 20) {
    throw std::invalid_argument("uc_bruteforce: more than 20 edges");
  }
  const Vertex n = h.num_vertices();
  std::vector<char> in_w(n, 0);
  for (Vertex x : w) {
    if (x < 0 || x >= n) {
      throw std::invalid_argument("uc_bruteforce: w not in V(h)");
    }
    in_w[x] = 1;
  }
  std::int64_t non_w = 0;
  for (Vertex x = 0; x < n; ++x) non_w += !in_w[x];
  std::int64_t best = non_w;
  std::vector<int> deg(n), root(n);
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      const auto [x, y] = edges[e];
      if (++deg[x] > 2 || ++deg[y] > 2) ok = false;
      const int rx = find(x), ry = find(y);
      if (rx == ry) ok = false;
      root[rx] = ry;
    }
    if (!ok) continue;
    std::int64_t covered = 0;
    for (Vertex x = 0; x < n && ok; ++x) {
      if (!in_w[x] && deg[x] == 1) ok = false;
      if (!in_w[x] && deg[x] == 2) ++covered;
    }
    if (ok) best = std::min(best, non_w - covered);
  }
  return best;
}

CheckResult validate_witness(const Graph& h, const VertexSet& w,
                             const PathCoverResult& result) {
  const Vertex n = h.num_vertices();
  std::vector<char> in_w = to_mask(n, w);
  std::vector<char> used(n, 0);
  std::int64_t covered = 0;
  for (const auto& path : result.witness) {
    if (path.empty()) return CheckResult::fail("empty", -1, "empty path");
    for (Vertex x : path) {
      if (x < 0 || x >= n) {
        return CheckResult::fail("range", x, "vertex out of range");
      }
      if (used[x]) {
        return CheckResult::fail("disjoint", x, "vertex used twice");
      }
      used[x] = 1;
    }
    if (!in_w[path.front()] || !in_w[path.back()]) {
      return CheckResult::fail("endpoint", in_w[path.front()] ? path.back()
                                                              : path.front(),
                               "endpoint outside w");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!h.has_edge(path[i], path[i + 1])) {
        return CheckResult::fail("edge", path[i],
                                 "no edge to " + std::to_string(path[i + 1]));
      }
    }
    for (Vertex x : path) covered += !in_w[x];
  }
  std::int64_t non_w = 0;
  for (Vertex x = 0; x < n; ++x) non_w += !in_w[x];
  if (non_w - covered != result.uncovered) {
    return CheckResult::fail(
        "count", -1,
        "witness leaves " + std::to_string(non_w - covered) +
            " uncovered, result says " + std::to_string(result.uncovered));
  }
  return {};
}

PhiBreakdown phi_global(const GraphView& g, const TriColouring& col,
                        int size_cap) {
  PhiBreakdown out;
  out.n = g.num_vertices();
  out.per_vertex.assign(out.n, Fraction());
  out.component_of.assign(out.n, -1);
  const VertexSet pr = set_union(col.p, col.r);
  std::vector<char> in_p = to_mask(out.n, col.p);
  out.components = components(g, pr);
  out.per_component.reserve(out.components.size());
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const VertexSet& comp = out.components[i];
    std::int64_t uc;
    bool any_p = false;
    for (Vertex x : comp) any_p = any_p || in_p[x];
    if (!any_p) {
      uc = static_cast<std::int64_t>(comp.size());
    } else {
      const Graph h = induced_subgraph(g, comp);
      VertexSet w;
      for (std::size_t j = 0; j < comp.size(); ++j) {
        if (in_p[comp[j]]) w.push_back(static_cast<Vertex>(j));
      }
      try {
        uc = uc_exact(h, w, size_cap).uncovered;
      } catch (const ComponentTooLarge& e) {
        throw e.with_component(static_cast<std::int64_t>(i));
      }
    }
    out.per_component.push_back(uc);
    out.phi_total += uc;
    const Fraction share(uc, static_cast<std::int64_t>(comp.size()));
    for (Vertex x : comp) {
      out.per_vertex[x] = share;
      out.component_of[x] = static_cast<std::int32_t>(i);
    }
  }
  return out;
}

std::string phi_breakdown_json(const PhiBreakdown& phi) {
  nlohmann::ordered_json j;
  j["n"] = phi.n;
  j["phi_total"] = phi.phi_total;
  j["l_tilde"] = phi.l_tilde();
  auto comps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < phi.components.size(); ++i) {
    nlohmann::ordered_json c;
    c["id"] = i;
    c["size"] = phi.components[i].size();
    c["uc"] = phi.per_component[i];
    c["vertices"] = phi.components[i];
    comps.push_back(std::move(c));
  }
  j["per_component"] = std::move(comps);
  nlohmann::ordered_json pv = nlohmann::ordered_json::object();
  for (Vertex x = 0; x < phi.n; ++x) {
    pv[std::to_string(x)] = phi.per_vertex[x].str();
  }
  j["per_vertex"] = std::move(pv);
  return j.dump(2);
}

Fraction phi_local(const BallGraph& ball, const LocalColouring& local,
                   int size_cap) {
  if (local.component.empty()) return Fraction();
  const VertexSet& comp = local.component;
  const Graph h = induced_subgraph(ball.graph, comp);
  VertexSet w;
  for (std::size_t j = 0; j < comp.size(); ++j) {
    if (contains(local.p_k, comp[j])) w.push_back(static_cast<Vertex>(j));
  }
  const std::int64_t uc =
      w.size() <= 1
          ? static_cast<std::int64_t>(comp.size() - w.size())
          : uc_exact(h, w, size_cap).uncovered;
  return Fraction(uc, static_cast<std::int64_t>(comp.size()));
}

Fraction phi_local(const GraphView& g, Vertex v, int k, int size_cap) {
  if (k < 1) throw std::invalid_argument("phi_local needs k >= 1");
  if (v < 0 || v >= g.num_vertices()) {
    throw std::out_of_range("phi_local: vertex");
  }
  const BallGraph ball = extract_ball(g, v, k);
  return phi_local(ball, local_colouring(ball), size_cap);
}

}  // namespace circumlab
