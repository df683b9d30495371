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

#include "circumlab/cycle_exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "circumlab/estimators.hpp"
#include "circumlab/parallel.hpp"
#include "circumlab/rng.hpp"

namespace circumlab {
namespace {

struct BudgetExceeded {};

// Pósa rotations on one block. Returns the longest cycle met on the way;
// a Hamilton cycle if one was found.
std::vector<Vertex> rotation_extension(const Graph& h, std::uint64_t seed) {
  const Vertex m = h.num_vertices();
  Rng rng(seed);
  std::vector<Vertex> best;
  std::vector<Vertex> path;
  std::vector<int> pos(m, -1);
  const int restarts = 8;
  const std::int64_t steps = 20LL * m * m + 100;
  std::vector<Vertex> options;
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::fill(pos.begin(), pos.end(), -1);
    path.assign(1, static_cast<Vertex>(uniform_below(rng, m)));
    pos[path[0]] = 0;
    for (std::int64_t step = 0; step < steps; ++step) {
      const Vertex end = path.back();
      const int len = static_cast<int>(path.size());
      options.clear();
      for (Vertex y : h.neighbours(end)) {
        if (pos[y] < 0) options.push_back(y);
      }
      if (!options.empty()) {
        const Vertex y = options[uniform_below(rng, options.size())];
        pos[y] = len;
        path.push_back(y);
        continue;
      }
      // Every neighbour of the end lies on the path and closes a cycle.
      options.clear();
      for (Vertex y : h.neighbours(end)) {
        const int i = pos[y];
        if (len - i >= 3 && len - i > static_cast<int>(best.size())) {
          best.assign(path.begin() + i, path.end());
        }
        if (i < len - 2) options.push_back(y);
      }
      if (static_cast<Vertex>(best.size()) == m) return best;
      if (options.empty()) break;
      const int i = pos[options[uniform_below(rng, options.size())]];
      std::reverse(path.begin() + i + 1, path.end());
      for (int j = i + 1; j < len; ++j) pos[path[j]] = j;
    }
  }
  return best;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& h, std::int64_t& expansions, std::int64_t budget)
      : h_(h),
        expansions_(expansions),
        budget_(budget),
        removed_(h.num_vertices(), 0),
        on_path_(h.num_vertices(), 0),
        seen_(h.num_vertices(), 0) {}

  // Improves `best` to the longest cycle of h. Throws BudgetExceeded.
  void run(std::vector<Vertex>& best) {
    best_ = &best;
    const Vertex m = h_.num_vertices();
    Vertex alive = m;
    // Cycles through s avoid every earlier start.
    for (Vertex s = 0; s < m; ++s) {
      if (alive <= static_cast<Vertex>(best.size())) break;
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      extend();
      on_path_[s] = 0;
      removed_[s] = 1;
      --alive;
    }
  }

 private:
  // Free vertices reachable from the path end, or -1 when none of them leads
  // back to the start.
  int reach_bound() {
    ++stamp_;
    queue_.clear();
    queue_.push_back(path_.back());
    seen_[path_.back()] = stamp_;
    bool back_to_start = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (Vertex y : h_.neighbours(queue_[head])) {
        if (y == start_ && head > 0) back_to_start = true;
        if (removed_[y] || on_path_[y] || seen_[y] == stamp_) continue;
        seen_[y] = stamp_;
        queue_.push_back(y);
      }
    }
    return back_to_start ? static_cast<int>(queue_.size()) - 1 : -1;
  }

  void extend() {
    if (++expansions_ > budget_) throw BudgetExceeded{};
    const Vertex end = path_.back();
    const std::size_t len = path_.size();
    if (len >= 3 && len > best_->size() && h_.has_edge(end, start_)) {
      *best_ = path_;
    }
    const int reach = reach_bound();
    if (reach < 0 || len + reach <= best_->size()) return;
    for (Vertex y : h_.neighbours(end)) {
      if (removed_[y] || on_path_[y]) continue;
      on_path_[y] = 1;
      path_.push_back(y);
      extend();
      path_.pop_back();
      on_path_[y] = 0;
    }
  }

  const Graph& h_;
  std::int64_t& expansions_;
  std::int64_t budget_;
  std::vector<char> removed_;
  std::vector<char> on_path_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> queue_;
  std::vector<Vertex> path_;
  std::vector<Vertex>* best_ = nullptr;
  Vertex start_ = 0;
};

}  // namespace

std::vector<VertexSet> cyclic_blocks(const GraphView& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> stack;
  std::vector<VertexSet> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int time = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = time++;
    stack.push_back(root);
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = g.neighbours(f.v);
      if (f.next < nbrs.size()) {
        const Vertex y = nbrs[f.next++];
        if (disc[y] < 0) {
          disc[y] = low[y] = time++;
          stack.push_back(y);
          frames.push_back({y, f.v, 0});
        } else if (y != f.parent) {
          low[f.v] = std::min(low[f.v], disc[y]);
        }
        continue;
      }
      const Vertex v = f.v, p = f.parent;
      frames.pop_back();
      if (p < 0) {
        stack.pop_back();
        continue;
      }
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        VertexSet block{p};
        while (true) {
          const Vertex x = stack.back();
          stack.pop_back();
          block.push_back(x);
          if (x == v) break;
        }
        if (block.size() >= 3) {
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

CycleResult circumference(const GraphView& g, std::int64_t budget) {
  std::vector<VertexSet> blocks = cyclic_blocks(g);
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() > b.size();
                   });
  CycleResult out;
  std::vector<Vertex> local(g.num_vertices(), -1);
  for (const VertexSet& block : blocks) {
    if (static_cast<std::int64_t>(block.size()) <= out.length) break;
    // Highest degree first so early starts remove the most edges.
    VertexSet order = block;
    std::stable_sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      local[order[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex y : g.neighbours(order[i])) {
        const Vertex j = local[y];
        if (j > static_cast<Vertex>(i)) edges.emplace_back(i, j);
      }
    }
    for (Vertex x : order) local[x] = -1;
    const Graph h(static_cast<Vertex>(order.size()), edges);
    std::vector<Vertex> best =
        rotation_extension(h, derive_seed(order.size(), Stream::kSample, 0));
    if (best.size() < order.size()) {
      try {
        CycleSearch(h, out.expansions, budget).run(best);
      } catch (const BudgetExceeded&) {
        out.exact = false;
      }
    }
    if (static_cast<std::int64_t>(best.size()) > out.length) {
      out.length = static_cast<std::int64_t>(best.size());
      out.witness.clear();
      for (Vertex x : best) out.witness.push_back(order[x]);
    }
    if (!out.exact) break;
  }
  return out;
}

CheckResult validate_cycle(const GraphView& g, const CycleResult& r) {
  const auto& w = r.witness;
  if (static_cast<std::int64_t>(w.size()) != r.length) {
    return CheckResult::fail("length", -1, "witness size differs from length");
  }
  if (w.empty()) return {};
  if (w.size() < 3) return CheckResult::fail("short", w[0], "fewer than 3");
  VertexSet sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return CheckResult::fail("repeat", -1, "vertex repeated");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex a = w[i], b = w[(i + 1) % w.size()];
    if (!g.has_edge(a, b)) {
      return CheckResult::fail("edge", a, "missing edge to " + std::to_string(b));
    }
  }
  return {};
}

std::optional<double> CircumferenceAuditReport::fraction() const {
  if (trials == 0) return std::nullopt;
  return static_cast<double>(agree) / static_cast<double>(trials);
}

CircumferenceAuditReport circumference_audit(Vertex n, double c, std::int64_t trials,
                                std::uint64_t seed, int threads,
                                std::int64_t budget) {
  if (!(c >= 20.0)) {
    throw std::invalid_argument("circumference_audit needs c >= 20");
  }
  if (c > n) throw std::invalid_argument("c must be at most n");
  CircumferenceAuditReport rep;
  rep.n = n;
  rep.c = c;
  rep.trials = trials;
  rep.above_log_regime = c > 2.0 * std::log(static_cast<double>(n));
  rep.records.resize(trials);
  parallel_for(trials, threads, [&](std::int64_t t) {
    CircumferenceAuditTrial& rec = rep.records[t];
    rec.trial = t;
    rec.seed = derive_seed(seed, Stream::kGraph, static_cast<std::uint64_t>(t));
    const Graph g = sample_gnp({n, c, rec.seed});
    const CycleResult cyc = circumference(g, budget);
    rec.circumference = cyc.length;
    rec.exact = cyc.exact;
    try {
      rec.l_tilde = l_tilde(g);
    } catch (const ComponentTooLarge&) {
      rec.too_large = true;
    }
  });
  for (const CircumferenceAuditTrial& rec : rep.records) {
    if (!rec.exact) {
      ++rep.inexact;
    } else if (rec.too_large) {
      ++rep.too_large;
    } else if (rec.circumference == rec.l_tilde) {
      ++rep.agree;
    } else {
      rep.disagreements.push_back(rec);
    }
  }
  return rep;
}

std::string circumference_audit_json(const CircumferenceAuditReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["trials"] = r.trials;
  j["agree"] = r.agree;
  if (auto f = r.fraction()) {
    j["fraction"] = *f;
  } else {
    j["fraction"] = nullptr;
  }
  j["inexact"] = r.inexact;
  j["too_large"] = r.too_large;
  j["above_log_regime"] = r.above_log_regime;
  j["disagreements"] = nlohmann::ordered_json::array();
  for (const CircumferenceAuditTrial& d : r.disagreements) {
    j["disagreements"].push_back({{"trial", d.trial},
                                  {"seed", d.seed},
                                  {"circumference", d.circumference},
                                  {"l_tilde", d.l_tilde}});
  }
  return j.dump(2);
}

}  // namespace circumlab
