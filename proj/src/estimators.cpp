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

#include "circumlab/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "circumlab/colouring.hpp"

namespace circumlab {
namespace {

// Sums fractions grouped by denominator, touching big integers only once per
// distinct denominator.
class ShareSum {
 public:
  void add(const Fraction& f) {
    if (!f.is_zero()) by_den_[f.den] += f.num;
  }
  BigRational total() const {
    BigRational s = 0;
    for (const auto& [den, num] : by_den_) {
      s += BigRational(boost::multiprecision::cpp_int(num),
                       boost::multiprecision::cpp_int(den));
    }
    return s;
  }

 private:
  std::map<std::int64_t, std::int64_t> by_den_;
};

Fraction one_minus(const Fraction& f) { return Fraction(f.den - f.num, f.den); }

void check_radius(int k) {
  if (k < 1) throw std::invalid_argument("radius k must be >= 1");
}

std::vector<char> sapphire_mask(const GraphView& g) {
  std::vector<char> mask(g.num_vertices(), 0);
  for (Vertex x : global_colouring(g).s) mask[x] = 1;
  return mask;
}

Fraction local_share(const GraphView& g, Vertex v, int k, int size_cap,
                     BallExtractor& ex) {
  const BallGraph ball = ex.extract(g, v, k);
  try {
    return phi_local(ball, local_colouring(ball), size_cap);
  } catch (const ComponentTooLarge& e) {
    throw e.with_component(v);
  }
}

}  // namespace

std::int64_t standard_truncation(double c, int k) {
  if (!(c > 0) || k < 1) {
    throw std::invalid_argument("standard_truncation needs c > 0 and k >= 1");
  }
  const long double base = 10.0L * c * k;
  const long double t = std::pow(base, 2.0L * k);
  if (!(t < 9.2e18L)) return kUnboundedTruncation;
  // Guard against pow landing just below an exact integer.
  return static_cast<std::int64_t>(std::floor(t * (1 + 1e-15L)));
}

std::int64_t l_tilde(const GraphView& g, int size_cap) {
  return phi_global(g, global_colouring(g), size_cap).l_tilde();
}

BigRational l_tilde_k(const GraphView& g, int k, int size_cap, LocalSum mode) {
  check_radius(k);
  const Vertex n = g.num_vertices();
  std::vector<char> skip(n, 0);
  if (mode == LocalSum::kSkipGlobalSapphire) skip = sapphire_mask(g);
  BallExtractor ex(n);
  ShareSum sum;
  for (Vertex v = 0; v < n; ++v) {
    if (!skip[v]) sum.add(local_share(g, v, k, size_cap, ex));
  }
  return BigRational(n) - sum.total();
}

bool BallTreeProbe::small_tree(const GraphView& g, Vertex v, int k,
                               std::int64_t max_size) {
  if (max_size < 1) return false;
  if (++stamp_ == 0) {
    std::fill(stamp_of_.begin(), stamp_of_.end(), 0);
    stamp_ = 1;
  }
  queue_.clear();
  stamp_of_[v] = stamp_;
  parent_[v] = -1;
  queue_.emplace_back(v, 0);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const auto [x, d] = queue_[head];
    for (Vertex y : g.neighbours(x)) {
      if (stamp_of_[y] == stamp_) {
        if (y != parent_[x]) return false;  // second route: cycle in the ball
        continue;
      }
      if (d >= k) continue;
      stamp_of_[y] = stamp_;
      parent_[y] = x;
      queue_.emplace_back(y, d + 1);
      if (static_cast<std::int64_t>(queue_.size()) > max_size) return false;
    }
  }
  return true;
}

BigRational l_hat_k(const GraphView& g, int k, std::int64_t truncation,
                    int size_cap) {
  check_radius(k);
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  const Vertex n = g.num_vertices();
  const std::vector<char> sapphire = sapphire_mask(g);
  BallTreeProbe probe(n);
  BallExtractor ex(n);
  ShareSum sum;
  for (Vertex v = 0; v < n; ++v) {
    if (!probe.small_tree(g, v, k, truncation)) continue;
    sum.add(sapphire[v] ? Fraction(1, 1)
                        : one_minus(local_share(g, v, k, size_cap, ex)));
  }
  return sum.total();
}

ProxyValues compute_proxies(const GraphView& g, int k, std::int64_t truncation,
                            int size_cap) {
  ProxyValues out;
  out.k = k;
  out.truncation = truncation;
  out.l_tilde = l_tilde(g, size_cap);
  out.l_tilde_k = l_tilde_k(g, k, size_cap);
  out.l_hat_k = l_hat_k(g, k, truncation, size_cap);
  return out;
}

std::string canonical_rooted_tree(const GraphView& t, Vertex r) {
  const Vertex n = t.num_vertices();
  if (r < 0 || r >= n) {
    throw std::invalid_argument("canonical_rooted_tree: root out of range");
  }
  if (t.num_edges() + 1 != static_cast<std::int64_t>(n)) {
    throw std::invalid_argument("canonical_rooted_tree: not a tree");
  }
  std::vector<Vertex> order{r};
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  seen[r] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i];
    for (Vertex y : t.neighbours(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      order.push_back(y);
    }
  }
  if (order.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("canonical_rooted_tree: not connected");
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code = "(";
    for (const std::string& c : kids) code += c;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (parent[*it] >= 0) child_codes[parent[*it]].push_back(code);
  }
  return code;
}

std::map<std::string, RootedTreeClass> neighbourhood_census(
    const GraphView& g, int k, std::int64_t truncation, int size_cap) {
  check_radius(k);
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  const Vertex n = g.num_vertices();
  BallTreeProbe probe(n);
  BallExtractor ex(n);
  std::map<std::string, RootedTreeClass> census;
  for (Vertex v = 0; v < n; ++v) {
    if (!probe.small_tree(g, v, k, truncation)) continue;
    const BallGraph ball = ex.extract(g, v, k);
    std::string code = canonical_rooted_tree(ball.graph, 0);
    auto it = census.find(code);
    if (it == census.end()) {
      RootedTreeClass cls;
      cls.canonical_code = code;
      cls.size = ball.graph.num_vertices();
      const BallGraph tree = ball_of_tree(ball.graph, 0, k);
      try {
        cls.alpha = one_minus(phi_local(tree, local_colouring(tree), size_cap));
      } catch (const ComponentTooLarge& e) {
        throw e.with_component(v);
      }
      it = census.emplace(std::move(code), std::move(cls)).first;
    }
    ++it->second.count;
  }
  return census;
}

BigRational census_weighted_sum(
    const std::map<std::string, RootedTreeClass>& census) {
  BigRational s = 0;
  for (const auto& [code, cls] : census) {
    s += BigRational(cls.count) * to_big(cls.alpha);
  }
  return s;
}

void write_census_csv(std::ostream& out,
                      const std::map<std::string, RootedTreeClass>& census) {
  out << "canonical_code,size,alpha_num,alpha_den,count\n";
  for (const auto& [code, cls] : census) {
    out << code << ',' << cls.size << ',' << cls.alpha.num << ','
        << cls.alpha.den << ',' << cls.count << '\n';
  }
}

}  // namespace circumlab
