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

#include <gtest/gtest.h>

#include <json.hpp>

#include "circumlab/rng.hpp"
#include "test_graphs.hpp"

namespace circumlab {
namespace {

using testing_graphs::complete;
using testing_graphs::cycle;
using testing_graphs::path;
using testing_graphs::star;

void expect_both(const Graph& h, const VertexSet& w, std::int64_t want) {
  PathCoverResult r = uc_exact(h, w);
  EXPECT_EQ(r.uncovered, want);
  EXPECT_TRUE(validate_witness(h, w, r).ok);
  if (h.num_edges() <= 20) EXPECT_EQ(uc_bruteforce(h, w), want);
}

TEST(UcTest, SingleVertex) { expect_both(Graph(1), {}, 1); }

TEST(UcTest, EdgeWithOneEndpointInW) {
  expect_both(path(2), {1}, 1);
}

TEST(UcTest, StarsWithCentreOutsideW) {
  expect_both(star(2), {1, 2}, 0);
  expect_both(star(3), {1, 2, 3}, 0);
}

TEST(UcTest, PathWithEndsInW) { expect_both(path(4), {0, 3}, 0); }

TEST(UcTest, Triangle) {
  expect_both(complete(3), {}, 3);
  expect_both(complete(3), {0, 1}, 0);
}

TEST(UcTest, WitnessFormat) {
  PathCoverResult r = uc_exact(path(4), {0, 3});
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(r.witness[0], (std::vector<Vertex>{0, 1, 2, 3}));
  PathCoverResult single = uc_exact(path(2), {1});
  ASSERT_EQ(single.witness.size(), 1u);
  EXPECT_EQ(single.witness[0], (std::vector<Vertex>{1}));
}

TEST(UcTest, CycleNeedsTwoEndpoints) {
  expect_both(cycle(8), {}, 8);
  expect_both(cycle(8), {3}, 7);
  expect_both(cycle(8), {3, 4}, 0);
  expect_both(cycle(8), {0, 4}, 3);
}

TEST(UcTest, PetersenHamiltonPath) {
  // Petersen has Hamilton paths between non-adjacent vertices.
  expect_both(testing_graphs::petersen(), {0, 2}, 0);
}

TEST(UcTest, RejectsOutOfRangeW) {
  EXPECT_THROW(uc_exact(path(3), {5}), std::invalid_argument);
  EXPECT_THROW(uc_bruteforce(complete(8), {}), std::invalid_argument);
}

TEST(UcTest, MatchesBruteForceOnSmallInstances) {
  Rng rng(31337);
  const double probs[] = {0.2, 0.4, 0.6};
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(uniform_below(rng, 8));
    const double p = probs[trial % 3];
    Graph h = sample_gnp_p(n, p, rng());
    if (h.num_edges() > 20) continue;
    VertexSet w;
    for (Vertex x = 0; x < n; ++x) {
      if (uniform01(rng) < 0.4) w.push_back(x);
    }
    PathCoverResult r = uc_exact(h, w);
    ASSERT_EQ(r.uncovered, uc_bruteforce(h, w)) << "trial " << trial;
    ASSERT_TRUE(validate_witness(h, w, r).ok) << "trial " << trial;
  }
}

TEST(UcTest, MatchesBruteForceOnSparseLargerInstances) {
  // Up to 20 edges on 12-18 vertices: pendant trees, chains and kernels.
  Rng rng(8);
  int done = 0;
  while (done < 300) {
    const Vertex n = 12 + static_cast<Vertex>(uniform_below(rng, 7));
    Graph h = sample_gnp_p(n, 2.6 / n, rng());
    if (h.num_edges() > 20) continue;
    VertexSet w;
    for (Vertex x = 0; x < n; ++x) {
      if (uniform01(rng) < 0.3) w.push_back(x);
    }
    PathCoverResult r = uc_exact(h, w);
    ASSERT_EQ(r.uncovered, uc_bruteforce(h, w)) << "instance " << done;
    ASSERT_TRUE(validate_witness(h, w, r).ok);
    ++done;
  }
}

TEST(UcTest, MonotoneInW) {
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(uniform_below(rng, 7));
    Graph h = sample_gnp_p(n, 0.4, rng());
    VertexSet w, w_more;
    for (Vertex x = 0; x < n; ++x) {
      const double u = uniform01(rng);
      if (u < 0.3) w.push_back(x);
      if (u < 0.6) w_more.push_back(x);
    }
    EXPECT_GE(uc_exact(h, w).uncovered, uc_exact(h, w_more).uncovered);
  }
}

TEST(UcTest, CapIsEnforcedOnKernel) {
  // Dense graph: many kernel chains.
  Graph h = complete(14);
  VertexSet w{0, 1};
  EXPECT_THROW(uc_exact(h, w, 10), ComponentTooLarge);
  // Trees never need the kernel search.
  Graph t = path(500);
  EXPECT_EQ(uc_exact(t, {0, 499}, 1).uncovered, 0);
}

TEST(UcTest, LongCycleWithPendants) {
  // 30-cycle with a pendant path at every fifth vertex, W = pendant tips.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 30; ++i) {
    e.emplace_back(std::min(i, (i + 1) % 30), std::max(i, (i + 1) % 30));
  }
  VertexSet w;
  Vertex next = 30;
  for (Vertex i = 0; i < 30; i += 5) {
    e.emplace_back(i, next);
    e.emplace_back(next, next + 1);
    w.push_back(next + 1);
    next += 2;
  }
  Graph h = testing_graphs::from_edges(next, e);
  PathCoverResult r = uc_exact(h, w);
  EXPECT_TRUE(validate_witness(h, w, r).ok);
  // Best is one path from the tip at 0 the long way round to the tip at 25:
  // 26 cycle vertices plus two pendant middles. Any second path forces two
  // uncovered gaps of four cycle vertices each, which is worse. Uncovered:
  // 36 non-W vertices minus 28.
  EXPECT_EQ(r.uncovered, 8);
}

TEST(PhiGlobalTest, CompleteSix) {
  Graph g = complete(6);
  PhiBreakdown phi = phi_global(g, global_colouring(g));
  EXPECT_EQ(phi.phi_total, 0);
  EXPECT_EQ(phi.l_tilde(), 6);
  for (const Fraction& f : phi.per_vertex) EXPECT_TRUE(f.is_zero());
}

TEST(PhiGlobalTest, Edgeless) {
  Graph g(7);
  PhiBreakdown phi = phi_global(g, global_colouring(g));
  EXPECT_EQ(phi.phi_total, 7);
  EXPECT_EQ(phi.l_tilde(), 0);
}

TEST(PhiGlobalTest, Cycle) {
  Graph g = cycle(10);
  PhiBreakdown phi = phi_global(g, global_colouring(g));
  EXPECT_EQ(phi.phi_total, 10);
  EXPECT_EQ(phi.l_tilde(), 0);
  for (const Fraction& f : phi.per_vertex) EXPECT_EQ(f, Fraction(1, 1));
}

TEST(PhiGlobalTest, SharesSumExactly) {
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = sample_gnp({500, 9.0 + 0.1 * trial,
                          derive_seed(6, Stream::kGraph, trial)});
    PhiBreakdown phi = phi_global(g, global_colouring(g));
    BigRational sum = 0;
    for (const Fraction& f : phi.per_vertex) {
      EXPECT_GE(f.num, 0);
      EXPECT_LE(f.num, f.den);
      sum += to_big(f);
    }
    EXPECT_EQ(sum, BigRational(phi.phi_total));
    EXPECT_GE(phi.phi_total, 0);
    EXPECT_LE(phi.phi_total, 500);
  }
}

TEST(PhiGlobalTest, JsonHasStableKeys) {
  Graph g = cycle(4);
  auto j = nlohmann::ordered_json::parse(
      phi_breakdown_json(phi_global(g, global_colouring(g))));
  auto it = j.begin();
  EXPECT_EQ(it.key(), "n");
  EXPECT_EQ(j["phi_total"], 4);
  EXPECT_EQ(j["per_vertex"]["0"], "1/1");
}

TEST(PhiLocalTest, SapphireCentreIsZero) {
  EXPECT_TRUE(phi_local(complete(6), 0, 1).is_zero());
}

TEST(PhiLocalTest, CycleRadiusOne) {
  EXPECT_EQ(phi_local(cycle(10), 3, 1), Fraction(1, 1));
}

TEST(PhiLocalTest, RejectsRadiusZero) {
  EXPECT_THROW(phi_local(cycle(10), 3, 0), std::invalid_argument);
}

TEST(PhiLocalTest, EqualsGlobalWhenComponentIsInside) {
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = sample_gnp({400, 9.5, derive_seed(14, Stream::kGraph, trial)});
    TriColouring col = global_colouring(g);
    PhiBreakdown phi;
    try {
      phi = phi_global(g, col);
    } catch (const ComponentTooLarge&) {
      continue;  // near the threshold a giant red-purple component can appear
    }
    for (const VertexSet& comp : phi.components) {
      for (Vertex v : comp) {
        const std::vector<int> depth = bfs_depths(g, v, 6);
        int k = 1;
        while (k <= 6) {
          bool inside = true;
          for (Vertex x : comp) {
            inside = inside && depth[x] >= 0 && depth[x] < k;
          }
          if (inside) break;
          ++k;
        }
        if (k > 6) continue;
        EXPECT_EQ(phi_local(g, v, k), phi.per_vertex[v]);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace circumlab
