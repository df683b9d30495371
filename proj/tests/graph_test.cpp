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

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "circumlab/rng.hpp"
#include "test_graphs.hpp"

namespace circumlab {
namespace {

TEST(GraphTest, RejectsLoopsAndDuplicates) {
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), std::invalid_argument);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(3, dup), std::invalid_argument);
  std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph(3, range), std::invalid_argument);
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  Graph g = sample_gnp({200, 8.0, 11});
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbours(v);
    total += static_cast<std::int64_t>(nb.size());
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex u : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(u, v));
    }
  }
  EXPECT_EQ(total, 2 * g.num_edges());
}

TEST(SampleGnpTest, ZeroProbabilityIsEdgeless) {
  Graph g = sample_gnp({5, 0.0, 123});
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(SampleGnpTest, FullProbabilityIsComplete) {
  Graph g = sample_gnp({5, 5.0, 99});
  EXPECT_EQ(g, testing_graphs::complete(5));
}

TEST(SampleGnpTest, RejectsBadParameters) {
  EXPECT_THROW(sample_gnp({5, 6.0, 1}), std::invalid_argument);
  EXPECT_THROW(sample_gnp({5, -1.0, 1}), std::invalid_argument);
  EXPECT_THROW(sample_gnp({0, 0.0, 1}), std::invalid_argument);
}

TEST(SampleGnpTest, EdgeCountWithinThreeSigma) {
  const Vertex n = 10000;
  Graph g = sample_gnp({n, 20.0, 1});
  const double pairs = 0.5 * n * (n - 1.0);
  const double p = 20.0 / n;
  const double mean = pairs * p;
  const double sd = std::sqrt(pairs * p * (1 - p));
  EXPECT_NEAR(static_cast<double>(g.num_edges()), mean, 3 * sd);
}

TEST(SampleGnpTest, Deterministic) {
  EXPECT_EQ(sample_gnp({1000, 7.5, 42}), sample_gnp({1000, 7.5, 42}));
  EXPECT_FALSE(sample_gnp({1000, 7.5, 42}) == sample_gnp({1000, 7.5, 43}));
}

TEST(SampleGnpTest, MeanDegreeMatches) {
  const Vertex n = 100;
  const double c = 5.0;
  double sum = 0, sum_sq = 0;
  const int samples = 1000;
  for (int i = 0; i < samples; ++i) {
    Graph g = sample_gnp({n, c, derive_seed(5, Stream::kGraph, i)});
    const double mean_deg = 2.0 * g.num_edges() / n;
    sum += mean_deg;
    sum_sq += mean_deg * mean_deg;
  }
  const double mean = sum / samples;
  const double var = (sum_sq - samples * mean * mean) / (samples - 1);
  const double se = std::sqrt(var / samples);
  EXPECT_NEAR(mean, c * (n - 1) / n, 3 * se);
}

TEST(BallTest, RadiusZeroIsCentre) {
  Graph g = sample_gnp({50, 4.0, 3});
  for (Vertex v = 0; v < 50; ++v) EXPECT_EQ(ball(g, v, 0), VertexSet{v});
}

TEST(BallTest, CycleRadiusOne) {
  Graph c10 = testing_graphs::cycle(10);
  EXPECT_EQ(ball(c10, 0, 1), (VertexSet{0, 1, 9}));
  EXPECT_EQ(ball(c10, 5, 1), (VertexSet{4, 5, 6}));
}

TEST(BallTest, PathSphere) {
  Graph p5 = testing_graphs::path(5);  // a-b-c-d-e = 0-1-2-3-4
  EXPECT_EQ(ball(p5, 2, 2), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(sphere(p5, 2, 2), (VertexSet{0, 4}));
}

TEST(BallTest, NestedAndSphereIsDifference) {
  Graph g = sample_gnp({300, 3.0, 17});
  for (Vertex v = 0; v < 300; v += 7) {
    for (int k = 1; k <= 5; ++k) {
      const VertexSet inner = ball(g, v, k - 1);
      const VertexSet outer = ball(g, v, k);
      EXPECT_TRUE(is_subset(inner, outer));
      EXPECT_EQ(sphere(g, v, k), set_difference(outer, inner));
    }
  }
}

TEST(BallTest, WorkspaceMatchesFreshBfs) {
  Graph g = sample_gnp({500, 4.0, 8});
  BfsWorkspace ws(g.num_vertices());
  for (Vertex v = 0; v < 500; v += 13) {
    VertexSet got;
    for (const auto& [x, d] : ws.run(g, v, 3)) got.push_back(x);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, ball(g, v, 3));
    const std::vector<int> depth = bfs_depths(g, v, 3);
    for (Vertex x = 0; x < 500; ++x) EXPECT_EQ(ws.depth(x), depth[x]);
  }
}

TEST(ComponentsTest, EmptySubset) {
  EXPECT_TRUE(components(testing_graphs::complete(5), VertexSet{}).empty());
}

TEST(ComponentsTest, EdgelessGivesSingletons) {
  Graph g(4);
  auto blocks = components(g, VertexSet{0, 1, 2, 3});
  ASSERT_EQ(blocks.size(), 4u);
  for (const auto& b : blocks) EXPECT_EQ(b.size(), 1u);
}

TEST(ComponentsTest, TwoTriangles) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  Graph g(6, e);
  auto blocks = components(g, VertexSet{0, 1, 2, 3, 4, 5});
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(blocks[1], (VertexSet{3, 4, 5}));
}

TEST(ComponentsTest, InducedOnly) {
  Graph p5 = testing_graphs::path(5);
  auto blocks = components(p5, VertexSet{0, 1, 3, 4});
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], (VertexSet{0, 1}));
  EXPECT_EQ(blocks[1], (VertexSet{3, 4}));
}

TEST(FlipTest, PresentEdge) {
  Graph g = testing_graphs::path(4);
  FlipPair f(g, 1, 2);
  EXPECT_TRUE(f.base_has_edge());
  EXPECT_FALSE(f.minus().has_edge(1, 2));
  EXPECT_EQ(f.minus().num_edges(), 2);
  EXPECT_EQ(f.plus().materialize(), g);
}

TEST(FlipTest, AbsentEdge) {
  Graph g = testing_graphs::path(4);
  FlipPair f(g, 3, 0);
  EXPECT_FALSE(f.base_has_edge());
  EXPECT_TRUE(f.plus().has_edge(0, 3));
  EXPECT_TRUE(f.plus().has_edge(3, 0));
  EXPECT_EQ(f.plus().num_edges(), 4);
  EXPECT_EQ(f.minus().materialize(), g);
  EXPECT_EQ(f.plus().materialize(), testing_graphs::cycle(4));
}

TEST(FlipTest, TriangleAnyPair) {
  Graph k3 = testing_graphs::complete(3);
  FlipPair f(k3, 0, 2);
  EXPECT_EQ(f.plus().materialize(), k3);
}

TEST(FlipTest, RejectsEqualEndpoints) {
  Graph g(3);
  EXPECT_THROW(FlipPair(g, 1, 1), std::invalid_argument);
}

TEST(FlipTest, RoundTrip) {
  Graph g = sample_gnp({60, 6.0, 21});
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Vertex u = static_cast<Vertex>(uniform_below(rng, 60));
    Vertex v = static_cast<Vertex>(uniform_below(rng, 59));
    if (v >= u) ++v;
    FlipPair once(g, u, v);
    const Graph toggled = g.has_edge(u, v) ? once.minus().materialize()
                                           : once.plus().materialize();
    FlipPair twice(toggled, u, v);
    const Graph back = toggled.has_edge(u, v) ? twice.minus().materialize()
                                              : twice.plus().materialize();
    EXPECT_EQ(back, g);
    // Views differ from each other exactly in {u, v}.
    const Graph plus = once.plus().materialize();
    const Graph minus = once.minus().materialize();
    EXPECT_EQ(plus.num_edges(), minus.num_edges() + 1);
    EXPECT_TRUE(plus.has_edge(u, v));
    EXPECT_FALSE(minus.has_edge(u, v));
  }
}

TEST(EdgeListTest, RoundTrip) {
  Graph g = sample_gnp({40, 5.0, 2});
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeListTest, ReportsBadLine) {
  std::stringstream ss("3 2\n0 1\n1 x\n");
  try {
    read_edge_list(ss);
    FAIL() << "expected parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::stringstream short_input("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_input), std::runtime_error);
}

TEST(SeedTest, StreamsDiffer) {
  EXPECT_NE(derive_seed(1, Stream::kGraph, 0), derive_seed(1, Stream::kFlip, 0));
  EXPECT_NE(derive_seed(1, Stream::kGraph, 0), derive_seed(1, Stream::kGraph, 1));
  EXPECT_EQ(derive_seed(9, Stream::kBins, 5), derive_seed(9, Stream::kBins, 5));
}

}  // namespace
}  // namespace circumlab
