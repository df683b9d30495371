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

// Small named graphs shared by the unit tests.

#ifndef CIRCUMLAB_TESTS_TEST_GRAPHS_HPP_
#define CIRCUMLAB_TESTS_TEST_GRAPHS_HPP_

#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab::testing_graphs {

inline Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

inline Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    const Vertex v = (u + 1) % n;
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(n, e);
}

inline Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

inline Graph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    const Vertex a = 5 + i, b = 5 + (i + 2) % 5;
    e.emplace_back(std::min(a, b), std::max(a, b));
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

inline Graph from_edges(Vertex n, std::vector<Edge> e) {
  for (auto& [u, v] : e) {
    if (u > v) std::swap(u, v);
  }
  return Graph(n, e);
}

}  // namespace circumlab::testing_graphs

#endif  // CIRCUMLAB_TESTS_TEST_GRAPHS_HPP_
