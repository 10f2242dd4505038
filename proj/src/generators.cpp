// Copyright 2026 The Chromatic Authors
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

#include "chromatic/generators.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "chromatic/rng.hpp"

namespace chromatic {

Graph gnp_random(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp_random: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gnp_random: p must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph(10, edges);
}

Graph full_insertions(int k, int l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("full_insertions: need k >= 1 and l >= 1");
  }
  int n = 2;
  std::vector<Edge> edges{{0, 1}};
  const int layers = k + 2;
  for (int step = 1; step < l; ++step) {
    const auto at = [n](Vertex v, int layer) { return layer * n + v; };
    const int apex0 = n * layers;
    std::vector<Edge> next;
    next.reserve(edges.size() * (2 * layers - 1) + (n + layers) * layers);
    for (const Edge& e : edges) {
      next.push_back(e);
      for (int i = 1; i < layers; ++i) {
        next.push_back({at(e.u, i), at(e.v, i - 1)});
        next.push_back({at(e.v, i), at(e.u, i - 1)});
      }
    }
    for (int i = 0; i < layers; ++i) {
      for (Vertex v = 0; v < n; ++v) next.push_back({at(v, i), apex0 + i});
      for (int j = i + 1; j < layers; ++j) {
        next.push_back({apex0 + i, apex0 + j});
      }
    }
    n = n * layers + layers;
    edges = std::move(next);
  }
  return Graph(n, edges);
}

Graph hajos_k4_chain(int copies, std::uint64_t seed) {
  if (copies < 1) throw std::invalid_argument("hajos_k4_chain: copies >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) edges.push_back({u, v});
  }
  int n = 4;
  for (int c = 1; c < copies; ++c) {
    // Join at a random edge (x, y) of the current graph and an edge of a new
    // K4 on {x, a, b, d}: drop (x, y) and (x, a), then add (y, a).
    const std::size_t pick = rng.index(edges.size());
    Edge cut = edges[pick];
    if (rng.index(2) == 1) std::swap(cut.u, cut.v);
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
    const Vertex x = cut.u;
    const Vertex y = cut.v;
    const Vertex a = n;
    const Vertex b = n + 1;
    const Vertex d = n + 2;
    n += 3;
    edges.push_back({x, b});
    edges.push_back({x, d});
    edges.push_back({a, b});
    edges.push_back({a, d});
    edges.push_back({b, d});
    edges.push_back({y, a});
  }
  return Graph(n, edges);
}

}  // namespace chromatic
