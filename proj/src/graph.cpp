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

#include "chromatic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace chromatic {

Graph::Graph(int num_vertices) : n_(num_vertices), adj_(num_vertices) {
  if (num_vertices < 0) {
    throw std::invalid_argument("negative vertex count");
  }
}

Graph::Graph(int num_vertices, std::span<const Edge> edges)
    : Graph(num_vertices) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " +
                                  std::to_string(e.u));
    }
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::non_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(n_ - adj_[v].size());
  auto it = adj_[v].begin();
  for (Vertex u = 0; u < n_; ++u) {
    if (it != adj_[v].end() && *it == u) {
      ++it;
      continue;
    }
    if (u != v) out.push_back(u);
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.num_edges());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.non_neighbors(u)) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

int cut_size(const Graph& g, std::span<const Vertex> q) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : q) in[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) ++count;
  }
  return count;
}

int Coloring::num_colors() const {
  std::unordered_set<int> seen;
  for (int c : colors) {
    if (c > 0) seen.insert(c);
  }
  return static_cast<int>(seen.size());
}

bool Coloring::is_total() const {
  return std::all_of(colors.begin(), colors.end(),
                     [](int c) { return c >= 1; });
}

VerifyReport verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices()) {
    throw std::invalid_argument(
        "coloring covers " + std::to_string(c.colors.size()) +
        " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    if (c.colors[v] < 1) {
      throw std::invalid_argument("vertex " + std::to_string(v + 1) +
                                  " has no color");
    }
  }
  VerifyReport report;
  for (const Edge& e : g.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) report.violating_edges.push_back(e);
  }
  report.valid = report.violating_edges.empty();
  report.colors_used = c.num_colors();
  return report;
}

}  // namespace chromatic
