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

#ifndef CHROMATIC_GRAPH_HPP
#define CHROMATIC_GRAPH_HPP

#include <compare>
#include <span>
#include <vector>

namespace chromatic {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
//
// Immutable after construction. Edges are kept in canonical (sorted,
// u < v) order and neighbor lists are sorted, so any iteration over the
// graph is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Duplicate and reversed pairs collapse to one edge. Throws
  // std::invalid_argument on a self-loop or an endpoint outside [0, n).
  Graph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const;

  // Vertices other than v that are not adjacent to v, ascending.
  std::vector<Vertex> non_neighbors(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Graph on the same vertices with exactly the pairs g does not have.
Graph complement(const Graph& g);

// Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

// Number of edges with exactly one endpoint in `q` (the cut of q).
int cut_size(const Graph& g, std::span<const Vertex> q);

// Vertex coloring. colors[v] is the color of v, numbered from 1; a 0 marks
// an uncolored vertex.
struct Coloring {
  std::vector<int> colors;

  int num_colors() const;
  bool is_total() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct VerifyReport {
  bool valid = false;
  std::vector<Edge> violating_edges;
  int colors_used = 0;
};

// Checks every edge. Throws std::invalid_argument when the coloring does
// not assign a color >= 1 to every vertex of g.
VerifyReport verify_coloring(const Graph& g, const Coloring& c);

}  // namespace chromatic

#endif  // CHROMATIC_GRAPH_HPP
