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

#include "chromatic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace chromatic {
namespace {

using Mask = std::uint64_t;

class Backtracker {
 public:
  Backtracker(const Graph& g, int k) : g_(g), k_(k), color_(g.num_vertices(), 0) {
    adj_.assign(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  bool run() { return search(0, 0); }
  const std::vector<int>& colors() const { return color_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  // Bitmask of colors (bit c-1) already used by neighbors of v.
  Mask saturation(Vertex v) const {
    Mask used = 0;
    for (Vertex u : g_.neighbors(v)) {
      if (color_[u] > 0) used |= Mask{1} << (color_[u] - 1);
    }
    return used;
  }

  bool search(int colored, int max_used) {
    ++nodes_;
    const int n = g_.num_vertices();
    if (colored == n) return true;

    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    Mask best_mask = 0;
    Mask uncolored = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] == 0) uncolored |= Mask{1} << v;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] != 0) continue;
      const Mask sat = saturation(v);
      const int s = std::popcount(sat);
      const int d = std::popcount(adj_[v] & uncolored);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
        best_mask = sat;
      }
    }
    if (best_sat >= k_) return false;

    const int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (best_mask & (Mask{1} << (c - 1))) continue;
      color_[best] = c;
      if (search(colored + 1, std::max(max_used, c))) return true;
      color_[best] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Mask> adj_;
  std::vector<int> color_;
  std::int64_t nodes_ = 0;
};

void check_cap(const Graph& g, int cap) {
  if (cap > 64) throw OracleCapError("oracle cap cannot exceed 64 vertices");
  if (g.num_vertices() > cap) {
    throw OracleCapError("oracle limited to " + std::to_string(cap) +
                         " vertices, graph has " +
                         std::to_string(g.num_vertices()));
  }
}

// Largest clique found by growing greedily from every start vertex.
int greedy_clique_size(const Graph& g) {
  int best = g.num_vertices() > 0 ? 1 : 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    std::vector<Vertex> clique{s};
    for (Vertex v : g.neighbors(s)) {
      if (std::all_of(clique.begin(), clique.end(),
                      [&](Vertex u) { return g.adjacent(u, v); })) {
        clique.push_back(v);
      }
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

Coloring first_fit(const Graph& g) {
  Coloring c;
  c.colors.assign(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<char> taken(g.num_vertices() + 2, 0);
    for (Vertex u : g.neighbors(v)) taken[c.colors[u]] = 1;
    int color = 1;
    while (taken[color]) ++color;
    c.colors[v] = color;
  }
  return c;
}

}  // namespace

KColorResult is_k_colorable(const Graph& g, int k, int cap) {
  check_cap(g, cap);
  if (k < 1) throw std::invalid_argument("is_k_colorable: k must be >= 1");
  KColorResult result;
  Backtracker search(g, std::min(k, 64));
  result.colorable = search.run();
  result.nodes_explored = search.nodes();
  if (result.colorable) result.witness = Coloring{search.colors()};
  return result;
}

OracleResult chromatic_number_exact(const Graph& g, int cap) {
  check_cap(g, cap);
  OracleResult result;
  if (g.num_vertices() == 0) return result;
  const Coloring greedy = first_fit(g);
  const int upper = greedy.num_colors();
  for (int k = greedy_clique_size(g); k < upper; ++k) {
    KColorResult attempt = is_k_colorable(g, k, cap);
    result.nodes_explored += attempt.nodes_explored;
    if (attempt.colorable) {
      result.chi = k;
      result.witness = std::move(*attempt.witness);
      return result;
    }
  }
  result.chi = upper;
  result.witness = greedy;
  return result;
}

}  // namespace chromatic
