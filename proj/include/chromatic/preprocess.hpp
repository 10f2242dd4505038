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

#ifndef CHROMATIC_PREPROCESS_HPP
#define CHROMATIC_PREPROCESS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/rng.hpp"

namespace chromatic {

// Dominance reduction result. Vertex i of `graph` is vertex kept[i] of the
// original graph; restore_stack lists (removed, dominator) pairs, both in
// original numbering, in removal order.
struct ReducedInstance {
  Graph graph;
  std::vector<Vertex> kept;
  std::vector<std::pair<Vertex, Vertex>> restore_stack;
  int original_n = 0;
};

// Clique selection objective: kSize maximizes |Q|, kExtended maximizes
// |Q| * H + |cut(Q)| (more variables can be fixed).
enum class CliqueMode { kSize, kExtended };

struct PreprocessOptions {
  CliqueMode mode = CliqueMode::kExtended;
  std::uint64_t seed = 0;
  double clique_time_budget = 60.0;  // seconds
};

struct PreprocessedInstance {
  ReducedInstance reduced;
  int upper_bound = 0;        // H, colors used by greedy_coloring
  Coloring greedy_coloring;   // on reduced.graph
  std::vector<Vertex> clique; // Q, reduced numbering, ascending
  Vertex anchor = 0;          // q: clique vertex that takes the top color
  int lower_bound = 0;        // |Q|
  bool solved_in_preprocessing = false;
  int clique_trials = 0;
  double seconds = 0.0;

  const Graph& graph() const { return reduced.graph; }
};

// Repeatedly deletes a vertex u whose neighborhood is contained in the
// neighborhood of another vertex v until no such pair is left. Scans
// vertices in ascending order and records the smallest dominator; when
// N(u) == N(v) the higher-numbered vertex is the one removed.
ReducedInstance remove_dominated(const Graph& g);

// Extends a coloring of r.graph to the original graph: each removed vertex
// takes the color of its dominator, processed in reverse removal order.
// Throws std::invalid_argument if c is partial or invalid on r.graph.
Coloring restore_coloring(const ReducedInstance& r, const Coloring& c);

struct GreedyBound {
  int colors = 0;
  Coloring coloring;
};

// Largest-degree-first order (ties by vertex id), smallest free color.
GreedyBound greedy_upper_bound(const Graph& g);

// Maximal clique grown from a random start vertex by repeatedly adding a
// random vertex adjacent to every member (a random maximal independent set
// of the complement). Returned ascending.
std::vector<Vertex> random_maximal_clique(const Graph& g, Rng& rng);

// Throws std::invalid_argument if q is not a clique of g.
long long clique_objective(const Graph& g, std::span<const Vertex> q,
                           int upper_bound, CliqueMode mode);

struct CliqueSearch {
  std::vector<Vertex> clique;
  int trials = 0;
  bool budget_hit = false;
};

// Best of ceil(300 |E| / |V|) (at least one) random maximal cliques under
// clique_objective, stopping early once `time_budget` seconds have passed.
// Trial t draws from Rng::derive(seed, t).
CliqueSearch find_clique(const Graph& g, int upper_bound, CliqueMode mode,
                         std::uint64_t seed, double time_budget = 60.0);

// Dominance reduction, greedy bound and clique search on the reduced graph.
PreprocessedInstance preprocess_pipeline(const Graph& g,
                                         const PreprocessOptions& options = {});

}  // namespace chromatic

#endif  // CHROMATIC_PREPROCESS_HPP
