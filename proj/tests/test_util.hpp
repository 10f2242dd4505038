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

// Helpers shared by the unit tests: seeded graph streams and brute-force
// references that do not reuse any library algorithm.

#ifndef CHROMATIC_TESTS_TEST_UTIL_HPP
#define CHROMATIC_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/milp_model.hpp"
#include "chromatic/rng.hpp"

namespace chromatic::testing {

// G(n, p) built here rather than through the generators module.
inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

// Chromatic number by enumerating set partitions into independent sets
// (restricted growth strings). Feasible up to about 11 vertices.
inline int brute_force_chi(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<int> color(n, 0);
  int best = n;
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (used >= best) return;
    if (v == n) {
      best = used;
      return;
    }
    for (int c = 1; c <= used + 1; ++c) {
      bool ok = true;
      for (Vertex u : g.neighbors(v)) {
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      rec(v + 1, std::max(used, c));
      color[v] = 0;
    }
  };
  rec(0, 0);
  return best;
}

// Minimum of a binary model over all assignments to its free variables,
// or nullopt when infeasible. Only for models with at most ~22 free
// variables.
inline std::optional<double> brute_force_minimum(const MilpModel& m) {
  const int n = m.num_variables();
  std::vector<int> free;
  std::vector<double> x(n, 0.0);
  for (int v = 0; v < n; ++v) {
    auto it = m.fixings().find(v);
    if (it == m.fixings().end()) {
      free.push_back(v);
    } else {
      x[v] = it->second;
    }
  }
  std::optional<double> best;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) x[free[i]] = (mask >> i) & 1;
    if (!violated_constraints(m, x, 1e-9).empty()) continue;
    const double obj = objective_value(m, x);
    if (!best || obj < *best) best = obj;
  }
  return best;
}

}  // namespace chromatic::testing

#endif  // CHROMATIC_TESTS_TEST_UTIL_HPP
