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

#include "chromatic/preprocess.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace chromatic {
namespace {

// Neighborhoods as bitsets over the original vertex ids.
class DominanceState {
 public:
  explicit DominanceState(const Graph& g)
      : n_(g.num_vertices()),
        words_((n_ + 63) / 64),
        bits_(static_cast<std::size_t>(n_) * words_, 0),
        degree_(n_),
        alive_(n_, 1) {
    for (const Edge& e : g.edges()) {
      set(e.u, e.v);
      set(e.v, e.u);
    }
    for (Vertex v = 0; v < n_; ++v) degree_[v] = g.degree(v);
  }

  bool alive(Vertex v) const { return alive_[v] != 0; }

  // Smallest v that lets u be removed, or -1.
  Vertex dominator_of(Vertex u) const {
    if (degree_[u] == 0) {
      for (Vertex v = 0; v < n_; ++v) {
        if (v != u && alive(v) && (degree_[v] > 0 || v < u)) return v;
      }
      return -1;
    }
    const Vertex w = first_neighbor(u);
    for (Vertex v = 0; v < n_; ++v) {
      if (v == u || !has(w, v) || degree_[v] < degree_[u]) continue;
      if (!subset(u, v)) continue;
      if (degree_[v] > degree_[u] || v < u) return v;
    }
    return -1;
  }

  void remove(Vertex u) {
    alive_[u] = 0;
    for (Vertex x = 0; x < n_; ++x) {
      if (has(u, x)) {
        clear(x, u);
        --degree_[x];
      }
    }
    std::fill_n(row(u), words_, 0);
    degree_[u] = 0;
  }

 private:
  std::uint64_t* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(Vertex v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void set(Vertex v, Vertex x) { row(v)[x / 64] |= std::uint64_t{1} << (x % 64); }
  void clear(Vertex v, Vertex x) { row(v)[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }
  bool has(Vertex v, Vertex x) const { return (row(v)[x / 64] >> (x % 64)) & 1U; }

  Vertex first_neighbor(Vertex u) const {
    for (int w = 0; w < words_; ++w) {
      if (row(u)[w] != 0) return w * 64 + std::countr_zero(row(u)[w]);
    }
    return -1;
  }

  bool subset(Vertex u, Vertex v) const {
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    for (int w = 0; w < words_; ++w) {
      if (a[w] & ~b[w]) return false;
    }
    return true;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
  std::vector<char> alive_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

ReducedInstance remove_dominated(const Graph& g) {
  ReducedInstance r;
  r.original_n = g.num_vertices();
  DominanceState state(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (!state.alive(u)) continue;
      const Vertex v = state.dominator_of(u);
      if (v < 0) continue;
      state.remove(u);
      r.restore_stack.emplace_back(u, v);
      changed = true;
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (state.alive(v)) r.kept.push_back(v);
  }
  r.graph = induced_subgraph(g, r.kept);
  return r;
}

Coloring restore_coloring(const ReducedInstance& r, const Coloring& c) {
  const VerifyReport report = verify_coloring(r.graph, c);
  if (!report.valid) {
    throw std::invalid_argument("restore_coloring: coloring of the reduced "
                                "graph is invalid");
  }
  Coloring full;
  full.colors.assign(r.original_n, 0);
  for (std::size_t i = 0; i < r.kept.size(); ++i) {
    full.colors[r.kept[i]] = c.colors[i];
  }
  for (auto it = r.restore_stack.rbegin(); it != r.restore_stack.rend(); ++it) {
    full.colors[it->first] = full.colors[it->second];
  }
  return full;
}

GreedyBound greedy_upper_bound(const Graph& g) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  GreedyBound out;
  out.coloring.colors.assign(g.num_vertices(), 0);
  std::vector<int> mark(g.num_vertices() + 2, -1);
  for (Vertex v : order) {
    for (Vertex u : g.neighbors(v)) mark[out.coloring.colors[u]] = v;
    int color = 1;
    while (mark[color] == v) ++color;
    out.coloring.colors[v] = color;
    out.colors = std::max(out.colors, color);
  }
  return out;
}

std::vector<Vertex> random_maximal_clique(const Graph& g, Rng& rng) {
  if (g.num_vertices() < 1) {
    throw std::invalid_argument("random_maximal_clique: empty graph");
  }
  const auto start = static_cast<Vertex>(rng.index(g.num_vertices()));
  std::vector<Vertex> clique{start};
  auto nbrs = g.neighbors(start);
  std::vector<Vertex> candidates(nbrs.begin(), nbrs.end());
  std::vector<Vertex> next;
  while (!candidates.empty()) {
    const Vertex v = candidates[rng.index(candidates.size())];
    clique.push_back(v);
    next.clear();
    auto vn = g.neighbors(v);
    std::set_intersection(candidates.begin(), candidates.end(), vn.begin(),
                          vn.end(), std::back_inserter(next));
    candidates.swap(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

long long clique_objective(const Graph& g, std::span<const Vertex> q,
                           int upper_bound, CliqueMode mode) {
  if (!is_clique(g, q)) {
    throw std::invalid_argument("clique_objective: vertex set is not a clique");
  }
  const auto size = static_cast<long long>(q.size());
  if (mode == CliqueMode::kSize) return size;
  return size * upper_bound + cut_size(g, q);
}

CliqueSearch find_clique(const Graph& g, int upper_bound, CliqueMode mode,
                         std::uint64_t seed, double time_budget) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  const int trials = std::max(
      1, static_cast<int>(std::ceil(300.0 * g.num_edges() / std::max(n, 1))));
  CliqueSearch out;
  long long best = -1;
  for (int t = 0; t < trials; ++t) {
    if (t > 0 && seconds_since(start) >= time_budget) {
      out.budget_hit = true;
      break;
    }
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    std::vector<Vertex> q = random_maximal_clique(g, rng);
    const long long score = clique_objective(g, q, upper_bound, mode);
    ++out.trials;
    if (score > best) {
      best = score;
      out.clique = std::move(q);
    }
  }
  return out;
}

PreprocessedInstance preprocess_pipeline(const Graph& g,
                                         const PreprocessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  PreprocessedInstance inst;
  inst.reduced = remove_dominated(g);
  const Graph& reduced = inst.reduced.graph;
  GreedyBound greedy = greedy_upper_bound(reduced);
  inst.upper_bound = greedy.colors;
  inst.greedy_coloring = std::move(greedy.coloring);
  CliqueSearch search = find_clique(reduced, inst.upper_bound, options.mode,
                                    options.seed, options.clique_time_budget);
  inst.clique = std::move(search.clique);
  inst.clique_trials = search.trials;
  inst.anchor = inst.clique.front();
  for (Vertex v : inst.clique) {
    if (reduced.degree(v) > reduced.degree(inst.anchor)) inst.anchor = v;
  }
  inst.lower_bound = static_cast<int>(inst.clique.size());
  inst.solved_in_preprocessing = inst.lower_bound == inst.upper_bound;
  inst.seconds = seconds_since(start);
  return inst;
}

}  // namespace chromatic
