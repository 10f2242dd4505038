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

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "chromatic/formulations.hpp"
#include "chromatic/generators.hpp"
#include "chromatic/oracle.hpp"
#include "test_util.hpp"

using namespace chromatic;
using chromatic::testing::brute_force_chi;
using chromatic::testing::brute_force_minimum;

namespace {

MilpModel build(Formulation f, const Graph& g, int H, Vertex q) {
  switch (f) {
    case Formulation::kAssS: return build_ass_s(g, H);
    case Formulation::kAss: return build_ass(g, H);
    case Formulation::kPop: return build_pop(g, H, q);
    case Formulation::kPop2: return build_pop2(g, H, q);
    case Formulation::kRep: return build_rep(g);
  }
  throw std::logic_error("unreachable");
}

int x(const MilpModel& m, Vertex v, int i) {
  return m.meta().x[v * m.meta().upper_bound + i - 1];
}
int y(const MilpModel& m, int i, Vertex v) {
  return m.meta().y[v * (m.meta().upper_bound - 1) + i - 1];
}

std::optional<int> fixed(const MilpModel& m, int var) {
  auto it = m.fixings().find(var);
  if (it == m.fixings().end()) return std::nullopt;
  return it->second;
}

// Greedy H and a clique with its max-degree anchor, computed here.
struct Setup {
  int H;
  std::vector<Vertex> clique;
  Vertex anchor;
};

Setup setup(const Graph& g) {
  const int H = std::max(2, greedy_upper_bound(g).colors);
  std::vector<Vertex> q;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (std::all_of(q.begin(), q.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
      q.push_back(v);
    }
  }
  Vertex anchor = q.front();
  for (Vertex v : q) {
    if (g.degree(v) > g.degree(anchor)) anchor = v;
  }
  return {H, q, anchor};
}

}  // namespace

TEST_CASE("assignment model dimensions on K3") {
  const Graph k3 = complete_graph(3);
  const MilpModel s = build_ass_s(k3, 3);
  CHECK(s.num_variables() == 12);
  CHECK(s.constraints().size() == 12);
  CHECK(model_stats(s).num_vars == 12);
  const MilpModel a = build_ass(k3, 3);
  CHECK(a.constraints().size() == 17);
  CHECK(model_stats(a).block(Block::kColorUse).rows == 3);
  CHECK(model_stats(a).block(Block::kColorOrder).rows == 2);
  CHECK(s.variable_name(x(s, 0, 1)) == "x_1_1");
  CHECK(s.variable_name(s.meta().w[2]) == "w_3");
}

TEST_CASE("single vertex with one color") {
  const MilpModel m = build_ass_s(Graph(1), 1);
  CHECK(m.num_variables() == 2);
  // The assignment row, plus x_1_1 <= w_1 since the vertex has no edge.
  CHECK(m.constraints().size() == 2);
  CHECK(brute_force_minimum(m) == 1.0);
  CHECK(brute_force_minimum(build_ass(Graph(3), 2)) == 1.0);
  CHECK_THROWS_AS(build_ass_s(Graph(1), 0), std::invalid_argument);
}

TEST_CASE("dimension formulas on random graphs") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const int n = 5 + static_cast<int>(rng.index(30));
    const Graph g = testing::random_graph(n, 0.1 + 0.04 * t, rng);
    long long isolated = 0;
    for (Vertex v = 0; v < n; ++v) isolated += g.degree(v) == 0;
    const int H = std::max(2, greedy_upper_bound(g).colors);
    const long long V = n, E = g.num_edges();
    const MilpModel s = build_ass_s(g, H);
    CHECK(s.num_variables() == H * (V + 1));
    CHECK(static_cast<long long>(s.constraints().size()) == V + H * E + H * isolated);
    const MilpModel a = build_ass(g, H);
    CHECK(a.constraints().size() == s.constraints().size() + 2 * H - 1);

    const MilpModel pop = build_pop(g, H, 0);
    CHECK(model_stats(pop).num_vars == (H - 1) * V);
    const ModelStats ps = model_stats(pop);
    CHECK(ps.block(Block::kEdge).structural_nonzeros == 4 * E * H);
    CHECK(ps.block(Block::kEdge).nonzeros == E * (4 * H - 4));
    CHECK(ps.block(Block::kEdge).rows == E * H);
    CHECK(ps.block(Block::kTransitivity).rows == (H - 2) * V);
    CHECK(ps.block(Block::kAnchor).rows == (H - 1) * (V - 1));

    const ModelStats p2 = model_stats(build_pop2(g, H, 0));
    const long long pop2_structural = p2.block(Block::kEdge).structural_nonzeros +
                                      p2.block(Block::kLink).structural_nonzeros;
    CHECK(pop2_structural == 2 * E * H + 3 * V * H);
    CHECK(p2.block(Block::kEdge).nonzeros + p2.block(Block::kLink).nonzeros ==
          2 * E * H + V * (3 * H - 2));
    CHECK(p2.num_vars == (H - 1) * V + H * V);
  }
}

TEST_CASE("edge-block nonzeros on K4 and K10") {
  const auto count = [](const Graph& g, int H) {
    const ModelStats pop = model_stats(build_pop(g, H, 0));
    const ModelStats pop2 = model_stats(build_pop2(g, H, 0));
    return std::pair{pop.block(Block::kEdge).structural_nonzeros,
                     pop2.block(Block::kEdge).structural_nonzeros +
                         pop2.block(Block::kLink).structural_nonzeros};
  };
  const auto [pop4, pop2_4] = count(complete_graph(4), 4);
  CHECK(pop4 == 96);
  CHECK(pop2_4 == 96);
  const auto [pop10, pop2_10] = count(complete_graph(10), 10);
  CHECK(pop10 == 1800);
  CHECK(pop2_10 == 1200);
  CHECK(pop2_10 < pop10);
}

TEST_CASE("partial-ordering models on small graphs") {
  const Graph k2 = complete_graph(2);
  CHECK(brute_force_minimum(build_pop(k2, 2, 0)) == 2.0);
  CHECK(brute_force_minimum(build_pop2(k2, 2, 0)) == 2.0);
  CHECK(brute_force_minimum(build_pop(cycle_graph(5), 3, 0)) == 3.0);
  CHECK(brute_force_minimum(build_ass(cycle_graph(5), 3)) == 3.0);
  CHECK_THROWS_AS(build_pop(k2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_pop(k2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_pop2(k2, 2, -1), std::invalid_argument);
}

TEST_CASE("every integral partial-ordering point decodes to one color per vertex") {
  const Graph g = cycle_graph(4);
  const MilpModel m = build_pop(g, 4, 0);  // 12 variables
  std::vector<double> v(m.num_variables());
  int feasible = 0;
  for (std::uint32_t mask = 0; mask < (1u << m.num_variables()); ++mask) {
    for (int j = 0; j < m.num_variables(); ++j) v[j] = (mask >> j) & 1;
    if (!violated_constraints(m, v, 1e-9).empty()) continue;
    ++feasible;
    for (Vertex u = 0; u < 4; ++u) {
      for (int i = 1; i < 3; ++i) CHECK(v[y(m, i, u)] >= v[y(m, i + 1, u)]);
    }
    const Coloring c = extract_coloring(m, v);
    CHECK(verify_coloring(g, c).valid);
    CHECK(c.num_colors() <= objective_value(m, v));
  }
  CHECK(feasible > 0);
}

TEST_CASE("representatives model") {
  const MilpModel kn = build_rep(complete_graph(4));
  CHECK(kn.num_variables() == 4);
  CHECK(brute_force_minimum(kn) == 4.0);

  const ModelStats c5 = model_stats(build_rep(cycle_graph(5)));
  CHECK(c5.comparable_vars == 10);
  CHECK(c5.num_vars == 15);

  const Graph two(2);
  CHECK(brute_force_minimum(build_rep(two)) == 1.0);
  CHECK(brute_force_minimum(build_rep(two, {.isolated_rows = false})) == 0.0);
}

TEST_CASE("all formulations reach the chromatic number on tiny graphs") {
  Rng rng(43);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng.index(4));
    const Graph g = testing::random_graph(n, 0.3 + 0.1 * (t % 5), rng);
    const int chi = brute_force_chi(g);
    const int H = std::max(2, greedy_upper_bound(g).colors);
    for (Formulation f : kAllFormulations) {
      const MilpModel m = build(f, g, H, 0);
      if (m.num_variables() > 22) continue;
      CHECK(brute_force_minimum(m) == chi);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("assignment fixings on K3") {
  const MilpModel m = apply_clique_fixings(build_ass(complete_graph(3), 3),
                                           std::vector<Vertex>{0, 1, 2}, 2);
  CHECK(fixed(m, x(m, 0, 1)) == 1);
  CHECK(fixed(m, x(m, 1, 2)) == 1);
  CHECK(fixed(m, x(m, 2, 3)) == 1);
  int zeros = 0;
  for (Vertex v = 0; v < 3; ++v) {
    for (int i = 1; i <= 3; ++i) zeros += fixed(m, x(m, v, i)) == 0;
  }
  CHECK(zeros == 6);
  CHECK(fixed(m, m.meta().w[0]) == 1);
  CHECK(fixed(m, m.meta().w[1]) == 1);
  CHECK(brute_force_minimum(m) == 3.0);
}

TEST_CASE("partial-ordering fixings on P3") {
  const Graph p3 = path_graph(3);
  const MilpModel m = apply_clique_fixings(build_pop(p3, 2, 1), std::vector<Vertex>{0, 1}, 1);
  CHECK(fixed(m, y(m, 1, 0)) == 0);
  CHECK(fixed(m, y(m, 1, 1)) == 1);
  CHECK_FALSE(fixed(m, y(m, 1, 2)));
  CHECK(model_stats(m).block(Block::kFixing).rows == 0);
  CHECK(brute_force_minimum(m) == 2.0);
}

TEST_CASE("cut edges of a middle color become equalities") {
  // Clique {0,1,2} with anchor 2; vertex 1 takes color 2 and vertex 3 hangs
  // off it, so color 2 is excluded for 3 by y_{1,3} = y_{2,3}.
  const std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}, {1, 3}};
  const Graph g(4, e);
  const MilpModel m =
      apply_clique_fixings(build_pop(g, 4, 2), std::vector<Vertex>{0, 1, 2}, 2);
  REQUIRE(model_stats(m).block(Block::kFixing).rows == 1);
  CHECK(brute_force_minimum(m) == 3.0);
  const MilpModel m2 =
      apply_clique_fixings(build_pop2(g, 4, 2), std::vector<Vertex>{0, 1, 2}, 2);
  CHECK(fixed(m2, x(m2, 3, 2)) == 0);
}

TEST_CASE("fixings are consistent and keep the optimum") {
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng.index(4));
    const Graph g = testing::random_graph(n, 0.5, rng);
    const Setup s = setup(g);
    const int chi = brute_force_chi(g);
    for (Formulation f : kAllFormulations) {
      const Vertex q = f == Formulation::kPop || f == Formulation::kPop2 ? s.anchor : 0;
      MilpModel m = apply_clique_fixings(build(f, g, s.H, q), s.clique, s.anchor);
      if (f == Formulation::kAssS || f == Formulation::kAss) {
        CHECK(model_stats(m).num_fixed >= static_cast<int>(s.clique.size()) * s.H);
      }
      if (m.num_variables() - static_cast<int>(m.fixings().size()) > 22) continue;
      CHECK(brute_force_minimum(m) == chi);
    }
  }
}

TEST_CASE("conflicting fixings are reported") {
  MilpModel m = build_ass(complete_graph(3), 3);
  m.fix(x(m, 0, 1), 0);
  CHECK_THROWS_AS(apply_clique_fixings(std::move(m), std::vector<Vertex>{0, 1, 2}, 2),
                  FixingConflict);
  CHECK_THROWS_AS(apply_clique_fixings(build_ass(path_graph(3), 2),
                                       std::vector<Vertex>{0, 2}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_clique_fixings(build_ass(complete_graph(3), 2),
                                       std::vector<Vertex>{0, 1, 2}, 0),
                  std::invalid_argument);
}

TEST_CASE("extraction examples") {
  const MilpModel pop = build_pop(complete_graph(2), 2, 0);
  std::vector<double> v(pop.num_variables(), 0.0);
  v[y(pop, 1, 0)] = 1.0;
  CHECK(extract_coloring(pop, v) == Coloring{{2, 1}});

  const MilpModel ass = build_ass(complete_graph(3), 3);
  std::vector<double> a(ass.num_variables(), 0.0);
  for (Vertex u = 0; u < 3; ++u) a[x(ass, u, u + 1)] = 1.0;
  for (int w : ass.meta().w) a[w] = 1.0;
  CHECK(extract_coloring(ass, a) == Coloring{{1, 2, 3}});

  const MilpModel rep = build_rep(Graph(2));
  std::vector<double> r(rep.num_variables(), 0.0);
  r[rep.find_variable("r_1_1")] = 1.0;
  r[rep.find_variable("r_1_2")] = 1.0;
  CHECK(extract_coloring(rep, r) == Coloring{{1, 1}});

  a[x(ass, 0, 1)] = 0.5;
  CHECK_THROWS_AS(extract_coloring(ass, a), ExtractionError);
  a[x(ass, 0, 1)] = 0.0;
  CHECK_THROWS_AS(extract_coloring(ass, a), ExtractionError);
  a[x(ass, 0, 1)] = 1.0 - 1e-7;
  CHECK(extract_coloring(ass, a) == Coloring{{1, 2, 3}});
}

TEST_CASE("encoded optimal colorings are feasible and decode back") {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + static_cast<int>(rng.index(9));
    const Graph g = testing::random_graph(n, 0.15 + 0.15 * (t % 5), rng);
    const Setup s = setup(g);
    const OracleResult opt = chromatic_number_exact(g);
    for (Formulation f : kAllFormulations) {
      const Vertex q = f == Formulation::kPop || f == Formulation::kPop2 ? s.anchor : 0;
      const MilpModel m = apply_clique_fixings(build(f, g, s.H, q), s.clique, s.anchor);
      const std::vector<double> v = encode_coloring(m, opt.witness);
      CHECK(violated_constraints(m, v, 1e-9).empty());
      CHECK(objective_value(m, v) == doctest::Approx(opt.chi));
      const Coloring back = extract_coloring(m, v);
      CHECK(verify_coloring(g, back).valid);
      CHECK(back.num_colors() == opt.chi);
    }
  }
}

TEST_CASE("fractional witnesses of weak relaxations") {
  Rng rng(59);
  for (int t = 0; t < 10; ++t) {
    const int n = 6 + static_cast<int>(rng.index(10));
    const Graph g = testing::random_graph(n, 0.4, rng);
    const int H = std::max(3, greedy_upper_bound(g).colors);
    for (const MilpModel& m : {build_ass_s(g, H), build_ass(g, H)}) {
      std::vector<double> v(m.num_variables(), 0.0);
      for (Vertex u = 0; u < n; ++u) v[x(m, u, 1)] = v[x(m, u, 2)] = 0.5;
      v[m.meta().w[0]] = v[m.meta().w[1]] = 1.0;
      CHECK(violated_constraints(m, v, 1e-9).empty());
      CHECK(objective_value(m, v) == doctest::Approx(2.0));
    }
    const MilpModel pop = build_pop(g, H, 0);
    std::vector<double> p(pop.num_variables(), 0.0);
    for (Vertex u = 0; u < n; ++u) p[y(pop, 1, u)] = 0.5;
    CHECK(violated_constraints(pop, p, 1e-9).empty());
    CHECK(objective_value(pop, p) == doctest::Approx(1.5));
  }
}

TEST_CASE("formulation names") {
  for (Formulation f : kAllFormulations) CHECK(parse_formulation(formulation_name(f)) == f);
  CHECK_FALSE(parse_formulation("assign"));
}
