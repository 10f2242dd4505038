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

#include <cmath>
#include <stdexcept>
#include <string>

#include "chromatic/dimacs.hpp"
#include "chromatic/generators.hpp"
#include "chromatic/oracle.hpp"
#include "test_util.hpp"

using namespace chromatic;

TEST_CASE("gnp is a function of (n, p, seed)") {
  CHECK(gnp_random(40, 0.3, 7) == gnp_random(40, 0.3, 7));
  CHECK_FALSE(gnp_random(40, 0.3, 7) == gnp_random(40, 0.3, 8));
  CHECK(gnp_random(9, 0.0, 1).num_edges() == 0);
  CHECK(gnp_random(9, 1.0, 1).num_edges() == 36);
  CHECK_THROWS_AS(gnp_random(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gnp_random(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gnp_random(5, -0.1, 1), std::invalid_argument);
}

TEST_CASE("gnp edge count is binomial") {
  // 19900 pairs at p = 0.3: mean 5970, standard deviation about 64.6.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const int m = gnp_random(200, 0.3, seed).num_edges();
    CHECK(std::abs(m - 5970) < 4 * 65);
  }
}

TEST_CASE("small families") {
  CHECK(complete_graph(6).num_edges() == 15);
  CHECK(cycle_graph(5).num_edges() == 5);
  CHECK(path_graph(4).num_edges() == 3);
  const Graph star = star_graph(3);
  CHECK(star.num_vertices() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(complete_bipartite(3, 3).num_edges() == 9);
  const Graph p = petersen_graph();
  CHECK(p.num_vertices() == 10);
  CHECK(p.num_edges() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(testing::brute_force_chi(p) == 3);
}

TEST_CASE("full insertion dimensions") {
  struct Row {
    int k, l, n, m;
  };
  // Published sizes of the k-FullIns_l benchmark graphs.
  for (const Row& r : {Row{1, 3, 30, 100}, Row{2, 3, 52, 201}, Row{3, 3, 80, 346},
                       Row{4, 3, 114, 541}, Row{5, 3, 154, 792}, Row{1, 4, 93, 593},
                       Row{2, 4, 212, 1621}}) {
    const Graph g = full_insertions(r.k, r.l);
    CHECK(g.num_vertices() == r.n);
    CHECK(g.num_edges() == r.m);
  }
}

TEST_CASE("1-FullIns_3 has chromatic number 4") {
  CHECK(chromatic_number_exact(full_insertions(1, 3), 30).chi == 4);
}

TEST_CASE("Hajos chains are 4-critical") {
  for (int copies : {1, 3, 5}) {
    const Graph g = hajos_k4_chain(copies, 17);
    CHECK(g.num_vertices() == 3 * copies + 1);
    CHECK(g.num_edges() == 5 * copies + 1);
    CHECK(testing::brute_force_chi(g) == 4);
    // Deleting any edge makes the graph 3-colorable.
    for (std::size_t skip = 0; skip < g.edges().size(); ++skip) {
      std::vector<Edge> rest = g.edges();
      rest.erase(rest.begin() + static_cast<long>(skip));
      CHECK(testing::brute_force_chi(Graph(g.num_vertices(), rest)) == 3);
    }
  }
  const Graph mug = hajos_k4_chain(33, 1);
  CHECK(mug.num_vertices() == 100);
  CHECK(mug.num_edges() == 166);
}

TEST_CASE("fixture files match the generators") {
  const std::string dir = CHROMATIC_TEST_DATA;
  CHECK(read_dimacs_file(dir + "/3-FullIns_3.col") == full_insertions(3, 3));
  CHECK(read_dimacs_file(dir + "/4-FullIns_3.col") == full_insertions(4, 3));
  CHECK(read_dimacs_file(dir + "/5-FullIns_3.col") == full_insertions(5, 3));
  CHECK(read_dimacs_file(dir + "/1-FullIns_4.col") == full_insertions(1, 4));
  CHECK(read_dimacs_file(dir + "/2-FullIns_4.col") == full_insertions(2, 4));
  CHECK(read_dimacs_file(dir + "/mug100_1.col") == hajos_k4_chain(33, 1));
  CHECK(read_dimacs_file(dir + "/mug100_25.col") == hajos_k4_chain(33, 25));
  CHECK_FALSE(hajos_k4_chain(33, 1) == hajos_k4_chain(33, 25));
}
