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

#ifndef CHROMATIC_GENERATORS_HPP
#define CHROMATIC_GENERATORS_HPP

#include <cstdint>

#include "chromatic/graph.hpp"

namespace chromatic {

// G(n,p): every one of the n(n-1)/2 pairs, visited in lexicographic order,
// is an edge with probability p. Uses Rng, so the result depends only on
// (n, p, seed). Throws std::invalid_argument unless n >= 1 and 0 <= p <= 1.
Graph gnp_random(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

// Full-insertion graphs k-FullIns_l. Starting from K2, l-1 times replace G
// (n vertices) by k+2 layers: layer 0 is G, each vertex copy in layer i is
// adjacent to the layer i-1 copies of the original vertex's neighbors, every
// layer i gets its own apex adjacent to all of it, and the k+2 apexes form a
// clique. Chromatic number is k + l.
Graph full_insertions(int k, int l);

// 4-critical graph made of `copies` K4 blocks chained by Hajos joins at
// randomly chosen edges. 3*copies + 1 vertices, 5*copies + 1 edges,
// chromatic number 4. These have the size profile of the mug benchmark
// graphs (33 copies: 100 vertices, 166 edges).
Graph hajos_k4_chain(int copies, std::uint64_t seed);

}  // namespace chromatic

#endif  // CHROMATIC_GENERATORS_HPP
