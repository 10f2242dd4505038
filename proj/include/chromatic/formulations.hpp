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

#ifndef CHROMATIC_FORMULATIONS_HPP
#define CHROMATIC_FORMULATIONS_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/milp_model.hpp"
#include "chromatic/preprocess.hpp"

namespace chromatic {

// Compact coloring formulations. Variable names are fixed so emitted model
// files diff cleanly (vertex ids 1-based, colors 1..H):
//   x_<v>_<i>  vertex v takes color i
//   w_<i>      color i is used
//   y_<i>_<v>  color of v is above i (i = 1..H-1; y_0 = 1 and y_H = 0 are
//              constants, and z is eliminated through z_{v,i+1} = 1 - y_{i,v})
//   r_<u>_<v>  u represents the color class of v

// Assignment model: one color per vertex, x_ui + x_vi <= w_i on edges,
// minimize sum w_i. H(|V|+1) variables, |V| + H|E| rows, plus x_vi <= w_i
// for each vertex without neighbors. Requires H >= 1.
MilpModel build_ass_s(const Graph& g, int upper_bound);

// Assignment model plus w_i <= sum_v x_vi and w_i <= w_{i-1}.
MilpModel build_ass(const Graph& g, int upper_bound);

// Partial-ordering model in the reduced y-only form: (H-1)|V| variables,
// objective 1 + sum_i y_{i,q}. Requires H >= 2 and q a vertex of g.
MilpModel build_pop(const Graph& g, int upper_bound, Vertex anchor);

// Partial-ordering model whose edge rows go through linked assignment
// variables x_vi = y_{i-1,v} - y_{i,v} and x_ui + x_vi <= 1.
MilpModel build_pop2(const Graph& g, int upper_bound, Vertex anchor);

struct RepOptions {
  // Adds r_uv <= r_uu for every v without a neighbor inside the
  // non-neighborhood of u. Without these rows two isolated vertices can
  // represent each other at objective 0.
  bool isolated_rows = true;
};

// Representatives model with one variable per ordered non-adjacent pair
// plus r_uu for every vertex.
MilpModel build_rep(const Graph& g, const RepOptions& options = {});

// Builds `kind` on the reduced graph with the preprocessing bound and
// anchor (no fixings applied).
MilpModel build_model(Formulation kind, const PreprocessedInstance& inst);

// Precolors the clique. Clique vertices other than the anchor, ascending,
// take colors 1..|Q|-1.
//   assignment: the anchor takes color |Q|; w_1..w_|Q| = 1; a neighbor
//     outside Q of a clique vertex with color k gets x_vk = 0.
//   partial ordering: the anchor is only known to be above |Q|-1; a
//     neighbor of the vertex with color k cannot take k, which becomes
//     y_{k-1,v} = y_{k,v} (or x_vk = 0 when x variables exist).
//   representatives: every clique vertex represents itself.
// Throws FixingConflict if two fixings disagree and std::invalid_argument
// if the clique is inconsistent with the model.
MilpModel apply_clique_fixings(MilpModel m, std::span<const Vertex> clique,
                               Vertex anchor);
MilpModel apply_clique_fixings(MilpModel m, const PreprocessedInstance& inst);

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Values within 1e-6 of 0 or 1 are rounded; anything else, or a vertex
// without exactly one color, throws ExtractionError.
Coloring extract_coloring(const MilpModel& m, std::span<const double> values);

// Integral point of m that represents coloring c (a valid coloring of the
// model's graph). Colors are permuted so that fixings and the anchor
// convention hold. Throws std::invalid_argument if c needs more than H
// colors or cannot match the clique precoloring.
std::vector<double> encode_coloring(const MilpModel& m, const Coloring& c);

}  // namespace chromatic

#endif  // CHROMATIC_FORMULATIONS_HPP
