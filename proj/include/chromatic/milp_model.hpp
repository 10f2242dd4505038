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

#ifndef CHROMATIC_MILP_MODEL_HPP
#define CHROMATIC_MILP_MODEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chromatic/graph.hpp"

namespace chromatic {

enum class Formulation { kAssS, kAss, kPop, kPop2, kRep };

inline constexpr Formulation kAllFormulations[] = {
    Formulation::kAssS, Formulation::kAss, Formulation::kPop,
    Formulation::kPop2, Formulation::kRep};

// "ass-s", "ass", "pop", "pop2", "rep".
std::string_view formulation_name(Formulation f);
std::optional<Formulation> parse_formulation(std::string_view name);

enum class Sense { kLe, kEq, kGe };

// Row families. Counting per family is what the dimension formulas of the
// formulations talk about.
enum class Block {
  kAssignment,    // each vertex gets one color
  kEdge,          // adjacent vertices differ
  kColorUse,      // w_i <= sum_v x_vi
  kColorOrder,    // w_i <= w_{i-1}
  kTransitivity,  // y_{i,v} >= y_{i+1,v}
  kAnchor,        // y_{i,q} >= y_{i,v}
  kLink,          // x_{vi} = y_{i-1,v} - y_{i,v}
  kCover,         // every vertex has a representative
  kRepresent,     // a representative covers an independent set
  kFixing,        // equalities added by clique fixing
};

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLe;
  double rhs = 0.0;
  Block block = Block::kEdge;
  // Number of terms the row had before the eliminated variables were
  // substituted by constants (equals terms.size() when nothing was
  // eliminated).
  int structural_terms = 0;
};

struct Objective {
  std::vector<Term> terms;
  double offset = 0.0;  // added to the solver's objective value
};

// Formulation-specific data needed to read solutions back.
struct ModelMeta {
  std::shared_ptr<const Graph> graph;
  int upper_bound = 0;  // H
  Vertex anchor = -1;   // q (POP family, and ASS family after fixing)
  std::vector<Vertex> clique;
  // Variable index tables, -1 where absent:
  //   x(v, i) at v * H + i - 1, w(i) at i - 1, y(i, v) at v * (H - 1) + i - 1.
  std::vector<int> x;
  std::vector<int> w;
  std::vector<int> y;
  std::unordered_map<long long, int> rep;  // r(u, v) at u * n + v
};

class FixingConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Binary minimization model, independent of any solver.
class MilpModel {
 public:
  explicit MilpModel(Formulation kind) : kind_(kind) {}

  Formulation kind() const { return kind_; }

  // Throws std::invalid_argument on a duplicate name.
  int add_variable(std::string name);
  // Throws std::invalid_argument if a term references an unknown variable.
  void add_constraint(Constraint c);
  void set_objective(Objective objective) { objective_ = std::move(objective); }
  // Throws FixingConflict when var is already fixed to the other value.
  void fix(int var, int value);

  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& variable_name(int var) const { return names_[var]; }
  const std::vector<std::string>& variable_names() const { return names_; }
  int find_variable(std::string_view name) const;

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Objective& objective() const { return objective_; }
  const std::map<int, int>& fixings() const { return fixings_; }

  ModelMeta& meta() { return meta_; }
  const ModelMeta& meta() const { return meta_; }

 private:
  Formulation kind_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Constraint> constraints_;
  Objective objective_;
  std::map<int, int> fixings_;
  ModelMeta meta_;
};

struct BlockCount {
  int rows = 0;
  long long nonzeros = 0;
  long long structural_nonzeros = 0;
};

struct ModelStats {
  int num_vars = 0;       // declared variables that are not fixed
  int num_fixed = 0;
  int num_constraints = 0;
  long long num_nonzeros = 0;
  // Variable count as usually reported for the formulation: for the
  // representatives model each non-adjacent pair counts once (|E-bar| + |V|)
  // even though both orientations are variables here.
  int comparable_vars = 0;
  std::map<Block, BlockCount> blocks;

  BlockCount block(Block b) const;
};

ModelStats model_stats(const MilpModel& m);

double row_activity(const Constraint& c, std::span<const double> values);

// Indices of constraints violated by more than tol at `values`. Fixings are
// checked too when check_fixings is set (reported as index -1 - var).
std::vector<int> violated_constraints(const MilpModel& m,
                                      std::span<const double> values,
                                      double tol, bool check_fixings = true);

// Objective including the constant offset.
double objective_value(const MilpModel& m, std::span<const double> values);

}  // namespace chromatic

#endif  // CHROMATIC_MILP_MODEL_HPP
