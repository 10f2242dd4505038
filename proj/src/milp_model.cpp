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

#include "chromatic/milp_model.hpp"

#include <cmath>

namespace chromatic {

std::string_view formulation_name(Formulation f) {
  switch (f) {
    case Formulation::kAssS: return "ass-s";
    case Formulation::kAss: return "ass";
    case Formulation::kPop: return "pop";
    case Formulation::kPop2: return "pop2";
    case Formulation::kRep: return "rep";
  }
  return "?";
}

std::optional<Formulation> parse_formulation(std::string_view name) {
  for (Formulation f : kAllFormulations) {
    if (formulation_name(f) == name) return f;
  }
  return std::nullopt;
}

int MilpModel::add_variable(std::string name) {
  const int id = static_cast<int>(names_.size());
  auto [it, inserted] = index_.emplace(name, id);
  if (!inserted) {
    throw std::invalid_argument("duplicate variable name '" + name + "'");
  }
  names_.push_back(std::move(name));
  return id;
}

void MilpModel::add_constraint(Constraint c) {
  for (const Term& t : c.terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      throw std::invalid_argument("constraint '" + c.name +
                                  "' references an undeclared variable");
    }
  }
  if (c.structural_terms == 0) {
    c.structural_terms = static_cast<int>(c.terms.size());
  }
  constraints_.push_back(std::move(c));
}

void MilpModel::fix(int var, int value) {
  if (var < 0 || var >= num_variables() || (value != 0 && value != 1)) {
    throw std::invalid_argument("invalid fixing");
  }
  auto [it, inserted] = fixings_.emplace(var, value);
  if (!inserted && it->second != value) {
    throw FixingConflict("variable '" + names_[var] + "' fixed to both 0 and 1");
  }
}

int MilpModel::find_variable(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

BlockCount ModelStats::block(Block b) const {
  auto it = blocks.find(b);
  return it == blocks.end() ? BlockCount{} : it->second;
}

ModelStats model_stats(const MilpModel& m) {
  ModelStats s;
  s.num_fixed = static_cast<int>(m.fixings().size());
  s.num_vars = m.num_variables() - s.num_fixed;
  s.num_constraints = static_cast<int>(m.constraints().size());
  for (const Constraint& c : m.constraints()) {
    s.num_nonzeros += static_cast<long long>(c.terms.size());
    BlockCount& b = s.blocks[c.block];
    ++b.rows;
    b.nonzeros += static_cast<long long>(c.terms.size());
    b.structural_nonzeros += c.structural_terms;
  }
  s.comparable_vars = m.num_variables();
  if (m.kind() == Formulation::kRep && m.meta().graph) {
    const long long n = m.meta().graph->num_vertices();
    const long long non_edges = n * (n - 1) / 2 - m.meta().graph->num_edges();
    s.comparable_vars = static_cast<int>(n + non_edges);
  }
  return s;
}

double row_activity(const Constraint& c, std::span<const double> values) {
  double sum = 0.0;
  for (const Term& t : c.terms) sum += t.coef * values[t.var];
  return sum;
}

std::vector<int> violated_constraints(const MilpModel& m,
                                      std::span<const double> values,
                                      double tol, bool check_fixings) {
  if (static_cast<int>(values.size()) != m.num_variables()) {
    throw std::invalid_argument("value vector does not match the model");
  }
  std::vector<int> out;
  const auto& rows = m.constraints();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double a = row_activity(rows[r], values);
    bool ok = true;
    switch (rows[r].sense) {
      case Sense::kLe: ok = a <= rows[r].rhs + tol; break;
      case Sense::kGe: ok = a >= rows[r].rhs - tol; break;
      case Sense::kEq: ok = std::abs(a - rows[r].rhs) <= tol; break;
    }
    if (!ok) out.push_back(static_cast<int>(r));
  }
  if (check_fixings) {
    for (const auto& [var, value] : m.fixings()) {
      if (std::abs(values[var] - value) > tol) out.push_back(-1 - var);
    }
  }
  return out;
}

double objective_value(const MilpModel& m, std::span<const double> values) {
  double sum = m.objective().offset;
  for (const Term& t : m.objective().terms) sum += t.coef * values[t.var];
  return sum;
}

}  // namespace chromatic
