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

#include "chromatic/formulations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace chromatic {
namespace {

std::string id(Vertex v) { return std::to_string(v + 1); }

MilpModel start_model(Formulation kind, const Graph& g, int upper_bound) {
  MilpModel m(kind);
  m.meta().graph = std::make_shared<const Graph>(g);
  m.meta().upper_bound = upper_bound;
  return m;
}

// x and w variables plus the rows shared by both assignment models.
MilpModel assignment_core(Formulation kind, const Graph& g, int H) {
  if (H < 1) throw std::invalid_argument("assignment model needs H >= 1");
  MilpModel m = start_model(kind, g, H);
  const int n = g.num_vertices();
  auto& meta = m.meta();
  meta.x.assign(static_cast<std::size_t>(n) * H, -1);
  meta.w.assign(H, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 1; i <= H; ++i) {
      meta.x[v * H + i - 1] = m.add_variable("x_" + id(v) + "_" + std::to_string(i));
    }
  }
  for (int i = 1; i <= H; ++i) {
    meta.w[i - 1] = m.add_variable("w_" + std::to_string(i));
  }
  const auto x = [&](Vertex v, int i) { return meta.x[v * H + i - 1]; };

  for (Vertex v = 0; v < n; ++v) {
    Constraint c{"assign_" + id(v), {}, Sense::kEq, 1.0, Block::kAssignment};
    for (int i = 1; i <= H; ++i) c.terms.push_back({x(v, i), 1.0});
    m.add_constraint(std::move(c));
  }
  for (const Edge& e : g.edges()) {
    for (int i = 1; i <= H; ++i) {
      m.add_constraint({"edge_" + id(e.u) + "_" + id(e.v) + "_" + std::to_string(i),
                        {{x(e.u, i), 1.0}, {x(e.v, i), 1.0}, {meta.w[i - 1], -1.0}},
                        Sense::kLe, 0.0, Block::kEdge});
    }
  }
  // Edge rows alone leave w free for a vertex without neighbors.
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 0) continue;
    for (int i = 1; i <= H; ++i) {
      m.add_constraint({"iso_" + id(v) + "_" + std::to_string(i),
                        {{x(v, i), 1.0}, {meta.w[i - 1], -1.0}}, Sense::kLe, 0.0,
                        Block::kEdge});
    }
  }
  Objective obj;
  for (int i = 1; i <= H; ++i) obj.terms.push_back({meta.w[i - 1], 1.0});
  m.set_objective(std::move(obj));
  return m;
}

// y variables, transitivity and anchor rows, and the objective shared by
// both partial-ordering models.
MilpModel ordering_core(Formulation kind, const Graph& g, int H, Vertex q) {
  if (H < 2) throw std::invalid_argument("partial-ordering model needs H >= 2");
  if (q < 0 || q >= g.num_vertices()) {
    throw std::invalid_argument("anchor vertex is not in the graph");
  }
  MilpModel m = start_model(kind, g, H);
  const int n = g.num_vertices();
  auto& meta = m.meta();
  meta.anchor = q;
  meta.y.assign(static_cast<std::size_t>(n) * (H - 1), -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 1; i < H; ++i) {
      meta.y[v * (H - 1) + i - 1] =
          m.add_variable("y_" + std::to_string(i) + "_" + id(v));
    }
  }
  const auto y = [&](int i, Vertex v) { return meta.y[v * (H - 1) + i - 1]; };

  for (Vertex v = 0; v < n; ++v) {
    for (int i = 1; i + 1 < H; ++i) {
      m.add_constraint({"order_" + std::to_string(i) + "_" + id(v),
                        {{y(i, v), 1.0}, {y(i + 1, v), -1.0}},
                        Sense::kGe, 0.0, Block::kTransitivity});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == q) continue;
    for (int i = 1; i < H; ++i) {
      m.add_constraint({"anchor_" + std::to_string(i) + "_" + id(v),
                        {{y(i, q), 1.0}, {y(i, v), -1.0}},
                        Sense::kGe, 0.0, Block::kAnchor});
    }
  }
  Objective obj;
  obj.offset = 1.0;
  for (int i = 1; i < H; ++i) obj.terms.push_back({y(i, q), 1.0});
  m.set_objective(std::move(obj));
  return m;
}

int var_x(const ModelMeta& meta, Vertex v, int i) {
  return meta.x[v * meta.upper_bound + i - 1];
}
int var_y(const ModelMeta& meta, int i, Vertex v) {
  return meta.y[v * (meta.upper_bound - 1) + i - 1];
}
int var_r(const ModelMeta& meta, Vertex u, Vertex v) {
  const auto it = meta.rep.find(static_cast<long long>(u) * meta.graph->num_vertices() + v);
  return it == meta.rep.end() ? -1 : it->second;
}

bool is_assignment(Formulation f) {
  return f == Formulation::kAssS || f == Formulation::kAss;
}
bool is_ordering(Formulation f) {
  return f == Formulation::kPop || f == Formulation::kPop2;
}

}  // namespace

MilpModel build_ass_s(const Graph& g, int upper_bound) {
  return assignment_core(Formulation::kAssS, g, upper_bound);
}

MilpModel build_ass(const Graph& g, int upper_bound) {
  MilpModel m = assignment_core(Formulation::kAss, g, upper_bound);
  const int H = upper_bound;
  const auto& meta = m.meta();
  for (int i = 1; i <= H; ++i) {
    Constraint c{"use_" + std::to_string(i), {{meta.w[i - 1], 1.0}}, Sense::kLe,
                 0.0, Block::kColorUse};
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      c.terms.push_back({var_x(meta, v, i), -1.0});
    }
    m.add_constraint(std::move(c));
  }
  for (int i = 2; i <= H; ++i) {
    m.add_constraint({"chain_" + std::to_string(i),
                      {{meta.w[i - 1], 1.0}, {meta.w[i - 2], -1.0}},
                      Sense::kLe, 0.0, Block::kColorOrder});
  }
  return m;
}

MilpModel build_pop(const Graph& g, int upper_bound, Vertex anchor) {
  MilpModel m = ordering_core(Formulation::kPop, g, upper_bound, anchor);
  const int H = upper_bound;
  const auto& meta = m.meta();
  // Each row is y_iu + z_ui + y_iv + z_vi >= 1 with z_{.,1} = 0,
  // z_{.,i} = 1 - y_{i-1,.} and y_{H,.} = 0 substituted.
  for (const Edge& e : g.edges()) {
    const std::string tag = "edge_" + id(e.u) + "_" + id(e.v) + "_";
    for (int i = 1; i <= H; ++i) {
      Constraint c{tag + std::to_string(i), {}, Sense::kLe, 1.0, Block::kEdge};
      c.structural_terms = 4;
      if (i == 1) {
        c.terms = {{var_y(meta, 1, e.u), 1.0}, {var_y(meta, 1, e.v), 1.0}};
        c.sense = Sense::kGe;
      } else if (i == H) {
        c.terms = {{var_y(meta, H - 1, e.u), 1.0}, {var_y(meta, H - 1, e.v), 1.0}};
      } else {
        c.terms = {{var_y(meta, i - 1, e.u), 1.0}, {var_y(meta, i - 1, e.v), 1.0},
                   {var_y(meta, i, e.u), -1.0}, {var_y(meta, i, e.v), -1.0}};
      }
      m.add_constraint(std::move(c));
    }
  }
  return m;
}

MilpModel build_pop2(const Graph& g, int upper_bound, Vertex anchor) {
  MilpModel m = ordering_core(Formulation::kPop2, g, upper_bound, anchor);
  const int H = upper_bound;
  const int n = g.num_vertices();
  auto& meta = m.meta();
  meta.x.assign(static_cast<std::size_t>(n) * H, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 1; i <= H; ++i) {
      meta.x[v * H + i - 1] = m.add_variable("x_" + id(v) + "_" + std::to_string(i));
    }
  }
  // x_vi + y_iv + z_vi = 1 after eliminating z and the constant y's.
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 1; i <= H; ++i) {
      Constraint c{"link_" + id(v) + "_" + std::to_string(i),
                   {{var_x(meta, v, i), 1.0}}, Sense::kEq, 0.0, Block::kLink};
      c.structural_terms = 3;
      if (i > 1) c.terms.push_back({var_y(meta, i - 1, v), -1.0});
      if (i < H) c.terms.push_back({var_y(meta, i, v), 1.0});
      if (i == 1) c.rhs = 1.0;
      m.add_constraint(std::move(c));
    }
  }
  for (const Edge& e : g.edges()) {
    for (int i = 1; i <= H; ++i) {
      m.add_constraint({"edge_" + id(e.u) + "_" + id(e.v) + "_" + std::to_string(i),
                        {{var_x(meta, e.u, i), 1.0}, {var_x(meta, e.v, i), 1.0}},
                        Sense::kLe, 1.0, Block::kEdge});
    }
  }
  return m;
}

MilpModel build_rep(const Graph& g, const RepOptions& options) {
  MilpModel m = start_model(Formulation::kRep, g, 0);
  const int n = g.num_vertices();
  auto& meta = m.meta();
  std::vector<std::vector<Vertex>> anti(n);
  for (Vertex u = 0; u < n; ++u) {
    anti[u] = g.non_neighbors(u);
    std::vector<Vertex> cols = anti[u];
    cols.insert(std::upper_bound(cols.begin(), cols.end(), u), u);
    for (Vertex v : cols) {
      meta.rep[static_cast<long long>(u) * n + v] =
          m.add_variable("r_" + id(u) + "_" + id(v));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    Constraint c{"cover_" + id(v), {}, Sense::kGe, 1.0, Block::kCover};
    for (Vertex u = 0; u < n; ++u) {
      const int r = var_r(meta, u, v);
      if (r >= 0) c.terms.push_back({r, 1.0});
    }
    m.add_constraint(std::move(c));
  }
  std::vector<char> in_anti(n, 0);
  std::vector<int> inner_degree(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : anti[u]) in_anti[v] = 1;
    const int ruu = var_r(meta, u, u);
    for (const Edge& e : g.edges()) {
      if (!in_anti[e.u] || !in_anti[e.v]) continue;
      ++inner_degree[e.u];
      ++inner_degree[e.v];
      m.add_constraint({"rep_" + id(u) + "_" + id(e.u) + "_" + id(e.v),
                        {{var_r(meta, u, e.u), 1.0}, {var_r(meta, u, e.v), 1.0},
                         {ruu, -1.0}},
                        Sense::kLe, 0.0, Block::kRepresent});
    }
    if (options.isolated_rows) {
      for (Vertex v : anti[u]) {
        if (inner_degree[v] > 0) continue;
        m.add_constraint({"repiso_" + id(u) + "_" + id(v),
                          {{var_r(meta, u, v), 1.0}, {ruu, -1.0}},
                          Sense::kLe, 0.0, Block::kRepresent});
      }
    }
    for (Vertex v : anti[u]) {
      in_anti[v] = 0;
      inner_degree[v] = 0;
    }
  }
  Objective obj;
  for (Vertex u = 0; u < n; ++u) obj.terms.push_back({var_r(meta, u, u), 1.0});
  m.set_objective(std::move(obj));
  return m;
}

MilpModel build_model(Formulation kind, const PreprocessedInstance& inst) {
  const Graph& g = inst.graph();
  MilpModel m = [&] {
    switch (kind) {
      case Formulation::kAssS: return build_ass_s(g, inst.upper_bound);
      case Formulation::kAss: return build_ass(g, inst.upper_bound);
      case Formulation::kPop: return build_pop(g, inst.upper_bound, inst.anchor);
      case Formulation::kPop2: return build_pop2(g, inst.upper_bound, inst.anchor);
      case Formulation::kRep: return build_rep(g);
    }
    throw std::invalid_argument("unknown formulation");
  }();
  m.meta().upper_bound = inst.upper_bound;
  return m;
}

MilpModel apply_clique_fixings(MilpModel m, std::span<const Vertex> clique,
                               Vertex anchor) {
  auto& meta = m.meta();
  const Graph& g = *meta.graph;
  std::vector<Vertex> members(clique.begin(), clique.end());
  std::sort(members.begin(), members.end());
  if (members.empty()) return m;
  if (!std::binary_search(members.begin(), members.end(), anchor)) {
    throw std::invalid_argument("anchor is not a clique member");
  }
  if (!is_clique(g, members)) {
    throw std::invalid_argument("fixing set is not a clique");
  }
  if (is_ordering(m.kind()) && anchor != meta.anchor) {
    throw std::invalid_argument("clique anchor differs from the model anchor");
  }
  meta.clique = members;
  meta.anchor = anchor;

  if (m.kind() == Formulation::kRep) {
    for (Vertex u : members) m.fix(var_r(meta, u, u), 1);
    return m;
  }

  const int H = meta.upper_bound;
  const int size = static_cast<int>(members.size());
  if (size > H) throw std::invalid_argument("clique larger than H");

  // color of each precolored clique vertex
  std::map<Vertex, int> color;
  int k = 1;
  for (Vertex u : members) {
    if (u != anchor) color[u] = k++;
  }
  std::vector<char> in_q(g.num_vertices(), 0);
  for (Vertex u : members) in_q[u] = 1;

  if (is_assignment(m.kind())) {
    color[anchor] = size;
    for (const auto& [u, c] : color) {
      for (int i = 1; i <= H; ++i) m.fix(var_x(meta, u, i), i == c ? 1 : 0);
    }
    for (int i = 1; i <= size; ++i) m.fix(meta.w[i - 1], 1);
    for (const Edge& e : g.edges()) {
      if (in_q[e.u] == in_q[e.v]) continue;
      const Vertex u = in_q[e.u] ? e.u : e.v;
      const Vertex v = in_q[e.u] ? e.v : e.u;
      m.fix(var_x(meta, v, color[u]), 0);
    }
    return m;
  }

  const bool has_x = m.kind() == Formulation::kPop2;
  for (const auto& [u, c] : color) {
    for (int i = 1; i < H; ++i) m.fix(var_y(meta, i, u), i < c ? 1 : 0);
    if (has_x) {
      for (int i = 1; i <= H; ++i) m.fix(var_x(meta, u, i), i == c ? 1 : 0);
    }
  }
  for (int i = 1; i < size; ++i) {
    m.fix(var_y(meta, i, anchor), 1);
    if (has_x) m.fix(var_x(meta, anchor, i), 0);
  }
  for (const Edge& e : g.edges()) {
    if (in_q[e.u] == in_q[e.v]) continue;
    const Vertex u = in_q[e.u] ? e.u : e.v;
    const Vertex v = in_q[e.u] ? e.v : e.u;
    if (u == anchor) continue;
    const int c = color[u];
    if (has_x) {
      m.fix(var_x(meta, v, c), 0);
    } else if (c == 1) {
      m.fix(var_y(meta, 1, v), 1);
    } else if (c == H) {
      m.fix(var_y(meta, H - 1, v), 0);
    } else {
      Constraint row{"fix_" + id(v) + "_" + std::to_string(c),
                     {{var_y(meta, c - 1, v), 1.0}, {var_y(meta, c, v), -1.0}},
                     Sense::kEq, 0.0, Block::kFixing};
      m.add_constraint(std::move(row));
    }
  }
  return m;
}

MilpModel apply_clique_fixings(MilpModel m, const PreprocessedInstance& inst) {
  return apply_clique_fixings(std::move(m), inst.clique, inst.anchor);
}

namespace {

std::vector<int> round_values(const MilpModel& m, std::span<const double> values) {
  if (static_cast<int>(values.size()) != m.num_variables()) {
    throw ExtractionError("solution has " + std::to_string(values.size()) +
                          " values, model has " +
                          std::to_string(m.num_variables()) + " variables");
  }
  std::vector<int> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double v = values[j];
    if (std::abs(v) <= 1e-6) {
      out[j] = 0;
    } else if (std::abs(v - 1.0) <= 1e-6) {
      out[j] = 1;
    } else {
      throw ExtractionError("variable '" + m.variable_name(static_cast<int>(j)) +
                            "' has non-binary value " + std::to_string(v));
    }
  }
  return out;
}

}  // namespace

Coloring extract_coloring(const MilpModel& m, std::span<const double> values) {
  const std::vector<int> bits = round_values(m, values);
  const ModelMeta& meta = m.meta();
  const int n = meta.graph->num_vertices();
  const int H = meta.upper_bound;
  Coloring c;
  c.colors.assign(n, 0);
  const auto fail = [](Vertex v) {
    throw ExtractionError("vertex " + std::to_string(v + 1) +
                          " does not have exactly one color");
  };

  if (is_assignment(m.kind())) {
    for (Vertex v = 0; v < n; ++v) {
      for (int i = 1; i <= H; ++i) {
        if (!bits[var_x(meta, v, i)]) continue;
        if (c.colors[v] != 0) fail(v);
        c.colors[v] = i;
      }
      if (c.colors[v] == 0) fail(v);
    }
    return c;
  }

  if (is_ordering(m.kind())) {
    for (Vertex v = 0; v < n; ++v) {
      const auto above = [&](int i) {
        if (i == 0) return 1;
        if (i == H) return 0;
        return bits[var_y(meta, i, v)];
      };
      for (int i = 1; i <= H; ++i) {
        if (above(i - 1) - above(i) != 1) continue;
        if (c.colors[v] != 0) fail(v);
        c.colors[v] = i;
      }
      if (c.colors[v] == 0) fail(v);
    }
    return c;
  }

  // representatives: smallest u with r_uv = 1, classes numbered by u
  std::vector<Vertex> rep(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n && rep[v] < 0; ++u) {
      const int r = var_r(meta, u, v);
      if (r >= 0 && bits[r]) rep[v] = u;
    }
    if (rep[v] < 0) fail(v);
  }
  std::vector<Vertex> reps = rep;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  for (Vertex v = 0; v < n; ++v) {
    c.colors[v] = static_cast<int>(
        std::lower_bound(reps.begin(), reps.end(), rep[v]) - reps.begin() + 1);
  }
  return c;
}

std::vector<double> encode_coloring(const MilpModel& m, const Coloring& c) {
  const ModelMeta& meta = m.meta();
  const Graph& g = *meta.graph;
  const int n = g.num_vertices();
  if (!verify_coloring(g, c).valid) {
    throw std::invalid_argument("encode_coloring: coloring is invalid");
  }
  // Renumber colors 1..k by first appearance.
  std::map<int, int> dense;
  for (int col : c.colors) dense.emplace(col, 0);
  int k = 0;
  for (auto& [col, idx] : dense) idx = ++k;

  std::vector<double> values(m.num_variables(), 0.0);

  if (m.kind() == Formulation::kRep) {
    std::map<int, Vertex> rep;  // class -> representative
    for (Vertex v = 0; v < n; ++v) rep.emplace(dense[c.colors[v]], v);
    for (Vertex u : meta.clique) rep[dense[c.colors[u]]] = u;
    for (Vertex v = 0; v < n; ++v) {
      const Vertex u = rep[dense[c.colors[v]]];
      values[var_r(meta, u, v)] = 1.0;
    }
    return values;
  }

  const int H = meta.upper_bound;
  if (k > H) throw std::invalid_argument("coloring uses more than H colors");

  // Forced targets: clique vertices (anchor excluded) get 1..|Q|-1; the
  // anchor gets |Q| in the assignment models and the top color otherwise.
  std::map<int, int> target;  // dense color -> model color
  std::vector<char> used(k + 1, 0);
  const auto force = [&](Vertex v, int model_color) {
    const int from = dense[c.colors[v]];
    auto [it, inserted] = target.emplace(from, model_color);
    if ((!inserted && it->second != model_color) || model_color > k ||
        (inserted && used[model_color])) {
      throw std::invalid_argument("coloring cannot honor the model's fixings");
    }
    used[model_color] = 1;
  };
  int next = 1;
  for (Vertex u : meta.clique) {
    if (u != meta.anchor) force(u, next++);
  }
  if (meta.anchor >= 0) {
    if (is_assignment(m.kind())) {
      if (!meta.clique.empty()) force(meta.anchor, static_cast<int>(meta.clique.size()));
    } else {
      force(meta.anchor, k);
    }
  }
  int free_color = 1;
  for (int from = 1; from <= k; ++from) {
    if (target.count(from)) continue;
    while (used[free_color]) ++free_color;
    target[from] = free_color;
    used[free_color] = 1;
  }

  for (Vertex v = 0; v < n; ++v) {
    const int col = target[dense[c.colors[v]]];
    if (!meta.x.empty()) values[var_x(meta, v, col)] = 1.0;
    if (!meta.y.empty()) {
      for (int i = 1; i < H; ++i) values[var_y(meta, i, v)] = col > i ? 1.0 : 0.0;
    }
  }
  if (!meta.w.empty()) {
    for (int i = 1; i <= k; ++i) values[meta.w[i - 1]] = 1.0;
  }
  return values;
}

}  // namespace chromatic
