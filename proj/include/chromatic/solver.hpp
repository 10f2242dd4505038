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

#ifndef CHROMATIC_SOLVER_HPP
#define CHROMATIC_SOLVER_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromatic/milp_model.hpp"
#include "chromatic/parse_error.hpp"

namespace chromatic {

enum class SolveStatus {
  kOptimal,
  kFeasible,  // time limit reached with an incumbent
  kInfeasible,
  kUnbounded,
  kTimeoutNoSolution,
  kError,
};

std::string_view status_name(SolveStatus s);

// Normalized outcome of one solve. Bounds are integral and include the
// model's objective offset; an empty bound means -inf / +inf.
struct SolveResult {
  SolveStatus status = SolveStatus::kError;
  std::optional<long long> lower_bound;
  std::optional<long long> upper_bound;
  std::vector<double> values;  // incumbent, indexed like the model; empty if none
  double wall_time = 0.0;
  std::string message;
  std::string log;  // solver output, kept when status is kError
};

// Regex table describing a solver's output. Patterns use ECMAScript
// syntax; each line of the solution file is tested against, in order:
// the status rules, the objective and bound patterns, skip_line, and
// value_line (group 1 = name, group 2 = value). A line matching none of
// them is a parse error. objective and bound patterns (group 1 = number)
// are also searched in the solver log.
struct SolutionDialect {
  std::string name;
  std::vector<std::pair<std::string, SolveStatus>> status_rules;
  std::string objective;
  std::string bound;
  std::string skip_line;
  std::string value_line;
};

// CBC `solu` files: `Optimal - objective value 3.0` followed by
// `<index> <name> <value> <reduced cost>` lines; the dual bound of a
// stopped run comes from the log's `Lower bound:` line.
SolutionDialect cbc_dialect();

// Native text format:
//   status <optimal|feasible|infeasible|unbounded|timeout_no_solution|error>
//   objective <value>      (optional)
//   bound <value>          (optional)
//   <variable> <value>     (one per line)
SolutionDialect sol_dialect();

std::optional<SolutionDialect> dialect_by_name(std::string_view name);

struct RawSolution {
  std::optional<SolveStatus> status;
  std::optional<double> objective;
  std::optional<double> bound;
  std::map<std::string, double> values;
};

// Throws ParseError (with line number) on a line the dialect does not
// describe.
RawSolution parse_solution(std::string_view text, const SolutionDialect& dialect,
                           std::string_view log = {});

// How to run a solver. Argument templates may contain {model}, {timelimit},
// {seed}, {solout} and {threads}.
struct SolverAdapter {
  enum class Kind { kExternal, kNull };

  std::string name;
  Kind kind = Kind::kExternal;
  std::string executable;
  std::vector<std::string> args;
  SolutionDialect dialect;
  int threads = 1;
  double grace_seconds = 10.0;  // kill the process at time limit + grace
  bool keep_workdir = false;
};

// In-process adapter for small models: solves the model's graph with the
// exact oracle and maps the optimal coloring onto the model's variables.
SolverAdapter null_adapter();

SolverAdapter cbc_adapter(std::string executable);

// Reads a JSON adapter description:
//   {"name": "cbc", "executable": "/path/cbc",
//    "args": ["{model}", "sec", "{timelimit}", ...],
//    "dialect": "cbc" | {"name": ..., "status_rules": [[regex, status]], ...},
//    "threads": 1}
// The CHROMATIC_SOLVER environment variable overrides the executable.
SolverAdapter load_adapter(const std::filesystem::path& path);

// CBC found through CHROMATIC_SOLVER, the build-time default or PATH;
// nullopt if none exists.
std::optional<SolverAdapter> find_default_adapter();

struct SolveOptions {
  double time_limit = 3600.0;  // seconds
  std::uint64_t seed = 0;
};

// Writes the model as LP into a private temporary directory, runs the
// adapter and normalizes the result: lower bound ceil(bound - 1e-6) +
// offset, upper bound round(incumbent) + offset.
SolveResult solve(const MilpModel& m, const SolverAdapter& adapter,
                  const SolveOptions& options = {});

// Converts a parsed solution into a SolveResult for m. Exposed for testing.
SolveResult normalize_solution(const MilpModel& m, const RawSolution& raw);

}  // namespace chromatic

#endif  // CHROMATIC_SOLVER_HPP
