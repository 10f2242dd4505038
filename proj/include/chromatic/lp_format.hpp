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

#ifndef CHROMATIC_LP_FORMAT_HPP
#define CHROMATIC_LP_FORMAT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromatic/milp_model.hpp"
#include "chromatic/parse_error.hpp"

namespace chromatic {

// CPLEX-style LP text. Layout of the emitted file:
//
//   \ chromatic model <formulation>
//   \ objective offset <c>
//   Minimize
//    obj: + w_1 + w_2
//   Subject To
//    <row name>: <terms> <sense> <rhs>      (model row order)
//   Bounds
//    <var> = <0|1>                          (one line per fixing)
//   Binaries
//    <all variables, declaration order>
//   End
//
// The constant objective offset is not part of the LP objective; it is
// carried in the comment and re-added when results are normalized. Long
// expressions are wrapped onto continuation lines starting with a space.
// Output is a pure function of the model.
void write_lp(std::ostream& out, const MilpModel& m);
std::string to_lp(const MilpModel& m);

using LpTerms = std::vector<std::pair<std::string, double>>;

struct LpRow {
  std::string name;
  LpTerms terms;
  Sense sense = Sense::kLe;
  double rhs = 0.0;
};

// Parsed LP file, names kept as written.
struct LpProblem {
  bool minimize = true;
  double offset = 0.0;  // from the `objective offset` comment, if any
  LpTerms objective;
  std::vector<LpRow> rows;
  std::map<std::string, std::pair<double, double>> bounds;
  std::vector<std::string> binaries;
};

// Reads the subset of the LP format that write_lp produces (plus `<`/`>`
// senses, `lo <= x <= hi` bounds and `st`/`bin` section aliases). Throws
// ParseError naming the line on malformed input.
LpProblem parse_lp(std::string_view text);

}  // namespace chromatic

#endif  // CHROMATIC_LP_FORMAT_HPP
