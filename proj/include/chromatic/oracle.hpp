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

#ifndef CHROMATIC_ORACLE_HPP
#define CHROMATIC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "chromatic/graph.hpp"

namespace chromatic {

// Exact coloring by exhaustive backtracking, for desk-scale graphs only.
// Used as ground truth when testing formulations and preprocessing.

inline constexpr int kDefaultOracleCap = 25;

class OracleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KColorResult {
  bool colorable = false;
  std::optional<Coloring> witness;
  std::int64_t nodes_explored = 0;
};

struct OracleResult {
  int chi = 0;
  Coloring witness;
  std::int64_t nodes_explored = 0;
};

// Saturation-degree ordered backtracking. A vertex may only open color
// max_used + 1, which removes color-permutation symmetry. Throws
// OracleCapError when g has more than `cap` vertices (cap <= 64).
KColorResult is_k_colorable(const Graph& g, int k, int cap = kDefaultOracleCap);

// Smallest k with is_k_colorable(g, k), searched upward from a greedy
// clique size; a greedy coloring supplies the upper end.
OracleResult chromatic_number_exact(const Graph& g,
                                    int cap = kDefaultOracleCap);

}  // namespace chromatic

#endif  // CHROMATIC_ORACLE_HPP
