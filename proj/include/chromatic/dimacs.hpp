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

#ifndef CHROMATIC_DIMACS_HPP
#define CHROMATIC_DIMACS_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/parse_error.hpp"

namespace chromatic {

struct DimacsFile {
  Graph graph;
  int declared_edges = 0;             // the m of the `p` line
  std::vector<std::string> comments;  // `c` lines without the prefix
};

// DIMACS .col reader. Vertex ids in the file are 1-based; vertex i in the
// file becomes vertex i-1 of the graph. Duplicate and reversed `e` lines
// collapse into one edge.
DimacsFile read_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);
Graph read_dimacs_file(const std::filesystem::path& path);

// Writes `p edge n m` followed by one `e u v` line per edge in canonical
// order. Each comment becomes a `c` line before the header.
void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments = {});
std::string to_dimacs(const Graph& g,
                      std::span<const std::string> comments = {});
void write_dimacs_file(const std::filesystem::path& path, const Graph& g,
                       std::span<const std::string> comments = {});

// Coloring text: one `v <vertex> <color>` line per vertex, both 1-based.
// `c` comment lines and blank lines are ignored when reading; every vertex
// must get exactly one color.
Coloring read_coloring(std::istream& in, int num_vertices);
Coloring read_coloring_file(const std::filesystem::path& path,
                            int num_vertices);
void write_coloring(std::ostream& out, const Coloring& c);

}  // namespace chromatic

#endif  // CHROMATIC_DIMACS_HPP
