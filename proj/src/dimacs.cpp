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

#include "chromatic/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace chromatic {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long parse_int(std::string_view token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool is_blank(std::string_view line) {
  for (char ch : line) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

DimacsFile read_dimacs(std::istream& in) {
  DimacsFile file;
  std::optional<int> n;
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    const auto tokens = split_ws(line);
    const std::string_view tag = tokens.front();
    if (tag == "c") {
      const auto pos = line.find('c');
      std::string_view rest = std::string_view(line).substr(pos + 1);
      if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      file.comments.emplace_back(rest);
    } else if (tag == "p") {
      if (n) throw ParseError(lineno, "duplicate 'p' line");
      if (tokens.size() != 4) {
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      }
      if (tokens[1] != "edge" && tokens[1] != "col" && tokens[1] != "edges") {
        throw ParseError(lineno, "unknown problem format '" +
                                     std::string(tokens[1]) + "'");
      }
      const long long nv = parse_int(tokens[2], lineno);
      const long long ne = parse_int(tokens[3], lineno);
      if (nv < 0 || ne < 0 || nv > 100'000'000 || ne > 2'000'000'000) {
        throw ParseError(lineno, "invalid vertex or edge count");
      }
      n = static_cast<int>(nv);
      file.declared_edges = static_cast<int>(ne);
      edges.reserve(static_cast<std::size_t>(std::min<long long>(ne, 10'000'000)));
    } else if (tag == "e") {
      if (!n) throw ParseError(lineno, "edge before 'p' line");
      if (tokens.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      const long long u = parse_int(tokens[1], lineno);
      const long long v = parse_int(tokens[2], lineno);
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw ParseError(lineno, "vertex id out of range [1," +
                                     std::to_string(*n) + "]");
      }
      if (u == v) {
        throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(lineno, "unrecognized line '" + std::string(tag) + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing 'p' line");
  file.graph = Graph(*n, edges);
  return file;
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_dimacs(in).graph;
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_dimacs(in).graph;
}

void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
}

std::string to_dimacs(const Graph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  write_dimacs(out, g, comments);
  return out.str();
}

void write_dimacs_file(const std::filesystem::path& path, const Graph& g,
                       std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dimacs(out, g, comments);
}

Coloring read_coloring(std::istream& in, int num_vertices) {
  Coloring c;
  c.colors.assign(num_vertices, 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.front() == "c") continue;
    if (tokens.front() != "v" || tokens.size() != 3) {
      throw ParseError(lineno, "expected 'v <vertex> <color>'");
    }
    const long long v = parse_int(tokens[1], lineno);
    const long long color = parse_int(tokens[2], lineno);
    if (v < 1 || v > num_vertices) {
      throw ParseError(lineno, "vertex id out of range [1," +
                                   std::to_string(num_vertices) + "]");
    }
    if (color < 1 || color > num_vertices) {
      throw ParseError(lineno, "color out of range");
    }
    if (c.colors[v - 1] != 0) {
      throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
    }
    c.colors[v - 1] = static_cast<int>(color);
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (c.colors[v] == 0) {
      throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " has no color");
    }
  }
  return c;
}

Coloring read_coloring_file(const std::filesystem::path& path,
                            int num_vertices) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_coloring(in, num_vertices);
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    out << "v " << v + 1 << ' ' << c.colors[v] << '\n';
  }
}

}  // namespace chromatic
