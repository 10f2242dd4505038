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

#include "chromatic/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace chromatic {
namespace {

constexpr std::size_t kWrapColumn = 240;

std::string number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

// Appends " + name" / " - 2 name", wrapping before kWrapColumn.
void append_term(std::string& line, std::ostream& out, double coef,
                 const std::string& name) {
  std::string piece = coef < 0 ? " -" : " +";
  const double mag = std::abs(coef);
  if (mag != 1.0) piece += " " + number(mag);
  piece += " " + name;
  if (line.size() + piece.size() > kWrapColumn) {
    out << line << '\n';
    line.clear();
  }
  line += piece;
}

std::string_view sense_text(Sense s) {
  switch (s) {
    case Sense::kLe: return "<=";
    case Sense::kGe: return ">=";
    case Sense::kEq: return "=";
  }
  return "=";
}

}  // namespace

void write_lp(std::ostream& out, const MilpModel& m) {
  out << "\\ chromatic model " << formulation_name(m.kind()) << '\n';
  out << "\\ objective offset " << number(m.objective().offset) << '\n';
  out << "Minimize\n";
  std::string line = " obj:";
  for (const Term& t : m.objective().terms) {
    append_term(line, out, t.coef, m.variable_name(t.var));
  }
  out << line << '\n';
  out << "Subject To\n";
  for (const Constraint& c : m.constraints()) {
    line = " " + c.name + ":";
    for (const Term& t : c.terms) {
      append_term(line, out, t.coef, m.variable_name(t.var));
    }
    out << line << ' ' << sense_text(c.sense) << ' ' << number(c.rhs) << '\n';
  }
  if (!m.fixings().empty()) {
    out << "Bounds\n";
    for (const auto& [var, value] : m.fixings()) {
      out << ' ' << m.variable_name(var) << " = " << value << '\n';
    }
  }
  out << "Binaries\n";
  line.clear();
  for (const std::string& name : m.variable_names()) {
    if (line.size() + name.size() + 1 > kWrapColumn) {
      out << line << '\n';
      line.clear();
    }
    line += ' ' + name;
  }
  if (!line.empty()) out << line << '\n';
  out << "End\n";
}

std::string to_lp(const MilpModel& m) {
  std::ostringstream out;
  write_lp(out, m);
  return out.str();
}

namespace {

enum class Section { kNone, kObjective, kRows, kBounds, kBinaries, kGenerals, kEnd };

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<Section> section_header(const std::string& line) {
  const std::string l = lower(trim(line));
  if (l == "minimize" || l == "minimise" || l == "min" || l == "maximize" ||
      l == "maximise" || l == "max") {
    return Section::kObjective;
  }
  if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") {
    return Section::kRows;
  }
  if (l == "bounds" || l == "bound") return Section::kBounds;
  if (l == "binaries" || l == "binary" || l == "bin") return Section::kBinaries;
  if (l == "generals" || l == "general" || l == "gen") return Section::kGenerals;
  if (l == "end") return Section::kEnd;
  return std::nullopt;
}

std::vector<std::string> tokenize(std::string_view text, int line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '<' || ch == '>' || ch == '=') {
      std::size_t j = i + 1;
      if (j < text.size() && (text[j] == '=' || text[j] == '<' || text[j] == '>')) ++j;
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    } else if (ch == '+' || ch == '-' || ch == ':') {
      tokens.emplace_back(1, ch);
      ++i;
    } else if (std::isprint(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             std::string_view("<>=:+-").find(text[j]) == std::string_view::npos) {
        ++j;
      }
      // keep exponents such as 1e-06 in one token
      while (j < text.size() && (text[j] == '+' || text[j] == '-') && j > i &&
             (text[j - 1] == 'e' || text[j - 1] == 'E') &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      throw ParseError(line, "unexpected character");
    }
  }
  return tokens;
}

std::optional<double> to_number(const std::string& token) {
  if (token.empty()) return std::nullopt;
  const char first = token.front();
  if (!std::isdigit(static_cast<unsigned char>(first)) && first != '.') {
    return std::nullopt;
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

std::optional<Sense> to_sense(const std::string& token) {
  if (token == "<=" || token == "<" || token == "=<") return Sense::kLe;
  if (token == ">=" || token == ">" || token == "=>") return Sense::kGe;
  if (token == "=") return Sense::kEq;
  return std::nullopt;
}

// Linear expression terms; consumes tokens from `pos` up to a sense token
// or the end.
LpTerms parse_terms(const std::vector<std::string>& tokens, std::size_t& pos, int line) {
  LpTerms terms;
  while (pos < tokens.size() && !to_sense(tokens[pos])) {
    double sign = 1.0;
    bool have_sign = false;
    while (pos < tokens.size() && (tokens[pos] == "+" || tokens[pos] == "-")) {
      if (tokens[pos] == "-") sign = -sign;
      have_sign = true;
      ++pos;
    }
    if (pos >= tokens.size()) throw ParseError(line, "dangling sign");
    double coef = 1.0;
    if (auto v = to_number(tokens[pos])) {
      coef = *v;
      ++pos;
      if (pos >= tokens.size() || to_sense(tokens[pos]) || tokens[pos] == "+" ||
          tokens[pos] == "-") {
        throw ParseError(line, "constant terms are not supported");
      }
    }
    if (!have_sign && !terms.empty()) throw ParseError(line, "missing operator");
    const std::string& name = tokens[pos];
    if (name == ":" || to_number(name)) throw ParseError(line, "expected variable name");
    terms.emplace_back(name, sign * coef);
    ++pos;
  }
  return terms;
}

double parse_signed(const std::vector<std::string>& tokens, std::size_t& pos, int line) {
  double sign = 1.0;
  while (pos < tokens.size() && (tokens[pos] == "+" || tokens[pos] == "-")) {
    if (tokens[pos] == "-") sign = -sign;
    ++pos;
  }
  if (pos >= tokens.size()) throw ParseError(line, "expected number");
  const std::string t = lower(tokens[pos]);
  ++pos;
  if (t == "inf" || t == "infinity") return sign * HUGE_VAL;
  auto v = to_number(t);
  if (!v) throw ParseError(line, "expected number, got '" + t + "'");
  return sign * *v;
}

}  // namespace

LpProblem parse_lp(std::string_view text) {
  LpProblem lp;
  Section section = Section::kNone;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  // rows and the objective may span lines: buffer until complete
  std::vector<std::string> pending;
  int pending_line = 0;

  const auto flush_objective = [&] {
    if (pending.empty()) return;
    std::size_t pos = 0;
    if (pending.size() >= 2 && pending[1] == ":") pos = 2;
    lp.objective = parse_terms(pending, pos, pending_line);
    if (pos != pending.size()) throw ParseError(pending_line, "malformed objective");
    pending.clear();
  };
  const auto try_row = [&](bool force) {
    if (pending.empty()) return;
    // complete once a sense and a right-hand side are present
    auto it = std::find_if(pending.begin(), pending.end(),
                           [](const std::string& t) { return to_sense(t).has_value(); });
    if (it == pending.end() || it + 1 == pending.end()) {
      if (force) throw ParseError(pending_line, "incomplete constraint");
      return;
    }
    LpRow row;
    std::size_t pos = 0;
    if (pending.size() >= 2 && pending[1] == ":") {
      row.name = pending[0];
      pos = 2;
    } else {
      row.name = "R" + std::to_string(lp.rows.size() + 1);
    }
    row.terms = parse_terms(pending, pos, pending_line);
    row.sense = *to_sense(pending[pos]);
    ++pos;
    row.rhs = parse_signed(pending, pos, pending_line);
    if (pos != pending.size()) throw ParseError(pending_line, "trailing tokens");
    lp.rows.push_back(std::move(row));
    pending.clear();
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    if (stripped.front() == '\\') {
      static constexpr std::string_view kOffset = "\\ objective offset ";
      if (stripped.starts_with(kOffset)) {
        const std::vector<std::string> t = tokenize(stripped.substr(kOffset.size()), lineno);
        std::size_t pos = 0;
        lp.offset = parse_signed(t, pos, lineno);
      }
      continue;
    }
    if (section == Section::kEnd) throw ParseError(lineno, "text after End");
    if (auto next = section_header(stripped)) {
      if (section == Section::kObjective) flush_objective();
      if (section == Section::kRows) try_row(true);
      if (*next == Section::kObjective) {
        lp.minimize = lower(stripped).starts_with("min");
      }
      section = *next;
      continue;
    }
    std::vector<std::string> tokens = tokenize(stripped, lineno);
    switch (section) {
      case Section::kNone:
        throw ParseError(lineno, "content before the objective section");
      case Section::kObjective:
        if (pending.empty()) pending_line = lineno;
        pending.insert(pending.end(), tokens.begin(), tokens.end());
        break;
      case Section::kRows: {
        // a new labelled row closes an incomplete previous one
        if (!pending.empty() && tokens.size() >= 2 && tokens[1] == ":") try_row(true);
        if (pending.empty()) pending_line = lineno;
        pending.insert(pending.end(), tokens.begin(), tokens.end());
        try_row(false);
        break;
      }
      case Section::kBounds: {
        std::size_t pos = 0;
        if (tokens.size() == 2 && lower(tokens[1]) == "free") {
          lp.bounds[tokens[0]] = {-HUGE_VAL, HUGE_VAL};
          break;
        }
        if (tokens.size() >= 3 && to_sense(tokens[1]) && !to_number(tokens[0]) &&
            tokens[0] != "-" && tokens[0] != "+") {
          // name <sense> value
          const std::string name = tokens[0];
          const Sense s = *to_sense(tokens[1]);
          pos = 2;
          const double v = parse_signed(tokens, pos, lineno);
          if (pos != tokens.size()) throw ParseError(lineno, "malformed bound");
          auto [it, _] = lp.bounds.try_emplace(name, 0.0, HUGE_VAL);
          if (s != Sense::kGe) it->second.second = v;
          if (s != Sense::kLe) it->second.first = v;
          break;
        }
        // lo <= name <= hi
        const double lo = parse_signed(tokens, pos, lineno);
        if (pos + 3 > tokens.size() || to_sense(tokens[pos]) != Sense::kLe) {
          throw ParseError(lineno, "malformed bound");
        }
        const std::string name = tokens[pos + 1];
        pos += 2;
        if (to_sense(tokens[pos]) != Sense::kLe) throw ParseError(lineno, "malformed bound");
        ++pos;
        const double hi = parse_signed(tokens, pos, lineno);
        if (pos != tokens.size()) throw ParseError(lineno, "malformed bound");
        lp.bounds[name] = {lo, hi};
        break;
      }
      case Section::kBinaries:
      case Section::kGenerals:
        for (const std::string& t : tokens) {
          if (t == ":" || t == "+" || t == "-" || to_sense(t)) {
            throw ParseError(lineno, "expected variable name");
          }
          if (section == Section::kBinaries) lp.binaries.push_back(t);
        }
        break;
      case Section::kEnd:
        break;
    }
  }
  if (section == Section::kObjective) flush_objective();
  if (section == Section::kRows) try_row(true);
  return lp;
}

}  // namespace chromatic
