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

#include "chromatic/solver.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <thread>

#include "chromatic/lp_format.hpp"
#include "chromatic/oracle.hpp"
#include "chromatic/formulations.hpp"

namespace chromatic {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kTimeoutNoSolution: return "timeout_no_solution";
    case SolveStatus::kError: return "error";
  }
  return "error";
}

namespace {

std::optional<SolveStatus> status_from_name(std::string_view name) {
  for (SolveStatus s : {SolveStatus::kOptimal, SolveStatus::kFeasible,
                        SolveStatus::kInfeasible, SolveStatus::kUnbounded,
                        SolveStatus::kTimeoutNoSolution, SolveStatus::kError}) {
    if (status_name(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

struct CompiledDialect {
  std::vector<std::pair<std::regex, SolveStatus>> status_rules;
  std::optional<std::regex> objective;
  std::optional<std::regex> bound;
  std::optional<std::regex> skip_line;
  std::optional<std::regex> value_line;

  explicit CompiledDialect(const SolutionDialect& d) {
    const auto compile = [](const std::string& p) -> std::optional<std::regex> {
      if (p.empty()) return std::nullopt;
      return std::regex(p, std::regex::ECMAScript | std::regex::optimize);
    };
    for (const auto& [pattern, status] : d.status_rules) {
      status_rules.emplace_back(std::regex(pattern, std::regex::ECMAScript), status);
    }
    objective = compile(d.objective);
    bound = compile(d.bound);
    skip_line = compile(d.skip_line);
    value_line = compile(d.value_line);
  }
};

// Status, objective and bound information on one line. Returns true when
// the line carried any of them.
bool scan_header(const CompiledDialect& d, const std::string& line, RawSolution& out,
                 bool from_log) {
  bool consumed = false;
  for (const auto& [re, status] : d.status_rules) {
    if (std::regex_search(line, re)) {
      if (!out.status) out.status = status;
      consumed = true;
      break;
    }
  }
  std::smatch m;
  if (d.objective && std::regex_search(line, m, *d.objective)) {
    if (auto v = parse_double(m[1].str()); v && (!from_log || !out.objective)) {
      out.objective = v;
    }
    consumed = true;
  }
  if (d.bound && std::regex_search(line, m, *d.bound)) {
    if (auto v = parse_double(m[1].str())) out.bound = v;
    consumed = true;
  }
  return consumed;
}

}  // namespace

SolutionDialect cbc_dialect() {
  SolutionDialect d;
  d.name = "cbc";
  d.status_rules = {
      {R"(^Optimal\b)", SolveStatus::kOptimal},
      {R"(^(Integer )?[Ii]nfeasible\b)", SolveStatus::kInfeasible},
      {R"(^Unbounded\b)", SolveStatus::kUnbounded},
      {R"(^Stopped on)", SolveStatus::kFeasible},
      {R"(^Result - Optimal solution found)", SolveStatus::kOptimal},
      {R"(^Result - (Problem proven infeasible|Linear relaxation infeasible))",
       SolveStatus::kInfeasible},
      {R"(^Result - (Linear relaxation unbounded|Problem proven unbounded))",
       SolveStatus::kUnbounded},
      {R"(^Result - Stopped on)", SolveStatus::kFeasible},
  };
  d.objective = R"([Oo]bjective value:?\s+([-+0-9.eE]+))";
  d.bound = R"(^Lower bound:\s+([-+0-9.eE]+))";
  d.skip_line = "";
  d.value_line = R"(^\s*(?:\*\*)?\s*\d+\s+(\S+)\s+(\S+)(?:\s+\S+)?\s*$)";
  return d;
}

SolutionDialect sol_dialect() {
  SolutionDialect d;
  d.name = "sol";
  for (SolveStatus s : {SolveStatus::kOptimal, SolveStatus::kFeasible,
                        SolveStatus::kInfeasible, SolveStatus::kUnbounded,
                        SolveStatus::kTimeoutNoSolution, SolveStatus::kError}) {
    d.status_rules.emplace_back("^status\\s+" + std::string(status_name(s)) + "\\s*$", s);
  }
  d.objective = R"(^objective\s+(\S+)\s*$)";
  d.bound = R"(^bound\s+(\S+)\s*$)";
  d.skip_line = R"(^\s*#.*$)";
  d.value_line = R"(^\s*(\S+)\s+(\S+)\s*$)";
  return d;
}

std::optional<SolutionDialect> dialect_by_name(std::string_view name) {
  if (name == "cbc") return cbc_dialect();
  if (name == "sol") return sol_dialect();
  return std::nullopt;
}

RawSolution parse_solution(std::string_view text, const SolutionDialect& dialect,
                           std::string_view log) {
  const CompiledDialect d(dialect);
  RawSolution out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char ch) { return std::isspace(ch); })) {
      continue;
    }
    if (scan_header(d, line, out, false)) continue;
    if (d.skip_line && std::regex_match(line, *d.skip_line)) continue;
    std::smatch m;
    if (d.value_line && std::regex_match(line, m, *d.value_line)) {
      const auto value = parse_double(m[2].str());
      if (!value) throw ParseError(lineno, "bad value '" + m[2].str() + "'");
      out.values[m[1].str()] = *value;
      continue;
    }
    throw ParseError(lineno, "unrecognized solution line");
  }
  std::istringstream log_in{std::string(log)};
  while (std::getline(log_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    scan_header(d, line, out, true);
  }
  return out;
}

SolveResult normalize_solution(const MilpModel& m, const RawSolution& raw) {
  SolveResult res;
  if (!raw.status) {
    res.status = SolveStatus::kError;
    res.message = "solver reported no status";
    return res;
  }
  res.status = *raw.status;
  const double offset = m.objective().offset;
  const auto dual_bound = [&]() -> std::optional<long long> {
    if (!raw.bound || std::abs(*raw.bound) >= 1e49) return std::nullopt;
    return static_cast<long long>(std::ceil(*raw.bound - 1e-6) + offset);
  };

  if (res.status == SolveStatus::kOptimal || res.status == SolveStatus::kFeasible) {
    const bool no_incumbent =
        raw.values.empty() || (raw.objective && std::abs(*raw.objective) >= 1e49);
    if (no_incumbent) {
      if (res.status == SolveStatus::kOptimal) {
        res.status = SolveStatus::kError;
        res.message = "optimal status without a solution";
      } else {
        res.status = SolveStatus::kTimeoutNoSolution;
        res.lower_bound = dual_bound();
      }
      return res;
    }
    std::vector<double> values(m.num_variables(), 0.0);
    for (const auto& [var, value] : m.fixings()) values[var] = value;
    for (const auto& [name, value] : raw.values) {
      const int var = m.find_variable(name);
      if (var < 0) {
        res.status = SolveStatus::kError;
        res.message = "solution names unknown variable '" + name + "'";
        return res;
      }
      values[var] = value;
    }
    const bool integral = std::all_of(values.begin(), values.end(), [](double v) {
      return std::abs(v - std::round(v)) <= 1e-6;
    });
    if (!integral || !violated_constraints(m, values, 1e-6).empty()) {
      if (res.status == SolveStatus::kFeasible) {
        // stopped before any integer solution; the values are an LP point
        res.status = SolveStatus::kTimeoutNoSolution;
        res.lower_bound = dual_bound();
      } else {
        res.status = SolveStatus::kError;
        res.message = "incumbent violates the model";
      }
      return res;
    }
    res.upper_bound = std::llround(objective_value(m, values));
    res.values = std::move(values);
    if (res.status == SolveStatus::kOptimal) {
      res.lower_bound = res.upper_bound;
    } else {
      res.lower_bound = dual_bound();
      if (res.lower_bound && *res.lower_bound >= *res.upper_bound) {
        res.lower_bound = res.upper_bound;
        res.status = SolveStatus::kOptimal;
      }
    }
    return res;
  }
  if (res.status == SolveStatus::kTimeoutNoSolution) res.lower_bound = dual_bound();
  return res;
}

SolverAdapter null_adapter() {
  SolverAdapter a;
  a.name = "null";
  a.kind = SolverAdapter::Kind::kNull;
  a.dialect = sol_dialect();
  return a;
}

SolverAdapter cbc_adapter(std::string executable) {
  SolverAdapter a;
  a.name = "cbc";
  a.executable = std::move(executable);
  a.args = {"{model}", "sec", "{timelimit}", "randomCbcSeed", "{seed}",
            "threads", "{threads}", "solve", "solu", "{solout}"};
  a.dialect = cbc_dialect();
  return a;
}

namespace {

std::optional<std::string> resolve_executable(const std::string& name) {
  namespace fs = std::filesystem;
  if (name.empty()) return std::nullopt;
  const auto runnable = [](const fs::path& p) {
    std::error_code ec;
    return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
  };
  if (name.find('/') != std::string::npos) {
    if (runnable(name)) return name;
    return std::nullopt;
  }
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::string_view rest(path);
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    const std::string dir(rest.substr(0, colon));
    if (!dir.empty() && runnable(fs::path(dir) / name)) {
      return (fs::path(dir) / name).string();
    }
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return std::nullopt;
}

}  // namespace

SolverAdapter load_adapter(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open adapter file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("adapter file " + path.string() + ": " + e.what());
  }
  const std::string name = j.value("name", std::string("external"));
  SolverAdapter a;
  if (name == "null") {
    a = null_adapter();
  } else {
    a = cbc_adapter(j.value("executable", std::string("cbc")));
    a.name = name;
    if (j.contains("args")) a.args = j.at("args").get<std::vector<std::string>>();
    if (j.contains("dialect")) {
      const auto& d = j.at("dialect");
      if (d.is_string()) {
        auto known = dialect_by_name(d.get<std::string>());
        if (!known) throw std::runtime_error("unknown dialect " + d.get<std::string>());
        a.dialect = *known;
      } else {
        SolutionDialect custom;
        custom.name = d.value("name", std::string("custom"));
        for (const auto& rule : d.at("status_rules")) {
          auto status = status_from_name(rule.at(1).get<std::string>());
          if (!status) throw std::runtime_error("unknown status in dialect rule");
          custom.status_rules.emplace_back(rule.at(0).get<std::string>(), *status);
        }
        custom.objective = d.value("objective", std::string());
        custom.bound = d.value("bound", std::string());
        custom.skip_line = d.value("skip_line", std::string());
        custom.value_line = d.value("value_line", std::string());
        a.dialect = std::move(custom);
      }
    }
  }
  a.threads = j.value("threads", 1);
  a.grace_seconds = j.value("grace_seconds", 10.0);
  a.keep_workdir = j.value("keep_workdir", false);
  if (const char* env = std::getenv("CHROMATIC_SOLVER"); env && *env) {
    a.executable = env;
  }
  return a;
}

std::optional<SolverAdapter> find_default_adapter() {
  if (const char* env = std::getenv("CHROMATIC_SOLVER"); env && *env) {
    if (auto exe = resolve_executable(env)) return cbc_adapter(*exe);
  }
#ifdef CHROMATIC_DEFAULT_CBC
  if (auto exe = resolve_executable(CHROMATIC_DEFAULT_CBC)) return cbc_adapter(*exe);
#endif
  if (auto exe = resolve_executable("cbc")) return cbc_adapter(*exe);
  return std::nullopt;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SolveResult solve_with_oracle(const MilpModel& m) {
  SolveResult res;
  const ModelMeta& meta = m.meta();
  if (!meta.graph || meta.graph->num_vertices() > kDefaultOracleCap) {
    res.status = SolveStatus::kError;
    res.message = "null adapter handles graphs up to " +
                  std::to_string(kDefaultOracleCap) + " vertices";
    return res;
  }
  const OracleResult oracle = chromatic_number_exact(*meta.graph);
  if (m.kind() != Formulation::kRep && oracle.chi > meta.upper_bound) {
    res.status = SolveStatus::kInfeasible;
    return res;
  }
  std::vector<double> values;
  try {
    values = encode_coloring(m, oracle.witness);
  } catch (const std::invalid_argument& e) {
    res.status = SolveStatus::kError;
    res.message = e.what();
    return res;
  }
  if (!violated_constraints(m, values, 1e-9).empty()) {
    res.status = SolveStatus::kError;
    res.message = "optimal coloring is not feasible for the model";
    return res;
  }
  res.status = SolveStatus::kOptimal;
  res.upper_bound = std::llround(objective_value(m, values));
  res.lower_bound = res.upper_bound;
  res.values = std::move(values);
  return res;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

std::string expand(std::string arg, const std::map<std::string, std::string>& vars) {
  for (const auto& [key, value] : vars) {
    std::size_t pos = 0;
    while ((pos = arg.find(key, pos)) != std::string::npos) {
      arg.replace(pos, key.size(), value);
      pos += value.size();
    }
  }
  return arg;
}

struct ProcessOutcome {
  bool started = false;
  bool killed = false;
  int exit_code = -1;
};

ProcessOutcome run_process(const std::string& exe, const std::vector<std::string>& args,
                           const std::filesystem::path& workdir,
                           const std::filesystem::path& log, double deadline) {
  ProcessOutcome out;
  std::vector<std::string> argv_store;
  argv_store.push_back(exe);
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  argv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) return out;
  if (pid == 0) {
    ::setpgid(0, 0);
    const int fd = ::open(log.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd >= 0) {
      ::dup2(fd, STDOUT_FILENO);
      ::dup2(fd, STDERR_FILENO);
      ::close(fd);
    }
    if (::chdir(workdir.c_str()) != 0) ::_exit(126);
    ::execv(exe.c_str(), argv.data());
    ::_exit(127);
  }
  out.started = true;
  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  auto pause = std::chrono::milliseconds(2);
  while (true) {
    const pid_t r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0) return out;
    if (seconds_since(start) > deadline) {
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      out.killed = true;
      return out;
    }
    std::this_thread::sleep_for(pause);
    pause = std::min(pause * 2, std::chrono::milliseconds(50));
  }
  if (WIFEXITED(status)) out.exit_code = WEXITSTATUS(status);
  return out;
}

}  // namespace

SolveResult solve(const MilpModel& m, const SolverAdapter& adapter,
                  const SolveOptions& options) {
  namespace fs = std::filesystem;
  const auto start = std::chrono::steady_clock::now();
  if (adapter.kind == SolverAdapter::Kind::kNull) {
    SolveResult res = solve_with_oracle(m);
    res.wall_time = seconds_since(start);
    return res;
  }

  SolveResult res;
  const auto exe = resolve_executable(adapter.executable);
  if (!exe) {
    res.status = SolveStatus::kError;
    res.message = "solver not found: '" + adapter.executable + "'";
    return res;
  }
  std::string pattern = (fs::temp_directory_path() / "chromatic-XXXXXX").string();
  if (::mkdtemp(pattern.data()) == nullptr) {
    res.status = SolveStatus::kError;
    res.message = "cannot create a temporary directory";
    return res;
  }
  const fs::path workdir = pattern;
  const fs::path model_path = workdir / "model.lp";
  const fs::path sol_path = workdir / "model.sol";
  const fs::path log_path = workdir / "solver.log";
  {
    std::ofstream out(model_path, std::ios::binary);
    write_lp(out, m);
  }
  const std::map<std::string, std::string> vars = {
      {"{model}", model_path.string()},
      {"{timelimit}", format_seconds(options.time_limit)},
      {"{seed}", std::to_string(options.seed % 2147483647ULL)},
      {"{solout}", sol_path.string()},
      {"{threads}", std::to_string(adapter.threads)},
  };
  std::vector<std::string> args;
  for (const auto& a : adapter.args) args.push_back(expand(a, vars));

  const ProcessOutcome proc = run_process(*exe, args, workdir, log_path,
                                          options.time_limit + adapter.grace_seconds);
  const std::string log = read_file(log_path);
  const std::string sol = fs::exists(sol_path) ? read_file(sol_path) : std::string();
  if (!proc.started) {
    res.status = SolveStatus::kError;
    res.message = "failed to start solver";
  } else if (proc.exit_code == 127 && sol.empty()) {
    res.status = SolveStatus::kError;
    res.message = "solver could not be executed";
  } else {
    try {
      const RawSolution raw = parse_solution(sol, adapter.dialect, log);
      res = normalize_solution(m, raw);
      if (proc.killed && res.status == SolveStatus::kError) {
        res.status = SolveStatus::kTimeoutNoSolution;
        res.message = "solver killed after time limit + grace";
      }
    } catch (const ParseError& e) {
      res.status = SolveStatus::kError;
      res.message = std::string("unparsable solver output: ") + e.what();
    }
  }
  if (res.status == SolveStatus::kError) res.log = log;
  std::error_code ec;
  if (!adapter.keep_workdir) fs::remove_all(workdir, ec);
  res.wall_time = seconds_since(start);
  return res;
}

}  // namespace chromatic
