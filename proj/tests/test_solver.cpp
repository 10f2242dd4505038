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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "chromatic/formulations.hpp"
#include "chromatic/generators.hpp"
#include "chromatic/oracle.hpp"
#include "chromatic/solver.hpp"
#include "test_util.hpp"

using namespace chromatic;
namespace fs = std::filesystem;

namespace {

// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "chromatic-test-XXXXXX").string();
    REQUIRE(::mkdtemp(pattern.data()) != nullptr);
    path = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

fs::path write_script(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream(p) << "#!/bin/sh\n" << body;
  fs::permissions(p, fs::perms::owner_all);
  return p;
}

fs::path write_json(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "adapter.json";
  std::ofstream(p) << text;
  return p;
}

// Runs `fn` when a CBC binary is available.
template <typename Fn>
void with_cbc(Fn fn) {
  const auto cbc = find_default_adapter();
  if (!cbc) {
    MESSAGE("CBC not found; skipping");
    return;
  }
  fn(*cbc);
}

}  // namespace

TEST_CASE("native dialect") {
  const RawSolution inf = parse_solution("status infeasible\n", sol_dialect());
  CHECK(inf.status == SolveStatus::kInfeasible);
  CHECK(inf.values.empty());

  const RawSolution r = parse_solution(
      "# written by hand\nstatus optimal\nobjective 1\nbound 1\ny_1_1 1\ny_1_2 0\nz 1e-9\n",
      sol_dialect());
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK(r.objective == 1.0);
  CHECK(r.bound == 1.0);
  CHECK(r.values == std::map<std::string, double>{{"y_1_1", 1.0}, {"y_1_2", 0.0}, {"z", 1e-9}});

  try {
    parse_solution("status optimal\ny_1_1 one\n", sol_dialect());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_solution("status optimal\nthree words here\n", sol_dialect()),
                  ParseError);
}

TEST_CASE("CBC dialect") {
  const RawSolution opt = parse_solution(
      "Optimal - objective value 1.00000000\n"
      "      0 y_1_1                   1                       0\n"
      "**    1 y_1_2                   0                       1\n",
      cbc_dialect());
  CHECK(opt.status == SolveStatus::kOptimal);
  CHECK(opt.objective == 1.0);
  CHECK(opt.values.size() == 2);
  CHECK(opt.values.at("y_1_1") == 1.0);

  const RawSolution stopped = parse_solution(
      "Stopped on time - objective value 4.00000000\n      0 x_1_1   1   0\n",
      cbc_dialect(), "Result - Stopped on time limit\n\nObjective value: 4\nLower bound: 2.95\n");
  CHECK(stopped.status == SolveStatus::kFeasible);
  CHECK(stopped.objective == 4.0);
  CHECK(stopped.bound == 2.95);

  const RawSolution infeasible = parse_solution(
      "Infeasible - objective value 0.00000000\n      0 x_1_1   0.5   0\n", cbc_dialect());
  CHECK(infeasible.status == SolveStatus::kInfeasible);

  const RawSolution from_log =
      parse_solution("", cbc_dialect(), "Result - Problem proven infeasible\n");
  CHECK(from_log.status == SolveStatus::kInfeasible);
}

TEST_CASE("parsers fail only with ParseError on random text") {
  Rng rng(71);
  for (const SolutionDialect& d : {sol_dialect(), cbc_dialect()}) {
    for (int t = 0; t < 1500; ++t) {
      std::string s;
      const std::size_t len = rng.index(120);
      for (std::size_t i = 0; i < len; ++i) {
        s += rng.index(8) == 0 ? '\n' : static_cast<char>(32 + rng.index(95));
      }
      try {
        parse_solution(s, d, s);
      } catch (const ParseError&) {
      }
    }
  }
  CHECK(true);
}

TEST_CASE("normalization") {
  const MilpModel pop = build_pop(complete_graph(2), 2, 0);  // offset 1

  RawSolution raw;
  raw.status = SolveStatus::kOptimal;
  raw.values = {{"y_1_1", 1.0}, {"y_1_2", 0.0}};
  SolveResult r = normalize_solution(pop, raw);
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK(r.lower_bound == 2);
  CHECK(r.upper_bound == 2);

  raw.status = SolveStatus::kFeasible;
  raw.bound = 0.9999999;
  r = normalize_solution(pop, raw);
  CHECK(r.lower_bound == 2);  // ceil(1 - eps) + 1 meets the incumbent
  CHECK(r.status == SolveStatus::kOptimal);

  raw.bound = 0.4;
  r = normalize_solution(pop, raw);
  CHECK(r.lower_bound == 2);  // ceil(0.4) + 1, integrality closes the gap
  CHECK(r.status == SolveStatus::kOptimal);
  raw.bound = -0.5;
  r = normalize_solution(pop, raw);
  CHECK(r.status == SolveStatus::kFeasible);
  CHECK(r.lower_bound == 1);
  CHECK(r.upper_bound == 2);

  raw.values["y_1_1"] = 0.5;
  CHECK(normalize_solution(pop, raw).status == SolveStatus::kTimeoutNoSolution);
  raw.status = SolveStatus::kOptimal;
  CHECK(normalize_solution(pop, raw).status == SolveStatus::kError);

  raw.values = {{"nope", 1.0}};
  CHECK(normalize_solution(pop, raw).status == SolveStatus::kError);

  RawSolution none;
  CHECK(normalize_solution(pop, none).status == SolveStatus::kError);
  none.status = SolveStatus::kInfeasible;
  const SolveResult inf = normalize_solution(pop, none);
  CHECK(inf.status == SolveStatus::kInfeasible);
  CHECK_FALSE(inf.lower_bound);
  CHECK_FALSE(inf.upper_bound);
}

TEST_CASE("null adapter") {
  const SolveResult k2 = solve(build_pop(complete_graph(2), 2, 0), null_adapter());
  CHECK(k2.status == SolveStatus::kOptimal);
  CHECK(k2.lower_bound == 2);
  CHECK(k2.upper_bound == 2);

  CHECK(solve(build_ass(cycle_graph(5), 2), null_adapter()).status ==
        SolveStatus::kInfeasible);
  CHECK(solve(build_rep(gnp_random(30, 0.5, 1)), null_adapter()).status ==
        SolveStatus::kError);

  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const Graph g = testing::random_graph(9, 0.5, rng);
    const int chi = testing::brute_force_chi(g);
    const int H = std::max(2, chi + 1);
    for (const MilpModel& m : {build_ass(g, H), build_pop2(g, H, 0), build_rep(g)}) {
      const SolveResult r = solve(m, null_adapter());
      REQUIRE(r.status == SolveStatus::kOptimal);
      CHECK(r.upper_bound == chi);
      CHECK(verify_coloring(g, extract_coloring(m, r.values)).valid);
    }
  }
}

TEST_CASE("CBC solves small models") {
  with_cbc([](const SolverAdapter& cbc) {
    const MilpModel k2 = build_pop(complete_graph(2), 2, 0);
    const SolveResult r = solve(k2, cbc, {60.0, 1});
    CHECK(r.status == SolveStatus::kOptimal);
    CHECK(r.lower_bound == 2);
    CHECK(r.upper_bound == 2);

    CHECK(solve(build_ass(cycle_graph(5), 2), cbc, {60.0, 1}).status ==
          SolveStatus::kInfeasible);
    CHECK(solve(build_pop(cycle_graph(5), 2, 0), cbc, {60.0, 1}).status ==
          SolveStatus::kInfeasible);

    Rng rng(79);
    for (int t = 0; t < 8; ++t) {
      const Graph g = testing::random_graph(10, 0.5, rng);
      const int chi = testing::brute_force_chi(g);
      const int H = chi + 1;
      for (const MilpModel& m :
           {build_ass_s(g, H), build_ass(g, H), build_pop(g, H, 0), build_pop2(g, H, 0),
            build_rep(g)}) {
        const SolveResult s = solve(m, cbc, {60.0, 1});
        REQUIRE(s.status == SolveStatus::kOptimal);
        CHECK(s.upper_bound == chi);
        const Coloring c = extract_coloring(m, s.values);
        CHECK(verify_coloring(g, c).valid);
        CHECK(c.num_colors() == *s.upper_bound);
      }
    }
  });
}

TEST_CASE("CBC time limit yields valid bounds") {
  with_cbc([](const SolverAdapter& cbc) {
    const Graph g = gnp_random(70, 0.5, 3);
    const int H = greedy_upper_bound(g).colors;
    const SolveResult r = solve(build_ass_s(g, H), cbc, {1.0, 1});
    CHECK(r.wall_time <= 1.0 + cbc.grace_seconds);
    CHECK((r.status == SolveStatus::kFeasible || r.status == SolveStatus::kTimeoutNoSolution));
    if (r.lower_bound && r.upper_bound) CHECK(*r.lower_bound <= *r.upper_bound);
    if (r.upper_bound) CHECK(*r.upper_bound <= H);
  });
}

TEST_CASE("concurrent solves use separate workspaces") {
  with_cbc([](const SolverAdapter& cbc) {
    std::vector<SolveResult> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        results[t] = solve(build_ass(cycle_graph(5 + 2 * t), 3), cbc, {60.0, 1});
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& r : results) CHECK(r.upper_bound == 3);
  });
}

TEST_CASE("generic adapter with a scripted solver") {
  TempDir dir;
  const MilpModel m = build_pop(complete_graph(2), 2, 0);

  SUBCASE("solution file in the native dialect") {
    const fs::path script = write_script(
        dir.path, "fake.sh",
        "test -f \"$1\" || exit 3\n"
        "printf 'status optimal\\nobjective 1\\ny_1_1 1\\ny_1_2 0\\n' > \"$2\"\n");
    const fs::path json = write_json(
        dir.path, R"({"name": "fake", "executable": ")" + script.string() +
                      R"(", "args": ["{model}", "{solout}"], "dialect": "sol"})");
    const SolverAdapter a = load_adapter(json);
    const SolveResult r = solve(m, a);
    CHECK(r.status == SolveStatus::kOptimal);
    CHECK(r.upper_bound == 2);
  }

  SUBCASE("garbage output keeps the log") {
    const fs::path script =
        write_script(dir.path, "bad.sh", "echo diagnostics; echo 'what?' > \"$1\"\n");
    const fs::path json = write_json(
        dir.path, R"({"executable": ")" + script.string() +
                      R"(", "args": ["{solout}"], "dialect": "sol"})");
    const SolveResult r = solve(m, load_adapter(json));
    CHECK(r.status == SolveStatus::kError);
    CHECK(r.log.find("diagnostics") != std::string::npos);
  }

  SUBCASE("a hung solver is killed after the grace period") {
    const fs::path script = write_script(dir.path, "hang.sh", "sleep 30\n");
    const fs::path json = write_json(
        dir.path, R"({"executable": ")" + script.string() +
                      R"(", "args": [], "dialect": "sol", "grace_seconds": 0.5})");
    const SolveResult r = solve(m, load_adapter(json), {0.5, 0});
    CHECK(r.status == SolveStatus::kTimeoutNoSolution);
    CHECK(r.wall_time < 5.0);
  }

  SUBCASE("custom regex dialect") {
    const fs::path script = write_script(
        dir.path, "custom.sh",
        "printf 'RESULT: OPT\\nvar y_1_1 = 1\\nvar y_1_2 = 0\\n' > \"$1\"\n");
    const fs::path json = write_json(
        dir.path, R"({"executable": ")" + script.string() + R"(", "args": ["{solout}"],
          "dialect": {"name": "custom", "status_rules": [["^RESULT: OPT", "optimal"]],
                      "value_line": "^var (\\S+) = (\\S+)$"}})");
    const SolveResult r = solve(m, load_adapter(json));
    CHECK(r.status == SolveStatus::kOptimal);
    CHECK(r.upper_bound == 2);
  }

  SUBCASE("missing executable") {
    const fs::path json =
        write_json(dir.path, R"({"executable": "/nonexistent/solver", "dialect": "sol"})");
    const SolveResult r = solve(m, load_adapter(json));
    CHECK(r.status == SolveStatus::kError);
    CHECK(r.message.find("not found") != std::string::npos);
  }

  SUBCASE("environment overrides the executable") {
    const fs::path json =
        write_json(dir.path, R"({"executable": "/nonexistent/solver", "dialect": "cbc"})");
    ::setenv("CHROMATIC_SOLVER", "/elsewhere/cbc", 1);
    const SolverAdapter a = load_adapter(json);
    ::unsetenv("CHROMATIC_SOLVER");
    CHECK(a.executable == "/elsewhere/cbc");
  }
}
