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

// Command-line front end: solve, generate, bench, verify and export.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromatic/bench.hpp"
#include "chromatic/dimacs.hpp"
#include "chromatic/formulations.hpp"
#include "chromatic/lp_format.hpp"
#include "chromatic/preprocess.hpp"
#include "chromatic/solver.hpp"

namespace fs = std::filesystem;
using namespace chromatic;

namespace {

struct CommonFlags {
  std::vector<std::string> models;
  std::string clique = "e";
  std::optional<double> time_limit;
  std::optional<double> clique_budget;
  std::uint64_t seed = 0;
  std::string adapter;
  std::string out;
  bool desk_scale = false;
  std::string instance_class;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--model", f.models, "Formulation (repeatable)")
      ->check(CLI::IsMember({"ass-s", "ass", "pop", "pop2", "rep"}));
  cmd->add_option("--clique", f.clique, "Clique objective: c = size, e = size and cut")
      ->check(CLI::IsMember({"c", "e"}));
  cmd->add_option("--time-limit", f.time_limit, "Seconds per solve (default 3600)");
  cmd->add_option("--clique-budget", f.clique_budget,
                  "Seconds for the clique search (default 60)");
  cmd->add_option("--seed", f.seed, "Seed for clique search and solver");
  cmd->add_option("--adapter", f.adapter,
                  "Solver adapter JSON file, or 'cbc' / 'null'");
  cmd->add_option("--out", f.out, "Output CSV path (default stdout)");
  cmd->add_flag("--desk-scale", f.desk_scale, "60 s solves, 5 s clique search");
  cmd->add_option("--class", f.instance_class, "Value for the class column");
}

SolverAdapter resolve_adapter(const std::string& spec) {
  if (spec == "null") return null_adapter();
  if (spec.empty() || spec == "cbc") {
    if (auto a = find_default_adapter()) return *a;
    throw std::runtime_error(
        "no CBC executable found; set CHROMATIC_SOLVER or pass --adapter");
  }
  return load_adapter(spec);
}

RunConfig make_config(const CommonFlags& f) {
  RunConfig c;
  for (const auto& m : f.models) c.models.push_back(*parse_formulation(m));
  if (c.models.empty()) c.models.push_back(Formulation::kPop);
  c.clique_mode = f.clique == "c" ? CliqueMode::kSize : CliqueMode::kExtended;
  if (f.desk_scale) c.apply_desk_scale();
  if (f.time_limit) c.time_limit = *f.time_limit;
  if (f.clique_budget) c.clique_time_budget = *f.clique_budget;
  c.seed = f.seed;
  c.adapter = resolve_adapter(f.adapter);
  c.instance_class = f.instance_class;
  c.jobs = f.jobs;
  c.validate();
  return c;
}

// Writes to the file at `path`, or stdout when it is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_solve(const std::string& file, const CommonFlags& flags,
              const std::string& coloring_out) {
  const Graph g = read_dimacs_file(file);
  const RunConfig config = make_config(flags);
  PreprocessedInstance prep;
  const auto records = solve_instance(g, fs::path(file).stem().string(), config, &prep);

  const int removed = static_cast<int>(prep.reduced.restore_stack.size());
  std::cerr << "preprocess: removed " << removed << " dominated vertices, |V| "
            << g.num_vertices() << " -> " << prep.graph().num_vertices() << ", H "
            << prep.upper_bound << ", |Q| " << prep.clique.size();
  if (!prep.clique.empty()) std::cerr << ", q " << prep.reduced.kept[prep.anchor] + 1;
  std::cerr << (prep.solved_in_preprocessing ? ", solved without ILP" : "") << "\n";

  Output out(flags.out);
  write_csv_header(out.stream());
  const BenchmarkRecord* best = nullptr;
  for (const auto& r : records) {
    write_csv_row(out.stream(), r);
    if (!r.message.empty()) {
      std::cerr << formulation_name(r.model) << ": " << r.message << "\n";
    }
    if (r.coloring && (!best || *r.upper_bound < *best->upper_bound)) best = &r;
  }
  if (!coloring_out.empty()) {
    if (!best) throw std::runtime_error("no coloring available");
    Output file(coloring_out);
    write_coloring(file.stream(), *best->coloring);
  }
  for (const auto& r : records) {
    if (r.status == SolveStatus::kError) return 2;
  }
  return 0;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, const std::string& outdir,
                 const CustomSet& custom) {
  static const std::map<std::string, GenerateKind> kinds = {
      {"set100", GenerateKind::kSet100},
      {"sparse240", GenerateKind::kSparse240},
      {"custom", GenerateKind::kCustom}};
  const auto entries = generate_instances(kinds.at(kind), seed, outdir, custom);
  std::cerr << "wrote " << entries.size() << " instances and manifest.csv to " << outdir
            << "\n";
  return 0;
}

int cmd_bench(const std::string& manifest, const CommonFlags& flags) {
  const RunConfig config = make_config(flags);
  const auto entries = read_manifest_file(manifest);
  const BenchResult result = run_bench(entries, fs::path(manifest).parent_path(), config);
  {
    Output out(flags.out);
    write_csv_header(out.stream());
    for (const auto& r : result.records) write_csv_row(out.stream(), r);
    if (flags.out.empty()) out.stream() << "\n";
  }
  Output summary(flags.out.empty() ? std::string() : flags.out + ".summary.csv");
  write_summary_csv(summary.stream(), result.summary);
  return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& coloring_file) {
  const Graph g = read_dimacs_file(graph_file);
  const Coloring c = read_coloring_file(coloring_file, g.num_vertices());
  const VerifyReport report = verify_coloring(g, c);
  if (report.valid) {
    std::cout << "valid coloring with " << report.colors_used << " colors\n";
    return 0;
  }
  std::cout << "invalid coloring: " << report.violating_edges.size()
            << " monochromatic edges\n";
  for (const Edge& e : report.violating_edges) {
    std::cout << "e " << e.u + 1 << ' ' << e.v + 1 << " color " << c.colors[e.u] << "\n";
  }
  return 1;
}

int cmd_export(const std::string& file, const std::string& model, const std::string& clique,
               std::uint64_t seed, double budget, bool no_fixings, const std::string& out) {
  const Graph g = read_dimacs_file(file);
  const PreprocessedInstance inst = preprocess_pipeline(
      g, {clique == "c" ? CliqueMode::kSize : CliqueMode::kExtended, seed, budget});
  MilpModel m = build_model(*parse_formulation(model), inst);
  if (!no_fixings) m = apply_clique_fixings(std::move(m), inst);
  Output o(out);
  write_lp(o.stream(), m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph coloring through binary programming models"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string solve_file, coloring_out;
  auto* solve = app.add_subcommand("solve", "Solve one DIMACS instance");
  solve->add_option("file", solve_file, "DIMACS .col file")->required();
  solve->add_option("--coloring", coloring_out, "Write the best coloring here");
  add_common(solve, solve_flags);

  std::string gen_kind, gen_out;
  std::uint64_t gen_seed = 0;
  CustomSet custom;
  auto* gen = app.add_subcommand("generate", "Generate a random benchmark set");
  gen->add_option("kind", gen_kind, "set100, sparse240 or custom")
      ->required()
      ->check(CLI::IsMember({"set100", "sparse240", "custom"}));
  gen->add_option("--seed", gen_seed, "Base seed");
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--n", custom.n, "Vertices (custom)");
  gen->add_option("--p", custom.p, "Edge probability (custom)");
  gen->add_option("--count", custom.count, "Instances (custom)");

  CommonFlags bench_flags;
  std::string manifest;
  auto* bench = app.add_subcommand("bench", "Run a model comparison over a manifest");
  bench->add_option("manifest", manifest, "manifest.csv from generate")->required();
  bench->add_option("--jobs", bench_flags.jobs, "Instances solved concurrently")
      ->check(CLI::PositiveNumber);
  add_common(bench, bench_flags);

  std::string verify_graph, verify_coloring_file;
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", verify_graph, "DIMACS .col file")->required();
  verify->add_option("coloring", verify_coloring_file, "Coloring file")->required();

  std::string export_file, export_model = "pop", export_clique = "e", export_out;
  std::uint64_t export_seed = 0;
  double export_budget = 60.0;
  bool no_fixings = false;
  auto* exp = app.add_subcommand("export", "Write the model of an instance as LP");
  exp->add_option("file", export_file, "DIMACS .col file")->required();
  exp->add_option("--model", export_model, "Formulation")
      ->check(CLI::IsMember({"ass-s", "ass", "pop", "pop2", "rep"}));
  exp->add_option("--clique", export_clique, "Clique objective")
      ->check(CLI::IsMember({"c", "e"}));
  exp->add_option("--seed", export_seed, "Seed for clique search");
  exp->add_option("--clique-budget", export_budget, "Seconds for the clique search");
  exp->add_flag("--no-fixings", no_fixings, "Omit clique fixings");
  exp->add_option("--out", export_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_file, solve_flags, coloring_out);
    if (*gen) return cmd_generate(gen_kind, gen_seed, gen_out, custom);
    if (*bench) return cmd_bench(manifest, bench_flags);
    if (*verify) return cmd_verify(verify_graph, verify_coloring_file);
    if (*exp) {
      return cmd_export(export_file, export_model, export_clique, export_seed,
                        export_budget, no_fixings, export_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
