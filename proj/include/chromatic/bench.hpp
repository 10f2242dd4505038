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

#ifndef CHROMATIC_BENCH_HPP
#define CHROMATIC_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/milp_model.hpp"
#include "chromatic/preprocess.hpp"
#include "chromatic/solver.hpp"

namespace chromatic {

struct RunConfig {
  std::vector<Formulation> models;
  CliqueMode clique_mode = CliqueMode::kExtended;
  double time_limit = 3600.0;
  double clique_time_budget = 60.0;
  SolverAdapter adapter = null_adapter();
  std::uint64_t seed = 0;
  int jobs = 1;  // concurrent instances in a sweep
  std::string instance_class;  // free-text metadata copied into records

  // 60 s per solve, 5 s clique search.
  void apply_desk_scale();
  // Throws std::invalid_argument when no model is selected or a limit is
  // not positive.
  void validate() const;
};

struct BenchmarkRecord {
  std::string instance;
  int num_vertices = 0;
  int num_edges = 0;
  std::string instance_class;
  Formulation model = Formulation::kPop;
  CliqueMode clique_mode = CliqueMode::kExtended;
  std::optional<long long> lower_bound;
  std::optional<long long> upper_bound;
  double time = 0.0;       // ILP solve only
  double prep_time = 0.0;  // preprocessing
  SolveStatus status = SolveStatus::kError;
  std::uint64_t seed = 0;
  std::string message;
  std::optional<Coloring> coloring;  // verified, on the input graph

  bool solved() const { return status == SolveStatus::kOptimal; }
};

// Preprocesses g once and solves every configured model. A graph settled
// by preprocessing gets lb = ub = H for each model with the preprocessing
// time as its time. Bounds combine the solver's with |Q| and H. Failures
// become kError records; nothing throws for a well-formed config. The
// preprocessing result is copied to *prep when given.
std::vector<BenchmarkRecord> solve_instance(const Graph& g, const std::string& name,
                                            const RunConfig& config,
                                            PreprocessedInstance* prep = nullptr);

// Fixed column order: instance,V,E,class,model,clique,lb,ub,time,prep_time,
// status,seed. Times use two decimals; infinite bounds are empty.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchmarkRecord& r);

enum class GenerateKind { kSet100, kSparse240, kCustom };

struct ManifestEntry {
  std::string name;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string path;  // relative to the manifest's directory
};

struct CustomSet {
  int n = 0;
  double p = 0.0;
  int count = 0;
};

// The instance list of a generated set, without writing anything.
std::vector<ManifestEntry> plan_instances(GenerateKind kind, std::uint64_t seed,
                                          const CustomSet& custom = {});

// Writes every instance as DIMACS plus manifest.csv into outdir.
std::vector<ManifestEntry> generate_instances(GenerateKind kind, std::uint64_t seed,
                                              const std::filesystem::path& outdir,
                                              const CustomSet& custom = {});

void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries);
// Throws ParseError on a malformed row.
std::vector<ManifestEntry> read_manifest(std::istream& in);
std::vector<ManifestEntry> read_manifest_file(const std::filesystem::path& path);

struct SummaryRow {
  double p = 0.0;
  Formulation model = Formulation::kPop;
  int instances = 0;
  int solved = 0;
  int unsolved = 0;
  std::optional<double> mean_time;  // over solved instances
};

struct BenchResult {
  std::vector<BenchmarkRecord> records;  // manifest order, models in config order
  std::vector<double> densities;         // p of each record's instance
  std::vector<SummaryRow> summary;
};

// Solves every manifest entry (paths relative to base_dir) with up to
// config.jobs instances in flight.
BenchResult run_bench(const std::vector<ManifestEntry>& manifest,
                      const std::filesystem::path& base_dir, const RunConfig& config);

std::vector<SummaryRow> summarize(const std::vector<BenchmarkRecord>& records,
                                  const std::vector<double>& densities);

// p,model,instances,solved,unsolved,mean_time
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace chromatic

#endif  // CHROMATIC_BENCH_HPP
