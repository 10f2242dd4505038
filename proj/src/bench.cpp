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

#include "chromatic/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chromatic/dimacs.hpp"
#include "chromatic/formulations.hpp"
#include "chromatic/generators.hpp"
#include "chromatic/rng.hpp"

namespace chromatic {

void RunConfig::apply_desk_scale() {
  time_limit = 60.0;
  clique_time_budget = 5.0;
}

void RunConfig::validate() const {
  if (models.empty()) throw std::invalid_argument("no model selected");
  if (!(time_limit > 0.0)) throw std::invalid_argument("time limit must be positive");
  if (!(clique_time_budget > 0.0)) {
    throw std::invalid_argument("clique time budget must be positive");
  }
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

namespace {

BenchmarkRecord blank_record(const std::string& name, int n, int m, Formulation model,
                             const RunConfig& config) {
  BenchmarkRecord r;
  r.instance = name;
  r.num_vertices = n;
  r.num_edges = m;
  r.instance_class = config.instance_class;
  r.model = model;
  r.clique_mode = config.clique_mode;
  r.seed = config.seed;
  return r;
}

// Restores and verifies a coloring of the reduced graph; nullopt if the
// result is not a proper coloring of g.
std::optional<Coloring> lift(const Graph& g, const PreprocessedInstance& inst,
                             const Coloring& reduced) {
  Coloring full = restore_coloring(inst.reduced, reduced);
  if (!verify_coloring(g, full).valid) return std::nullopt;
  return full;
}

void solve_model(const Graph& g, const PreprocessedInstance& inst, const RunConfig& config,
                 BenchmarkRecord& r) {
  const MilpModel m = apply_clique_fixings(build_model(r.model, inst), inst);
  const SolveResult s = solve(m, config.adapter, {config.time_limit, config.seed});
  r.time = s.wall_time;
  r.status = s.status;
  r.message = s.message;
  if (s.status == SolveStatus::kError) return;
  if (s.status == SolveStatus::kInfeasible || s.status == SolveStatus::kUnbounded) {
    r.status = SolveStatus::kError;
    r.message = std::string("model reported ") + std::string(status_name(s.status)) +
                " although a greedy coloring exists";
    return;
  }
  long long lb = inst.lower_bound;
  long long ub = inst.upper_bound;
  if (s.lower_bound) lb = std::max(lb, *s.lower_bound);
  if (s.upper_bound) ub = std::min(ub, *s.upper_bound);
  if (!s.values.empty()) {
    auto c = lift(g, inst, extract_coloring(m, s.values));
    if (!c) {
      r.status = SolveStatus::kError;
      r.message = "solver incumbent does not decode to a proper coloring";
      return;
    }
    ub = std::min<long long>(ub, c->num_colors());
    r.coloring = std::move(c);
  } else {
    r.coloring = lift(g, inst, inst.greedy_coloring);
  }
  if (lb > ub) {
    r.status = SolveStatus::kError;
    r.message = "lower bound exceeds upper bound";
    return;
  }
  if (lb == ub) r.status = SolveStatus::kOptimal;
  r.lower_bound = lb;
  r.upper_bound = ub;
}

}  // namespace

std::vector<BenchmarkRecord> solve_instance(const Graph& g, const std::string& name,
                                            const RunConfig& config,
                                            PreprocessedInstance* prep) {
  config.validate();
  std::vector<BenchmarkRecord> records;
  for (Formulation f : config.models) {
    records.push_back(blank_record(name, g.num_vertices(), g.num_edges(), f, config));
  }
  if (g.num_vertices() == 0) {
    for (auto& r : records) {
      r.status = SolveStatus::kOptimal;
      r.lower_bound = r.upper_bound = 0;
      r.coloring = Coloring{};
    }
    return records;
  }

  PreprocessedInstance inst;
  try {
    inst = preprocess_pipeline(
        g, {config.clique_mode, config.seed, config.clique_time_budget});
  } catch (const std::exception& e) {
    for (auto& r : records) r.message = e.what();
    return records;
  }
  if (prep) *prep = inst;

  for (auto& r : records) {
    r.prep_time = inst.seconds;
    try {
      if (inst.solved_in_preprocessing) {
        r.time = inst.seconds;
        r.coloring = lift(g, inst, inst.greedy_coloring);
        if (!r.coloring) throw std::logic_error("greedy coloring failed verification");
        r.status = SolveStatus::kOptimal;
        r.lower_bound = r.upper_bound = inst.upper_bound;
      } else {
        solve_model(g, inst, config, r);
      }
    } catch (const std::exception& e) {
      r.status = SolveStatus::kError;
      r.message = e.what();
      r.lower_bound.reset();
      r.upper_bound.reset();
      r.coloring.reset();
    }
  }
  return records;
}

namespace {

std::string fixed2(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << x;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_p(double p) {
  std::ostringstream s;
  s << p;
  return s.str();
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "instance,V,E,class,model,clique,lb,ub,time,prep_time,status,seed\n";
}

void write_csv_row(std::ostream& out, const BenchmarkRecord& r) {
  const auto bound = [](const std::optional<long long>& b) {
    return b ? std::to_string(*b) : std::string();
  };
  out << csv_field(r.instance) << ',' << r.num_vertices << ',' << r.num_edges << ','
      << csv_field(r.instance_class) << ',' << formulation_name(r.model) << ','
      << (r.clique_mode == CliqueMode::kSize ? 'c' : 'e') << ',' << bound(r.lower_bound)
      << ',' << bound(r.upper_bound) << ',' << fixed2(r.time) << ','
      << fixed2(r.prep_time) << ',' << status_name(r.status) << ',' << r.seed << '\n';
}

std::vector<ManifestEntry> plan_instances(GenerateKind kind, std::uint64_t seed,
                                          const CustomSet& custom) {
  std::vector<std::pair<int, double>> groups;
  int per_group = 20;
  switch (kind) {
    case GenerateKind::kSet100:
      for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) groups.emplace_back(70, p);
      break;
    case GenerateKind::kSparse240:
      for (int n : {80, 90, 100}) {
        for (double p : {0.1, 0.15, 0.2, 0.25}) groups.emplace_back(n, p);
      }
      break;
    case GenerateKind::kCustom:
      if (custom.n < 1 || custom.count < 1 || !(custom.p >= 0.0 && custom.p <= 1.0)) {
        throw std::invalid_argument("custom set needs n >= 1, 0 <= p <= 1, count >= 1");
      }
      groups.emplace_back(custom.n, custom.p);
      per_group = custom.count;
      break;
  }
  std::vector<ManifestEntry> entries;
  std::uint64_t index = 0;
  for (const auto& [n, p] : groups) {
    for (int k = 1; k <= per_group; ++k, ++index) {
      std::ostringstream name;
      name << 'n' << n << "_p" << format_p(p) << '_' << std::setw(2) << std::setfill('0')
           << k;
      ManifestEntry e;
      e.name = name.str();
      e.n = n;
      e.p = p;
      e.seed = Rng::derive(seed, index);
      e.path = e.name + ".col";
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

std::vector<ManifestEntry> generate_instances(GenerateKind kind, std::uint64_t seed,
                                              const std::filesystem::path& outdir,
                                              const CustomSet& custom) {
  auto entries = plan_instances(kind, seed, custom);
  std::filesystem::create_directories(outdir);
  for (const auto& e : entries) {
    const Graph g = gnp_random(e.n, e.p, e.seed);
    const std::vector<std::string> comments = {
        e.name, "seed=" + std::to_string(e.seed) + " p=" + format_p(e.p)};
    write_dimacs_file(outdir / e.path, g, comments);
  }
  std::ofstream out(outdir / "manifest.csv");
  write_manifest(out, entries);
  if (!out) throw std::runtime_error("cannot write " + (outdir / "manifest.csv").string());
  return entries;
}

void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries) {
  out << "name,n,p,seed,path\n";
  for (const auto& e : entries) {
    out << e.name << ',' << e.n << ',' << format_p(e.p) << ',' << e.seed << ',' << e.path
        << '\n';
  }
}

std::vector<ManifestEntry> read_manifest(std::istream& in) {
  std::vector<ManifestEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("name,", 0) == 0) continue;
    std::vector<std::string> fields;
    std::istringstream s(line);
    for (std::string f; std::getline(s, f, ',');) fields.push_back(f);
    if (fields.size() != 5) throw ParseError(lineno, "expected 5 manifest fields");
    ManifestEntry e;
    e.name = fields[0];
    e.path = fields[4];
    const auto number = [&](const std::string& f, auto& out) {
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ParseError(lineno, "bad number '" + f + "'");
      }
    };
    number(fields[1], e.n);
    number(fields[2], e.p);
    number(fields[3], e.seed);
    if (e.name.empty() || e.path.empty()) throw ParseError(lineno, "empty name or path");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ManifestEntry> read_manifest_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_manifest(in);
}

BenchResult run_bench(const std::vector<ManifestEntry>& manifest,
                      const std::filesystem::path& base_dir, const RunConfig& config) {
  config.validate();
  std::vector<std::vector<BenchmarkRecord>> slots(manifest.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < manifest.size(); i = next++) {
      const ManifestEntry& e = manifest[i];
      try {
        const Graph g = read_dimacs_file(base_dir / e.path);
        slots[i] = solve_instance(g, e.name, config);
      } catch (const std::exception& ex) {
        for (Formulation f : config.models) {
          BenchmarkRecord r = blank_record(e.name, 0, 0, f, config);
          r.message = ex.what();
          slots[i].push_back(std::move(r));
        }
      }
    }
  };
  const int threads =
      static_cast<int>(std::min<std::size_t>(config.jobs, std::max<std::size_t>(1, manifest.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BenchResult result;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    for (auto& r : slots[i]) {
      result.records.push_back(std::move(r));
      result.densities.push_back(manifest[i].p);
    }
  }
  result.summary = summarize(result.records, result.densities);
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<BenchmarkRecord>& records,
                                  const std::vector<double>& densities) {
  std::vector<Formulation> model_order;
  for (const auto& r : records) {
    if (std::find(model_order.begin(), model_order.end(), r.model) == model_order.end()) {
      model_order.push_back(r.model);
    }
  }
  const auto rank = [&](Formulation f) {
    return std::find(model_order.begin(), model_order.end(), f) - model_order.begin();
  };
  std::map<std::pair<double, long>, SummaryRow> groups;
  std::map<std::pair<double, long>, double> time_sum;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const auto key = std::make_pair(densities.at(i), static_cast<long>(rank(r.model)));
    SummaryRow& row = groups[key];
    row.p = densities[i];
    row.model = r.model;
    ++row.instances;
    if (r.solved()) {
      ++row.solved;
      time_sum[key] += r.time;
    } else {
      ++row.unsolved;
    }
  }
  std::vector<SummaryRow> rows;
  for (auto& [key, row] : groups) {
    if (row.solved > 0) row.mean_time = time_sum[key] / row.solved;
    rows.push_back(row);
  }
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "p,model,instances,solved,unsolved,mean_time\n";
  for (const auto& r : rows) {
    out << format_p(r.p) << ',' << formulation_name(r.model) << ',' << r.instances << ','
        << r.solved << ',' << r.unsolved << ','
        << (r.mean_time ? fixed2(*r.mean_time) : std::string()) << '\n';
  }
}

}  // namespace chromatic
