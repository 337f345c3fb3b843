/**
 * Copyright 2026, The squ Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not
 * use this file except in compliance with the License. You may obtain a copy of
 * the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
 * License for the specific language governing permissions and limitations under
 * the License.
 */

// Command line front end: craft experiments from a dataset manifest, run the
// policy grid, and plot traces.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "squ/harness.h"
#include "squ/report.h"

namespace {

struct Overrides {
  std::optional<std::string> grounding;
  std::optional<std::string> truth_scope;
  std::optional<std::string> policies;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> repetitions;
  std::optional<std::size_t> max_cycles;
  std::optional<std::size_t> workers;
};

void apply(const Overrides& o, squ::DatasetConfig& config) {
  if (o.grounding) {
    if (*o.grounding == "simple") {
      config.grounding = squ::GroundingKind::kSimple;
    } else if (*o.grounding == "extended") {
      config.grounding = squ::GroundingKind::kExtended;
    } else {
      throw squ::Error(fmt::format("--grounding must be simple or extended, got '{}'", *o.grounding));
    }
  }
  if (o.truth_scope) config.truth_scope = squ::parse_truth_scope(*o.truth_scope);
  if (o.policies) config.policies = squ::parse_policy_grid(*o.policies);
  if (o.seed) config.seed = *o.seed;
  if (o.repetitions) config.repetitions = *o.repetitions;
  if (o.max_cycles) config.max_cycles = *o.max_cycles;
  if (o.workers) config.workers = *o.workers;
}

squ::CraftResult craft(const squ::DatasetConfig& config) {
  const squ::DatasetBundle bundle = squ::load_bundle(config);
  return squ::craft_experiments(bundle, {config.max_cycles, config.truth_scope});
}

void print_census(const squ::DatasetConfig& config, const squ::CraftResult& crafted, bool list_rejected) {
  fmt::print("dataset {} ({} grounding)\n", config.name,
             config.grounding == squ::GroundingKind::kSimple ? "simple" : "extended");
  fmt::print("{:<24} {:>8} {:>10} {:>6}\n", "pair", "common", "alignments", "specs");
  for (const squ::PairCensus& c : crafted.census) {
    fmt::print("{:<24} {:>8} {:>10} {:>6}\n", c.left + "/" + c.right, c.common_objects, c.reference_alignments,
               c.specs);
  }
  fmt::print("mean common objects per pair: {:.1f}\n", crafted.mean_common_objects());
  fmt::print("experiments: {}  rejected directions: {}\n", crafted.specs.size(), crafted.rejected.size());
  if (!list_rejected) return;
  for (const squ::RejectedSpec& r : crafted.rejected) {
    fmt::print(stderr, "  skipped {}->{} {} / {}: {}\n", r.teacher, r.student, r.classes.left, r.classes.right,
               r.reason);
  }
}

int run(const std::string& config_path, const std::string& out_dir, const Overrides& overrides) {
  squ::DatasetConfig config = squ::load_config(config_path);
  apply(overrides, config);
  const squ::CraftResult crafted = craft(config);
  print_census(config, crafted, false);

  squ::SuiteOptions options{config.policies, config.repetitions, config.seed, config.workers};
  const squ::SuiteResult result = squ::run_suite(crafted.specs, options, config.name);
  for (const auto& path : squ::emit_outputs(result, out_dir, config.plot_cycles)) {
    fmt::print("wrote {}\n", path.string());
  }

  fmt::print("\n{:<20} {:>6} {:>10} {:>8}\n", "policies", "cycle", "precision", "recall");
  for (const squ::AggregateRow& row : result.aggregates) {
    if (row.cycle == 1 || row.cycle == 5 || row.cycle == 10 || row.cycle == config.max_cycles) {
      fmt::print("{:<20} {:>6} {:>10.3f} {:>8.3f}\n", squ::label(row.policies), row.cycle, row.precision,
                 row.recall);
    }
  }
  fmt::print("\n{:<20} {:>8} {:>9} {:>12} {:>12}\n", "policies", "working", "episodic", "teacher%pool",
             "student%pool");
  for (const squ::MemorySummary& m : result.memory) {
    fmt::print("{:<20} {:>8.2f} {:>9.2f} {:>12.2f} {:>12.2f}\n", squ::label(m.policies), m.student_working,
               m.student_episodic, m.teacher_episodic_pct_pool, m.student_episodic_pct_pool);
  }
  return 0;
}

int plot(const std::string& traces_path, std::optional<std::string> out_dir, std::optional<std::string> title,
         std::size_t cycles) {
  std::ifstream in(traces_path, std::ios::binary);
  if (!in) throw squ::Error(fmt::format("cannot open '{}'", traces_path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto points = squ::parse_traces_csv(buffer.str());
  if (points.empty()) throw squ::Error(fmt::format("'{}' has no trace rows", traces_path));

  const std::filesystem::path source(traces_path);
  const std::filesystem::path dir = out_dir ? std::filesystem::path(*out_dir) : source.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  const std::string name = title.value_or(source.stem().string());
  const std::filesystem::path svg = dir / fmt::format("{}_performance.svg", name);
  squ::write_text_file(svg, squ::performance_svg(squ::aggregate(points), name, cycles));
  fmt::print("wrote {}\n", svg.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shared query understanding through grounded examples"};
  app.require_subcommand(1);

  Overrides overrides;
  std::string config_path;
  std::string out_dir = "out";

  auto* run_cmd = app.add_subcommand("run", "craft experiments and run the policy grid");
  run_cmd->add_option("--config", config_path, "dataset manifest")->required();
  run_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  run_cmd->add_option("--seed", overrides.seed, "base seed");
  run_cmd->add_option("--policies", overrides.policies, "teacher and student policies, e.g. random,property x frequency,logic");
  run_cmd->add_option("--grounding", overrides.grounding, "simple or extended");
  run_cmd->add_option("--truth-scope", overrides.truth_scope, "student or union");
  run_cmd->add_option("--repetitions", overrides.repetitions, "repetitions per experiment");
  run_cmd->add_option("--max-cycles", overrides.max_cycles, "cycles per episode");
  run_cmd->add_option("--workers", overrides.workers, "worker threads (0: all cores)");

  auto* craft_cmd = app.add_subcommand("craft", "print the experiment census of a dataset");
  craft_cmd->add_option("--config", config_path, "dataset manifest")->required();
  craft_cmd->add_option("--grounding", overrides.grounding, "simple or extended");

  std::string traces_path;
  std::optional<std::string> plot_out;
  std::optional<std::string> plot_title;
  std::size_t plot_cycles = squ::kDefaultPlotCycles;
  auto* plot_cmd = app.add_subcommand("plot", "plot mean precision and recall from traces.csv");
  plot_cmd->add_option("--traces", traces_path, "traces.csv written by run")->required();
  plot_cmd->add_option("--out", plot_out, "output directory (default: next to the traces)");
  plot_cmd->add_option("--title", plot_title, "plot title and file prefix");
  plot_cmd->add_option("--cycles", plot_cycles, "last cycle shown")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(config_path, out_dir, overrides);
    if (*craft_cmd) {
      squ::DatasetConfig config = squ::load_config(config_path);
      apply(overrides, config);
      print_census(config, craft(config), true);
      return 0;
    }
    if (*plot_cmd) return plot(traces_path, plot_out, plot_title, plot_cycles);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
