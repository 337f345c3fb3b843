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

#ifndef SQU_HARNESS_H_
#define SQU_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squ/corpus.h"
#include "squ/environment.h"
#include "squ/grounding.h"

namespace squ {

struct PolicyPair {
  TeacherPolicy teacher = TeacherPolicy::kRandom;
  StudentPolicy student = StudentPolicy::kFrequency;

  auto operator<=>(const PolicyPair&) const = default;
};

/// "teacher-student", e.g. "property-logic".
std::string label(const PolicyPair& policies);

/// Parses "T1,T2xS1,S2" (also accepts the multiplication sign or ':' as the
/// separator) into the cross product, teacher-major.
std::vector<PolicyPair> parse_policy_grid(std::string_view text);
std::vector<PolicyPair> full_policy_grid();

struct PairConfig {
  std::string left;
  std::string right;
  std::filesystem::path reference;
  std::optional<std::filesystem::path> imported;
};

/**
 * Flat `key = value` manifest. Repeatable keys:
 *
 *     ontology = <name> <triple file>
 *     pair     = <left> <right> <reference class alignment file>
 *     imported = <left> <right> <imported instance alignment file>
 *
 * Relative paths resolve against the manifest's directory.
 */
struct DatasetConfig {
  std::string name = "dataset";
  std::string type_predicate = std::string(kDefaultTypePredicate);
  std::vector<std::pair<std::string, std::filesystem::path>> ontologies;
  std::vector<PairConfig> pairs;
  GroundingKind grounding = GroundingKind::kSimple;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::size_t repetitions = 10;
  std::uint64_t seed = 0;
  TruthScope truth_scope = TruthScope::kStudent;
  std::size_t plot_cycles = 20;
  std::size_t workers = 0;  // 0: hardware concurrency
  std::vector<PolicyPair> policies = full_policy_grid();
};

DatasetConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
DatasetConfig load_config(const std::filesystem::path& path);

struct ClassAlignment {
  std::string left;
  std::string right;

  auto operator<=>(const ClassAlignment&) const = default;
};

/// Reads `classA TAB classB` lines.
std::vector<ClassAlignment> parse_class_alignments(std::string_view text);

struct OntologyPair {
  std::string left;
  std::string right;
  std::vector<ClassAlignment> reference;
  std::vector<NamedAlignment> imported;
};

struct DatasetBundle {
  std::string name;
  std::map<std::string, std::shared_ptr<const AgentOntology>> views;
  std::vector<OntologyPair> pairs;
  GroundingKind grounding = GroundingKind::kSimple;
};

/// Loads every triple file and alignment file of a manifest. Throws Error for
/// unknown ontology names, duplicate pairs or empty views.
DatasetBundle load_bundle(const DatasetConfig& config);

struct PairCensus {
  std::string left;
  std::string right;
  std::size_t common_objects = 0;
  std::size_t reference_alignments = 0;
  std::size_t specs = 0;
};

struct RejectedSpec {
  std::string teacher;
  std::string student;
  ClassAlignment classes;  // teacher class, student class
  std::string reason;
};

struct CraftOptions {
  std::size_t max_cycles = kDefaultMaxCycles;
  TruthScope truth_scope = TruthScope::kStudent;
};

struct CraftResult {
  std::vector<ExperimentSpec> specs;  // policies and seed left at defaults
  std::vector<RejectedSpec> rejected;
  std::vector<PairCensus> census;

  double mean_common_objects() const;
};

/// Grounds every pair and turns each reference class alignment into up to two
/// experiments, one per teaching direction.
CraftResult craft_experiments(const DatasetBundle& bundle, const CraftOptions& options = {});

/// One cycle of one run, flattened; the unit that is written to traces.csv
/// and read back for plotting.
struct TracePoint {
  std::string experiment_id;
  std::string teacher_ontology;
  std::string student_ontology;
  std::string query_property;
  std::string target_property;
  PolicyPair policies;
  std::size_t repetition = 0;
  CycleRecord record;
};

struct AggregateRow {
  PolicyPair policies;
  std::size_t cycle = 0;
  std::size_t experiments = 0;  // experiments with at least one run reaching the cycle
  double precision = 0.0;
  double recall = 0.0;
  double teacher_episodic = 0.0;
  double student_episodic = 0.0;
  double student_working = 0.0;
};

/**
 * Per-policy-pair memory summary. Each run contributes its final counts
 * (working memory: mean over its cycles); runs are averaged per experiment
 * first, then across experiments. Percentages are given against the initial
 * pool size and against the number of examples sent.
 */
struct MemorySummary {
  PolicyPair policies;
  std::size_t experiments = 0;
  double student_working = 0.0;
  double student_episodic = 0.0;
  double teacher_episodic = 0.0;
  double initial_pool = 0.0;
  double examples_sent = 0.0;
  double teacher_episodic_pct_pool = 0.0;
  double student_episodic_pct_pool = 0.0;
  double teacher_episodic_pct_sent = 0.0;
  double student_episodic_pct_sent = 0.0;
};

struct RunSummary {
  std::string experiment_id;
  PolicyPair policies;
  std::size_t repetition = 0;
  std::size_t initial_pool = 0;
  Termination termination = Termination::kMaxCycles;
};

struct SuiteOptions {
  std::vector<PolicyPair> policies = full_policy_grid();
  std::size_t repetitions = 10;
  std::uint64_t base_seed = 0;
  std::size_t workers = 0;
};

struct SuiteResult {
  std::string dataset;
  std::vector<TracePoint> points;  // spec-major, then policy pair, repetition, cycle
  std::vector<RunSummary> runs;
  std::vector<AggregateRow> aggregates;
  std::vector<MemorySummary> memory;
};

/// Runs every spec under every policy pair `repetitions` times with seeds
/// base_seed + repetition. Output is independent of the worker count.
SuiteResult run_suite(const std::vector<ExperimentSpec>& specs, const SuiteOptions& options,
                      std::string dataset = "dataset");

/// Mean over repetitions per experiment, then over experiments, for every
/// policy pair and every cycle up to the largest cycle observed.
std::vector<AggregateRow> aggregate(const std::vector<TracePoint>& points);

std::vector<MemorySummary> summarize_memory(const std::vector<TracePoint>& points, const std::vector<RunSummary>& runs);

}  // namespace squ

#endif  // SQU_HARNESS_H_
