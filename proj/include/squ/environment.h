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

#ifndef SQU_ENVIRONMENT_H_
#define SQU_ENVIRONMENT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "squ/corpus.h"
#include "squ/grounding.h"
#include "squ/student.h"
#include "squ/teacher.h"

namespace squ {

/// Which objects count as the answer set: the student's own instances of the
/// target class, or those plus everything the teacher knows of the query.
enum class TruthScope { kStudent, kUnion };

std::string_view to_string(TruthScope scope);
TruthScope parse_truth_scope(std::string_view name);

inline constexpr std::size_t kDefaultMaxCycles = 50;

struct ExperimentSpec {
  std::string id;
  std::shared_ptr<const AgentOntology> teacher_view;
  std::shared_ptr<const AgentOntology> student_view;
  std::shared_ptr<const CommonObjects> commons;
  PropertyId query_property{};   // teacher side
  PropertyId target_property{};  // student side
  TeacherPolicy teacher_policy = TeacherPolicy::kRandom;
  StudentPolicy student_policy = StudentPolicy::kFrequency;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::uint64_t seed = 0;
  TruthScope truth_scope = TruthScope::kStudent;
};

/// Answer set of a query. Student-side objects are listed; teacher-only
/// objects (union scope) can never be answered and are only counted.
struct GroundTruth {
  std::vector<ObjectId> student_objects;  // sorted
  std::size_t teacher_only = 0;

  std::size_t size() const { return student_objects.size() + teacher_only; }
};

/// Throws Error when the truth set is empty.
GroundTruth ground_truth(const ExperimentSpec& spec);

struct Evaluation {
  double precision = 0.0;
  double recall = 0.0;

  bool operator==(const Evaluation&) const = default;
};

/// Precision is 0 for an empty answer. `answers` must be sorted.
Evaluation evaluate(const std::vector<ObjectId>& answers, const GroundTruth& truth);
Evaluation evaluate(const std::set<std::string>& answers, const std::set<std::string>& truth);

struct CycleRecord {
  std::size_t cycle = 0;
  double precision = 0.0;
  double recall = 0.0;
  std::size_t examples_sent = 0;
  std::size_t teacher_episodic = 0;
  std::size_t student_episodic = 0;
  std::size_t student_working = 0;
  Feedback feedback = Feedback::kClear;
};

enum class Termination { kMaxCycles, kPoolExhausted };

std::string_view to_string(Termination termination);

struct ExperimentTrace {
  std::string spec_id;
  std::size_t repetition = 0;
  std::vector<CycleRecord> records;
  Termination termination = Termination::kMaxCycles;
  std::size_t initial_pool = 0;
};

/// Test seams. `evaluation_filter` rewrites what the environment reports to
/// the teacher side of the record; `on_answer` sees each answer the student
/// gives. Neither can reach the student's state.
struct EpisodeHooks {
  std::function<Evaluation(std::size_t cycle, Evaluation)> evaluation_filter;
  std::function<void(std::size_t cycle, const std::vector<RankedObject>&)> on_answer;
};

/**
 * Runs the teaching cycle until max_cycles or until the pool is exhausted.
 * Each cycle: the teacher draws an example, the student interprets it in its
 * own view and reports clear/unclear, the teacher updates its pool, the
 * student answers and the environment scores the answer.
 */
ExperimentTrace run_episode(const ExperimentSpec& spec, std::size_t repetition = 0, const EpisodeHooks& hooks = {});

}  // namespace squ

#endif  // SQU_ENVIRONMENT_H_
