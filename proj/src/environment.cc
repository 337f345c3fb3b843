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

#include "squ/environment.h"

#include <algorithm>
#include <iterator>

#include <fmt/core.h>

#include "squ/random.h"

namespace squ {

std::string_view to_string(TruthScope scope) { return scope == TruthScope::kStudent ? "student" : "union"; }

TruthScope parse_truth_scope(std::string_view name) {
  if (name == "student") return TruthScope::kStudent;
  if (name == "union") return TruthScope::kUnion;
  throw Error(fmt::format("unknown truth scope '{}' (expected student or union)", name));
}

std::string_view to_string(Termination termination) {
  return termination == Termination::kMaxCycles ? "max_cycles" : "pool_exhausted";
}

GroundTruth ground_truth(const ExperimentSpec& spec) {
  const AgentOntology& student = *spec.student_view;
  GroundTruth truth;
  truth.student_objects = student.extension(spec.target_property);

  if (spec.truth_scope == TruthScope::kUnion) {
    const AgentOntology& teacher = *spec.teacher_view;
    const CommonObjects& commons = *spec.commons;
    std::vector<bool> grounded(teacher.object_count(), false);
    for (std::size_t k = 0; k < commons.size(); ++k) {
      grounded[index(commons.teacher[k])] = true;
      if (teacher.has_property(commons.teacher[k], spec.query_property)) {
        truth.student_objects.push_back(commons.student[k]);
      }
    }
    for (ObjectId o : teacher.extension(spec.query_property)) {
      if (!grounded[index(o)]) ++truth.teacher_only;
    }
    std::sort(truth.student_objects.begin(), truth.student_objects.end());
    truth.student_objects.erase(std::unique(truth.student_objects.begin(), truth.student_objects.end()),
                                truth.student_objects.end());
  }
  if (truth.size() == 0) {
    throw Error(fmt::format("experiment '{}': target class '{}' has no instances", spec.id,
                            student.property_name(spec.target_property)));
  }
  return truth;
}

namespace {

Evaluation ratio(std::size_t hits, std::size_t answered, std::size_t relevant) {
  Evaluation e;
  e.precision = answered == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(answered);
  e.recall = relevant == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(relevant);
  return e;
}

}  // namespace

Evaluation evaluate(const std::vector<ObjectId>& answers, const GroundTruth& truth) {
  std::vector<ObjectId> hits;
  std::set_intersection(answers.begin(), answers.end(), truth.student_objects.begin(), truth.student_objects.end(),
                        std::back_inserter(hits));
  return ratio(hits.size(), answers.size(), truth.size());
}

Evaluation evaluate(const std::set<std::string>& answers, const std::set<std::string>& truth) {
  std::size_t hits = 0;
  for (const std::string& a : answers) hits += truth.contains(a) ? 1 : 0;
  return ratio(hits, answers.size(), truth.size());
}

ExperimentTrace run_episode(const ExperimentSpec& spec, std::size_t repetition, const EpisodeHooks& hooks) {
  if (spec.max_cycles == 0) throw Error(fmt::format("experiment '{}': max_cycles must be positive", spec.id));
  const AgentOntology& student_view = *spec.student_view;
  const CommonObjects& commons = *spec.commons;
  const GroundTruth truth = ground_truth(spec);

  Teacher teacher(spec.teacher_policy, *spec.teacher_view, commons, spec.query_property);
  Student student(spec.student_policy);
  Rng rng(spec.seed);

  ExperimentTrace trace;
  trace.spec_id = spec.id;
  trace.repetition = repetition;
  trace.initial_pool = teacher.pool().initial_size();

  for (std::size_t cycle = 1; cycle <= spec.max_cycles; ++cycle) {
    const auto example = teacher.next_example(rng);
    if (!example) {
      trace.termination = Termination::kPoolExhausted;
      return trace;
    }

    // 1. grounded example, interpreted by the student in its own namespace
    const Feedback feedback = student.observe(interpret(student_view, commons, Role::kStudent, *example));
    teacher.receive_feedback(*example, feedback);

    // 2. action
    const std::vector<RankedObject> ranked = answer(student.representation(), student_view);
    if (hooks.on_answer) hooks.on_answer(cycle, ranked);

    // 3. understanding evaluation, reported to the teacher side only
    std::vector<ObjectId> answered;
    answered.reserve(ranked.size());
    for (const RankedObject& r : ranked) answered.push_back(r.object);
    std::sort(answered.begin(), answered.end());
    Evaluation eval = evaluate(answered, truth);
    if (hooks.evaluation_filter) eval = hooks.evaluation_filter(cycle, eval);

    const MemoryMetrics memory = student.memory();
    trace.records.push_back({cycle, eval.precision, eval.recall, cycle, teacher.episodic_memory(), memory.episodic,
                             memory.working, feedback});
  }
  trace.termination = Termination::kMaxCycles;
  return trace;
}

}  // namespace squ
