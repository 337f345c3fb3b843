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

#ifndef SQU_TEACHER_H_
#define SQU_TEACHER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "squ/corpus.h"
#include "squ/interpretation.h"
#include "squ/random.h"

namespace squ {

enum class TeacherPolicy { kRandom, kPropertyBased };

std::string_view to_string(TeacherPolicy policy);
TeacherPolicy parse_teacher_policy(std::string_view name);

/// Thrown when no grounded pair separates the query property.
class UntrainableQuery : public Error {
 public:
  using Error::Error;
};

/**
 * Candidate examples whose teacher-side positive set contains the query
 * property. Unclear examples move to `removed()` and are never offered again.
 */
class ExamplePool {
 public:
  ExamplePool(PropertyId query_property, std::vector<GroundedExample> candidates);

  PropertyId query_property() const { return query_property_; }
  /// Sorted by (relevant, irrelevant).
  const std::vector<GroundedExample>& candidates() const { return candidates_; }
  const std::set<GroundedExample>& removed() const { return removed_; }
  std::size_t initial_size() const { return initial_size_; }
  bool empty() const { return candidates_.empty(); }
  bool is_candidate(const GroundedExample& example) const;

  /// Unclear moves the example to removed(); clear leaves the pool as is.
  /// Throws Error for an example that was never in the pool.
  void receive_feedback(const GroundedExample& example, Feedback feedback);

 private:
  PropertyId query_property_;
  std::vector<GroundedExample> candidates_;
  std::set<GroundedExample> removed_;
  std::size_t initial_size_;
};

/// Throws UntrainableQuery when no common object owns the query property or
/// every common object owns it.
ExamplePool build_pool(const AgentOntology& teacher_view, const CommonObjects& commons, PropertyId query_property);

/// Score kept as an exact fraction: numerator is a signed sum of property
/// owner counts, denominator the number of objects in the teacher's view.
struct ExampleScore {
  GroundedExample example;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Weight of the negative and common properties minus weight of the positive
/// ones, under the teacher's interpretation.
ExampleScore score_example(const AgentOntology& teacher_view, const std::map<PropertyId, PropertyWeight>& weights,
                           const CommonObjects& commons, const GroundedExample& example);

/// Picks from the pool: uniform with replacement for kRandom, a uniformly
/// drawn maximum-score candidate for kPropertyBased. Returns nullopt once the
/// pool is exhausted.
std::optional<GroundedExample> next_example(const ExamplePool& pool, TeacherPolicy policy,
                                            const AgentOntology& teacher_view,
                                            const std::map<PropertyId, PropertyWeight>& weights,
                                            const CommonObjects& commons, Rng& rng);

/// Pool plus policy, with scores computed once. Draws the same examples as
/// the free next_example() for the same random state.
class Teacher {
 public:
  Teacher(TeacherPolicy policy, const AgentOntology& view, const CommonObjects& commons, PropertyId query_property);

  TeacherPolicy policy() const { return policy_; }
  const ExamplePool& pool() const { return pool_; }
  std::optional<GroundedExample> next_example(Rng& rng) const;
  void receive_feedback(const GroundedExample& example, Feedback feedback);

  /// Episodic memory: number of memorized unclear examples.
  std::size_t episodic_memory() const { return pool_.removed().size(); }

 private:
  TeacherPolicy policy_;
  ExamplePool pool_;
  std::vector<ExampleScore> ranking_;  // score desc, then example asc
};

}  // namespace squ

#endif  // SQU_TEACHER_H_
