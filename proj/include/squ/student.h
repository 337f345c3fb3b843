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

#ifndef SQU_STUDENT_H_
#define SQU_STUDENT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "squ/corpus.h"
#include "squ/interpretation.h"

namespace squ {

enum class StudentPolicy { kFrequency, kLogic };

std::string_view to_string(StudentPolicy policy);
StudentPolicy parse_student_policy(std::string_view name);

/// Estimated query representation: property score pairs in the student's view.
using QueryRepresentation = std::map<PropertyId, std::int64_t>;

struct MemoryMetrics {
  std::size_t episodic = 0;
  std::size_t working = 0;
};

struct RankedObject {
  ObjectId object;
  std::int64_t score;

  bool operator==(const RankedObject&) const = default;
};

/**
 * Learner state. The frequency policy keeps one counter per property seen in
 * a positive or common set; the logic policy memorizes unique positive sets
 * and reads off the properties implied by the query pseudo-attribute.
 */
class Student {
 public:
  explicit Student(StudentPolicy policy) : policy_(policy) {}

  StudentPolicy policy() const { return policy_; }

  /// Unclear examples (empty positive set) leave the state untouched.
  Feedback observe(const Interpretation& interp);

  QueryRepresentation representation() const;
  MemoryMetrics memory() const;

  const std::map<PropertyId, std::int64_t>& frequency_scores() const { return scores_; }
  const std::set<PropertySet>& positive_sets() const { return positive_sets_; }

 private:
  StudentPolicy policy_;
  std::map<PropertyId, std::int64_t> scores_;
  std::set<PropertySet> positive_sets_;
};

/// Properties implied by a pseudo-attribute that every memorized example
/// holds: the intersection of the memorized sets. Empty memory implies
/// nothing.
PropertySet implied_by_query(const std::set<PropertySet>& positive_sets);

/// Objects of the view with a positive summed score, best first; equal
/// scores keep identifier order.
std::vector<RankedObject> answer(const QueryRepresentation& rep, const AgentOntology& view);

}  // namespace squ

#endif  // SQU_STUDENT_H_
