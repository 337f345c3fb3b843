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

#include "squ/student.h"

#include <algorithm>
#include <iterator>

#include <fmt/core.h>

namespace squ {

std::string_view to_string(StudentPolicy policy) {
  return policy == StudentPolicy::kFrequency ? "frequency" : "logic";
}

StudentPolicy parse_student_policy(std::string_view name) {
  if (name == "frequency" || name == "frequency-based" || name == "frequency_based") return StudentPolicy::kFrequency;
  if (name == "logic" || name == "logic-based" || name == "logic_based" || name == "fca") return StudentPolicy::kLogic;
  throw Error(fmt::format("unknown student policy '{}' (expected frequency or logic)", name));
}

Feedback Student::observe(const Interpretation& interp) {
  if (!is_clear(interp)) return Feedback::kUnclear;
  if (policy_ == StudentPolicy::kFrequency) {
    for (PropertyId p : interp.positive) scores_[p] += 1;
    for (PropertyId p : interp.common) scores_[p] -= 1;
  } else {
    positive_sets_.insert(interp.positive);
  }
  return Feedback::kClear;
}

PropertySet implied_by_query(const std::set<PropertySet>& positive_sets) {
  if (positive_sets.empty()) return {};
  PropertySet implied = *positive_sets.begin();
  for (const PropertySet& s : positive_sets) {
    PropertySet next;
    std::set_intersection(implied.begin(), implied.end(), s.begin(), s.end(), std::back_inserter(next));
    implied = std::move(next);
  }
  return implied;
}

QueryRepresentation Student::representation() const {
  if (policy_ == StudentPolicy::kFrequency) return scores_;
  QueryRepresentation rep;
  for (PropertyId p : implied_by_query(positive_sets_)) rep.emplace(p, 1);
  return rep;
}

MemoryMetrics Student::memory() const {
  if (policy_ == StudentPolicy::kFrequency) return {0, scores_.size()};
  return {positive_sets_.size(), 0};
}

std::vector<RankedObject> answer(const QueryRepresentation& rep, const AgentOntology& view) {
  std::vector<std::int64_t> totals(view.object_count(), 0);
  std::vector<ObjectId> touched;
  for (const auto& [property, score] : rep) {
    if (index(property) >= view.property_count()) continue;
    for (ObjectId o : view.extension(property)) {
      if (totals[index(o)] == 0) touched.push_back(o);
      totals[index(o)] += score;
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  std::vector<RankedObject> ranked;
  for (ObjectId o : touched) {
    if (totals[index(o)] > 0) ranked.push_back({o, totals[index(o)]});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedObject& x, const RankedObject& y) { return x.score > y.score; });
  return ranked;
}

}  // namespace squ
