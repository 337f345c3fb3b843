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

#include "squ/teacher.h"

#include <algorithm>

#include <fmt/core.h>

namespace squ {

std::string_view to_string(TeacherPolicy policy) {
  return policy == TeacherPolicy::kRandom ? "random" : "property";
}

TeacherPolicy parse_teacher_policy(std::string_view name) {
  if (name == "random") return TeacherPolicy::kRandom;
  if (name == "property" || name == "property-based" || name == "property_based") return TeacherPolicy::kPropertyBased;
  throw Error(fmt::format("unknown teacher policy '{}' (expected random or property)", name));
}

ExamplePool::ExamplePool(PropertyId query_property, std::vector<GroundedExample> candidates)
    : query_property_(query_property), candidates_(std::move(candidates)) {
  std::sort(candidates_.begin(), candidates_.end());
  candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
  initial_size_ = candidates_.size();
}

bool ExamplePool::is_candidate(const GroundedExample& example) const {
  return std::binary_search(candidates_.begin(), candidates_.end(), example);
}

void ExamplePool::receive_feedback(const GroundedExample& example, Feedback feedback) {
  auto it = std::lower_bound(candidates_.begin(), candidates_.end(), example);
  const bool present = it != candidates_.end() && *it == example;
  if (!present && !removed_.contains(example)) {
    throw Error(fmt::format("feedback for example ({}, {}) that is not in the pool", index(example.relevant),
                            index(example.irrelevant)));
  }
  if (feedback == Feedback::kUnclear && present) {
    candidates_.erase(it);
    removed_.insert(example);
  }
}

ExamplePool build_pool(const AgentOntology& teacher_view, const CommonObjects& commons, PropertyId query_property) {
  std::vector<CommonId> owners;
  std::vector<CommonId> others;
  for (std::uint32_t k = 0; k < commons.size(); ++k) {
    ObjectId local = commons.teacher[k];
    if (index(local) >= teacher_view.object_count()) {
      throw Error(fmt::format("grounded object is unknown to view '{}'", teacher_view.name()));
    }
    (teacher_view.has_property(local, query_property) ? owners : others).push_back(CommonId{k});
  }
  if (owners.empty() || others.empty()) {
    throw UntrainableQuery(fmt::format("untrainable query '{}': {} common objects own it, {} do not",
                                       teacher_view.property_name(query_property), owners.size(), others.size()));
  }
  std::vector<GroundedExample> candidates;
  candidates.reserve(owners.size() * others.size());
  for (CommonId r : owners) {
    for (CommonId i : others) candidates.push_back({r, i});
  }
  return ExamplePool(query_property, std::move(candidates));
}

ExampleScore score_example(const AgentOntology& teacher_view, const std::map<PropertyId, PropertyWeight>& weights,
                           const CommonObjects& commons, const GroundedExample& example) {
  const Interpretation interp = interpret(teacher_view, commons, Role::kTeacher, example);
  auto owners = [&](PropertyId p) -> std::int64_t {
    auto it = weights.find(p);
    return it == weights.end() ? 0 : static_cast<std::int64_t>(it->second.owners);
  };
  ExampleScore score{example, 0, static_cast<std::int64_t>(teacher_view.object_count())};
  for (PropertyId p : interp.negative) score.numerator += owners(p);
  for (PropertyId p : interp.common) score.numerator += owners(p);
  for (PropertyId p : interp.positive) score.numerator -= owners(p);
  return score;
}

std::optional<GroundedExample> next_example(const ExamplePool& pool, TeacherPolicy policy,
                                            const AgentOntology& teacher_view,
                                            const std::map<PropertyId, PropertyWeight>& weights,
                                            const CommonObjects& commons, Rng& rng) {
  const auto& candidates = pool.candidates();
  if (candidates.empty()) return std::nullopt;
  if (policy == TeacherPolicy::kRandom) return candidates[uniform_index(rng, candidates.size())];

  std::vector<GroundedExample> best;
  std::int64_t best_score = 0;
  for (const GroundedExample& ex : candidates) {
    std::int64_t s = score_example(teacher_view, weights, commons, ex).numerator;
    if (best.empty() || s > best_score) {
      best.assign(1, ex);
      best_score = s;
    } else if (s == best_score) {
      best.push_back(ex);
    }
  }
  return best[uniform_index(rng, best.size())];
}

Teacher::Teacher(TeacherPolicy policy, const AgentOntology& view, const CommonObjects& commons,
                 PropertyId query_property)
    : policy_(policy), pool_(build_pool(view, commons, query_property)) {
  if (policy_ == TeacherPolicy::kPropertyBased) {
    const auto weights = property_weights(view);
    ranking_.reserve(pool_.candidates().size());
    for (const GroundedExample& ex : pool_.candidates()) ranking_.push_back(score_example(view, weights, commons, ex));
    std::stable_sort(ranking_.begin(), ranking_.end(),
                     [](const ExampleScore& x, const ExampleScore& y) { return x.numerator > y.numerator; });
  }
}

std::optional<GroundedExample> Teacher::next_example(Rng& rng) const {
  if (pool_.empty()) return std::nullopt;
  if (policy_ == TeacherPolicy::kRandom) return pool_.candidates()[uniform_index(rng, pool_.candidates().size())];

  std::size_t ties = 1;
  while (ties < ranking_.size() && ranking_[ties].numerator == ranking_.front().numerator) ++ties;
  return ranking_[uniform_index(rng, ties)].example;
}

void Teacher::receive_feedback(const GroundedExample& example, Feedback feedback) {
  pool_.receive_feedback(example, feedback);
  if (feedback == Feedback::kUnclear) {
    std::erase_if(ranking_, [&](const ExampleScore& s) { return s.example == example; });
  }
}

}  // namespace squ
