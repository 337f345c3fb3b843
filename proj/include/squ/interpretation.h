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

#ifndef SQU_INTERPRETATION_H_
#define SQU_INTERPRETATION_H_

#include "squ/corpus.h"
#include "squ/grounding.h"
#include "squ/types.h"

namespace squ {

/// One relevant and one irrelevant grounded object.
struct GroundedExample {
  CommonId relevant;
  CommonId irrelevant;

  auto operator<=>(const GroundedExample&) const = default;
};

/// Properties only the relevant object owns (positive), only the irrelevant
/// object owns (negative), and both own (common). All three sets are sorted
/// and pairwise disjoint.
struct Interpretation {
  PropertySet positive;
  PropertySet negative;
  PropertySet common;

  bool operator==(const Interpretation&) const = default;
};

enum class Feedback { kClear, kUnclear };

Interpretation interpret(const AgentOntology& view, ObjectId relevant, ObjectId irrelevant);

enum class Role { kTeacher, kStudent };

/// Interprets a grounded example in the local namespace of one side of the
/// grounding. Throws Error for an example outside the grounding or objects
/// unknown to `view`.
Interpretation interpret(const AgentOntology& view, const CommonObjects& commons, Role role,
                         const GroundedExample& example);

/// An example is clear when its positive set is non-empty.
inline bool is_clear(const Interpretation& interp) { return !interp.positive.empty(); }

}  // namespace squ

#endif  // SQU_INTERPRETATION_H_
