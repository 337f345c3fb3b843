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

#include "squ/interpretation.h"

#include <algorithm>
#include <iterator>

#include <fmt/core.h>

namespace squ {

Interpretation interpret(const AgentOntology& view, ObjectId relevant, ObjectId irrelevant) {
  if (index(relevant) >= view.object_count() || index(irrelevant) >= view.object_count()) {
    throw Error(fmt::format("example object is unknown to view '{}'", view.name()));
  }
  const PropertySet& rel = view.properties_of(relevant);
  const PropertySet& irr = view.properties_of(irrelevant);

  Interpretation out;
  std::set_difference(rel.begin(), rel.end(), irr.begin(), irr.end(), std::back_inserter(out.positive));
  std::set_difference(irr.begin(), irr.end(), rel.begin(), rel.end(), std::back_inserter(out.negative));
  std::set_intersection(rel.begin(), rel.end(), irr.begin(), irr.end(), std::back_inserter(out.common));
  return out;
}

Interpretation interpret(const AgentOntology& view, const CommonObjects& commons, Role role,
                         const GroundedExample& example) {
  if (index(example.relevant) >= commons.size() || index(example.irrelevant) >= commons.size()) {
    throw Error("example references an object outside the grounding");
  }
  const auto& local = role == Role::kTeacher ? commons.teacher : commons.student;
  return interpret(view, local[index(example.relevant)], local[index(example.irrelevant)]);
}

}  // namespace squ
