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

#ifndef SQU_TYPES_H_
#define SQU_TYPES_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace squ {

/// Index of an object inside one AgentOntology. Ids follow the lexicographic
/// order of the object identifiers, so comparing ids compares identifiers.
enum class ObjectId : std::uint32_t {};

/// Index of a property (class) inside one AgentOntology, lexicographic like
/// ObjectId.
enum class PropertyId : std::uint32_t {};

/// Index into a CommonObjects table, i.e. a grounded object both agents know.
enum class CommonId : std::uint32_t {};

constexpr std::uint32_t index(ObjectId id) { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t index(PropertyId id) { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t index(CommonId id) { return static_cast<std::uint32_t>(id); }

/// Sorted, duplicate-free list of properties of a single view.
using PropertySet = std::vector<PropertyId>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace squ

#endif  // SQU_TYPES_H_
