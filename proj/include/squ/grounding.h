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

#ifndef SQU_GROUNDING_H_
#define SQU_GROUNDING_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squ/corpus.h"
#include "squ/types.h"

namespace squ {

enum class AlignmentRule { kUriEqual, kSameLocalName, kRelational, kImported };

std::string_view to_string(AlignmentRule rule);

/// `left` is an object of view A, `right` an object of view B. `round` is the
/// fixpoint iteration that produced the pair (0 for exact URIs and imports).
struct InstanceAlignment {
  ObjectId left;
  ObjectId right;
  AlignmentRule rule = AlignmentRule::kUriEqual;
  std::size_t round = 0;
};

/// Identifier alignment given by name, as read from an imported-alignment file.
struct NamedAlignment {
  std::string left;
  std::string right;
};

enum class GroundingKind { kSimple, kExtended };

struct GroundingMode {
  GroundingKind kind = GroundingKind::kSimple;
  std::vector<NamedAlignment> imported;
};

/// Namespace and local name of an identifier, split after the last '#' or
/// '/'. Identifiers without a separator have an empty namespace.
struct SplitIdentifier {
  std::string_view ns;
  std::string_view local;
};
SplitIdentifier split_identifier(std::string_view id);

/// Pairs with byte-identical identifiers, sorted by left object.
std::vector<InstanceAlignment> align_simple(const AgentOntology& a, const AgentOntology& b);

/**
 * Extended grounding. Imports are applied first, then exact URIs, then the
 * local-name rule and the relational rule are iterated to a fixpoint:
 *
 *  - local name: an unaligned object of A and an unaligned object of B whose
 *    local names match and whose namespaces differ, provided the local name
 *    is unique among the unaligned objects on both sides;
 *  - relational: for an aligned pair (e, e'), a triple (e r x) in A and
 *    (e' r' y) in B with equal relation local names propose x = y; the
 *    inverse direction (x r e) / (y r' e') is handled the same way.
 *
 * A candidate proposed with more than one partner in a round is dropped for
 * that round. Throws Error if an import names an unknown object or aligns an
 * object twice.
 */
std::vector<InstanceAlignment> align_extended(const AgentOntology& a, const AgentOntology& b,
                                              const std::vector<NamedAlignment>& imported);

std::vector<InstanceAlignment> ground(const AgentOntology& a, const AgentOntology& b, const GroundingMode& mode);

/// Reads `left TAB right` lines; '#' comments and blank lines are skipped.
std::vector<NamedAlignment> read_named_alignments(const std::filesystem::path& path);
std::vector<NamedAlignment> parse_named_alignments(std::string_view text);

/**
 * Grounded objects oriented from one agent (the teacher) to the other (the
 * student). Entry k of both vectors names the same world object; CommonId k
 * refers to it.
 */
struct CommonObjects {
  std::vector<ObjectId> teacher;
  std::vector<ObjectId> student;

  std::size_t size() const { return teacher.size(); }
};

/// Orients an alignment of (A, B). With `teacher_is_left` the teacher is A.
CommonObjects orient(const std::vector<InstanceAlignment>& alignment, bool teacher_is_left);

}  // namespace squ

#endif  // SQU_GROUNDING_H_
