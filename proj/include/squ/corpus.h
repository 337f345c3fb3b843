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

#ifndef SQU_CORPUS_H_
#define SQU_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "squ/types.h"

namespace squ {

inline constexpr std::string_view kDefaultTypePredicate = "rdf:type";

struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  auto operator<=>(const Triple&) const = default;
};

/// Raised for malformed triple documents. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Parses the line-based triple format: one `subject TAB predicate TAB object`
 * per line. Lines starting with '#' and blank lines are skipped. A trailing
 * '\r' is tolerated so files written on Windows load unchanged.
 */
std::vector<Triple> parse_triples(std::string_view text);

std::vector<Triple> load_triple_file(const std::filesystem::path& path);

/**
 * One agent's private view of the world: every subject of a triple is an
 * object, and the objects of `type_predicate` triples are its properties.
 * Objects and properties are interned; ids follow lexicographic identifier
 * order. Immutable once built.
 */
class AgentOntology {
 public:
  const std::string& name() const { return name_; }
  const std::string& type_predicate() const { return type_predicate_; }

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t property_count() const { return property_names_.size(); }

  const std::string& object_name(ObjectId id) const { return object_names_.at(index(id)); }
  const std::string& property_name(PropertyId id) const { return property_names_.at(index(id)); }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& property_names() const { return property_names_; }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<PropertyId> find_property(std::string_view name) const;
  /// Like find_object but throws Error for an unknown identifier.
  ObjectId object(std::string_view name) const;
  PropertyId property(std::string_view name) const;

  /// Sorted property set of an object; empty for untyped objects.
  const PropertySet& properties_of(ObjectId id) const { return properties_.at(index(id)); }
  bool has_property(ObjectId object, PropertyId property) const;
  /// Objects owning `property`, sorted.
  const std::vector<ObjectId>& extension(PropertyId property) const { return extensions_.at(index(property)); }

  /// Non-type triples, de-duplicated and sorted.
  const std::vector<Triple>& relations() const { return relations_; }

 private:
  friend AgentOntology build_view(const std::vector<Triple>&, std::string, std::string);

  std::string name_;
  std::string type_predicate_;
  std::vector<std::string> object_names_;
  std::vector<std::string> property_names_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, PropertyId> property_index_;
  std::vector<PropertySet> properties_;
  std::vector<std::vector<ObjectId>> extensions_;
  std::vector<Triple> relations_;
};

/// Groups triples into a view. Duplicate triples collapse; untyped subjects
/// become objects with an empty property set.
AgentOntology build_view(const std::vector<Triple>& triples, std::string name,
                         std::string type_predicate = std::string(kDefaultTypePredicate));

/// Writes the type triples of a view in the triple file format, sorted.
std::string serialize_type_triples(const AgentOntology& view);

/// Normalized frequency of a property: owners / all objects of the view.
struct PropertyWeight {
  std::size_t owners = 0;
  std::size_t objects = 0;

  double value() const { return static_cast<double>(owners) / static_cast<double>(objects); }
};

/// Weights of every property owned by at least one object. Throws Error for
/// an empty view.
std::map<PropertyId, PropertyWeight> property_weights(const AgentOntology& view);

}  // namespace squ

#endif  // SQU_CORPUS_H_
