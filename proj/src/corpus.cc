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

#include "squ/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/core.h>

namespace squ {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(fmt::format("line {}: {}", line, what)), line_(line) {}

std::vector<Triple> parse_triples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::string_view fields[3];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      std::string_view field = line.substr(start, tab == std::string_view::npos ? line.size() - start : tab - start);
      if (count < 3) fields[count] = field;
      ++count;
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (count != 3) {
      throw ParseError(line_no, fmt::format("expected 3 tab-separated fields, found {}", count));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (fields[i].empty()) throw ParseError(line_no, fmt::format("field {} is empty", i + 1));
    }
    triples.push_back({std::string(fields[0]), std::string(fields[1]), std::string(fields[2])});
  }
  return triples;
}

std::vector<Triple> load_triple_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open triple file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_triples(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::optional<ObjectId> AgentOntology::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PropertyId> AgentOntology::find_property(std::string_view name) const {
  auto it = property_index_.find(std::string(name));
  if (it == property_index_.end()) return std::nullopt;
  return it->second;
}

ObjectId AgentOntology::object(std::string_view name) const {
  if (auto id = find_object(name)) return *id;
  throw Error(fmt::format("object '{}' is unknown to view '{}'", name, name_));
}

PropertyId AgentOntology::property(std::string_view name) const {
  if (auto id = find_property(name)) return *id;
  throw Error(fmt::format("property '{}' is unknown to view '{}'", name, name_));
}

bool AgentOntology::has_property(ObjectId object, PropertyId property) const {
  const PropertySet& props = properties_of(object);
  return std::binary_search(props.begin(), props.end(), property);
}

AgentOntology build_view(const std::vector<Triple>& triples, std::string name, std::string type_predicate) {
  std::set<Triple> unique(triples.begin(), triples.end());

  std::set<std::string> objects;
  std::set<std::string> properties;
  for (const Triple& t : unique) {
    objects.insert(t.subject);
    if (t.predicate == type_predicate) properties.insert(t.object);
  }

  AgentOntology view;
  view.name_ = std::move(name);
  view.type_predicate_ = std::move(type_predicate);
  view.object_names_.assign(objects.begin(), objects.end());
  view.property_names_.assign(properties.begin(), properties.end());
  for (std::uint32_t i = 0; i < view.object_names_.size(); ++i) {
    view.object_index_.emplace(view.object_names_[i], ObjectId{i});
  }
  for (std::uint32_t i = 0; i < view.property_names_.size(); ++i) {
    view.property_index_.emplace(view.property_names_[i], PropertyId{i});
  }

  view.properties_.resize(view.object_names_.size());
  view.extensions_.resize(view.property_names_.size());
  // std::set iteration is ordered by subject then predicate then object, so
  // per-object property lists come out sorted.
  for (const Triple& t : unique) {
    if (t.predicate == view.type_predicate_) {
      ObjectId o = view.object_index_.at(t.subject);
      PropertyId p = view.property_index_.at(t.object);
      view.properties_[index(o)].push_back(p);
      view.extensions_[index(p)].push_back(o);
    } else {
      view.relations_.push_back(t);
    }
  }
  for (auto& ext : view.extensions_) std::sort(ext.begin(), ext.end());
  return view;
}

std::string serialize_type_triples(const AgentOntology& view) {
  std::string out;
  for (std::uint32_t i = 0; i < view.object_count(); ++i) {
    for (PropertyId p : view.properties_of(ObjectId{i})) {
      out += fmt::format("{}\t{}\t{}\n", view.object_name(ObjectId{i}), view.type_predicate(), view.property_name(p));
    }
  }
  return out;
}

std::map<PropertyId, PropertyWeight> property_weights(const AgentOntology& view) {
  if (view.object_count() == 0) {
    throw Error(fmt::format("cannot weight properties of empty view '{}'", view.name()));
  }
  std::map<PropertyId, PropertyWeight> weights;
  for (std::uint32_t p = 0; p < view.property_count(); ++p) {
    std::size_t owners = view.extension(PropertyId{p}).size();
    if (owners > 0) weights.emplace(PropertyId{p}, PropertyWeight{owners, view.object_count()});
  }
  return weights;
}

}  // namespace squ
