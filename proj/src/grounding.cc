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

#include "squ/grounding.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include <fmt/core.h>

namespace squ {

std::string_view to_string(AlignmentRule rule) {
  switch (rule) {
    case AlignmentRule::kUriEqual: return "uri_equal";
    case AlignmentRule::kSameLocalName: return "same_local_name";
    case AlignmentRule::kRelational: return "relational";
    case AlignmentRule::kImported: return "imported";
  }
  return "unknown";
}

SplitIdentifier split_identifier(std::string_view id) {
  std::size_t cut = id.find_last_of("#/");
  if (cut == std::string_view::npos) return {std::string_view{}, id};
  return {id.substr(0, cut + 1), id.substr(cut + 1)};
}

std::vector<InstanceAlignment> align_simple(const AgentOntology& a, const AgentOntology& b) {
  std::vector<InstanceAlignment> out;
  for (std::uint32_t i = 0; i < a.object_count(); ++i) {
    if (auto j = b.find_object(a.object_name(ObjectId{i}))) {
      out.push_back({ObjectId{i}, *j, AlignmentRule::kUriEqual, 0});
    }
  }
  return out;
}

namespace {

struct Edge {
  std::string relation;  // local name
  ObjectId other;
};

struct Adjacency {
  std::vector<std::vector<Edge>> out;  // (o r x): x
  std::vector<std::vector<Edge>> in;   // (x r o): x
};

Adjacency relation_index(const AgentOntology& view) {
  Adjacency adj;
  adj.out.resize(view.object_count());
  adj.in.resize(view.object_count());
  for (const Triple& t : view.relations()) {
    auto subject = view.find_object(t.subject);
    auto target = view.find_object(t.object);
    if (!subject || !target) continue;
    std::string rel(split_identifier(t.predicate).local);
    adj.out[index(*subject)].push_back({rel, *target});
    adj.in[index(*target)].push_back({rel, *subject});
  }
  return adj;
}

class AlignmentState {
 public:
  AlignmentState(std::size_t left_size, std::size_t right_size)
      : left_(left_size), right_(right_size) {}

  bool left_free(ObjectId o) const { return !left_[index(o)]; }
  bool right_free(ObjectId o) const { return !right_[index(o)]; }
  std::optional<ObjectId> partner_of_left(ObjectId o) const { return left_[index(o)]; }

  void add(ObjectId l, ObjectId r, AlignmentRule rule, std::size_t round) {
    left_[index(l)] = r;
    right_[index(r)] = l;
    pairs_.push_back({l, r, rule, round});
  }

  const std::vector<InstanceAlignment>& pairs() const { return pairs_; }

 private:
  std::vector<std::optional<ObjectId>> left_;
  std::vector<std::optional<ObjectId>> right_;
  std::vector<InstanceAlignment> pairs_;
};

void propose_relational(const std::vector<Edge>& from_a, const std::vector<Edge>& from_b, const AlignmentState& state,
                        std::map<std::pair<ObjectId, ObjectId>, AlignmentRule>& proposals) {
  for (const Edge& ea : from_a) {
    if (!state.left_free(ea.other)) continue;
    for (const Edge& eb : from_b) {
      if (ea.relation != eb.relation || !state.right_free(eb.other)) continue;
      proposals.emplace(std::make_pair(ea.other, eb.other), AlignmentRule::kRelational);
    }
  }
}

}  // namespace

std::vector<InstanceAlignment> align_extended(const AgentOntology& a, const AgentOntology& b,
                                              const std::vector<NamedAlignment>& imported) {
  AlignmentState state(a.object_count(), b.object_count());

  for (const NamedAlignment& named : imported) {
    auto l = a.find_object(named.left);
    auto r = b.find_object(named.right);
    if (!l || !r) {
      throw Error(fmt::format("imported alignment {} = {} references an object unknown to {}", named.left,
                              named.right, !l ? a.name() : b.name()));
    }
    if (state.partner_of_left(*l) == r) continue;
    if (!state.left_free(*l) || !state.right_free(*r)) {
      throw Error(fmt::format("imported alignment {} = {} aligns an object twice", named.left, named.right));
    }
    state.add(*l, *r, AlignmentRule::kImported, 0);
  }

  for (const InstanceAlignment& exact : align_simple(a, b)) {
    if (state.left_free(exact.left) && state.right_free(exact.right)) {
      state.add(exact.left, exact.right, AlignmentRule::kUriEqual, 0);
    }
  }

  const Adjacency adj_a = relation_index(a);
  const Adjacency adj_b = relation_index(b);

  for (std::size_t round = 1;; ++round) {
    // Candidates are computed against the state at the start of the round.
    std::map<std::pair<ObjectId, ObjectId>, AlignmentRule> proposals;

    std::map<std::string_view, std::vector<ObjectId>> free_a;
    std::map<std::string_view, std::vector<ObjectId>> free_b;
    for (std::uint32_t i = 0; i < a.object_count(); ++i) {
      if (state.left_free(ObjectId{i})) free_a[split_identifier(a.object_name(ObjectId{i})).local].push_back(ObjectId{i});
    }
    for (std::uint32_t j = 0; j < b.object_count(); ++j) {
      if (state.right_free(ObjectId{j})) free_b[split_identifier(b.object_name(ObjectId{j})).local].push_back(ObjectId{j});
    }
    for (const auto& [local, lefts] : free_a) {
      auto it = free_b.find(local);
      if (local.empty() || it == free_b.end() || lefts.size() != 1 || it->second.size() != 1) continue;
      ObjectId l = lefts.front();
      ObjectId r = it->second.front();
      if (split_identifier(a.object_name(l)).ns != split_identifier(b.object_name(r)).ns) {
        proposals.emplace(std::make_pair(l, r), AlignmentRule::kSameLocalName);
      }
    }

    for (const InstanceAlignment& anchor : state.pairs()) {
      propose_relational(adj_a.out[index(anchor.left)], adj_b.out[index(anchor.right)], state, proposals);
      propose_relational(adj_a.in[index(anchor.left)], adj_b.in[index(anchor.right)], state, proposals);
    }

    std::map<ObjectId, std::size_t> left_degree;
    std::map<ObjectId, std::size_t> right_degree;
    for (const auto& [pair, rule] : proposals) {
      ++left_degree[pair.first];
      ++right_degree[pair.second];
    }
    std::size_t added = 0;
    for (const auto& [pair, rule] : proposals) {
      if (left_degree[pair.first] != 1 || right_degree[pair.second] != 1) continue;
      state.add(pair.first, pair.second, rule, round);
      ++added;
    }
    if (added == 0) break;
  }

  std::vector<InstanceAlignment> out = state.pairs();
  std::sort(out.begin(), out.end(), [](const InstanceAlignment& x, const InstanceAlignment& y) {
    return x.left < y.left;
  });
  return out;
}

std::vector<InstanceAlignment> ground(const AgentOntology& a, const AgentOntology& b, const GroundingMode& mode) {
  if (mode.kind == GroundingKind::kSimple) {
    if (!mode.imported.empty()) throw Error("imported alignments require extended grounding");
    return align_simple(a, b);
  }
  return align_extended(a, b, mode.imported);
}

std::vector<NamedAlignment> parse_named_alignments(std::string_view text) {
  std::vector<NamedAlignment> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(line_no, "expected 2 tab-separated fields");
    }
    NamedAlignment a{line.substr(0, tab), line.substr(tab + 1)};
    if (a.left.empty() || a.right.empty()) throw ParseError(line_no, "empty field");
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<NamedAlignment> read_named_alignments(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open alignment file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_named_alignments(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

CommonObjects orient(const std::vector<InstanceAlignment>& alignment, bool teacher_is_left) {
  CommonObjects commons;
  commons.teacher.reserve(alignment.size());
  commons.student.reserve(alignment.size());
  for (const InstanceAlignment& pair : alignment) {
    commons.teacher.push_back(teacher_is_left ? pair.left : pair.right);
    commons.student.push_back(teacher_is_left ? pair.right : pair.left);
  }
  return commons;
}

}  // namespace squ
