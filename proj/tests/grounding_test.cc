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

#include <set>

#include "doctest.h"
#include "squ/grounding.h"
#include "support/oracles.h"
#include "support/toys.h"

using namespace squ;
using namespace squ::testing;

namespace {

using NamePairs = std::set<std::pair<std::string, std::string>>;

NamePairs named(const AgentOntology& a, const AgentOntology& b, const std::vector<InstanceAlignment>& alignment) {
  NamePairs out;
  for (const auto& x : alignment) out.emplace(a.object_name(x.left), b.object_name(x.right));
  return out;
}

void check_partial_injection(const std::vector<InstanceAlignment>& alignment) {
  std::set<ObjectId> lefts;
  std::set<ObjectId> rights;
  for (const auto& x : alignment) {
    CHECK(lefts.insert(x.left).second);
    CHECK(rights.insert(x.right).second);
  }
}

}  // namespace

TEST_CASE("split_identifier cuts after the last # or /") {
  CHECK(split_identifier("http://x.org/cmt#bob").ns == "http://x.org/cmt#");
  CHECK(split_identifier("http://x.org/cmt#bob").local == "bob");
  CHECK(split_identifier("http://x.org/people/bob").local == "bob");
  CHECK(split_identifier("bob").ns.empty());
  CHECK(split_identifier("bob").local == "bob");
}

TEST_CASE("align_simple is the identifier intersection") {
  auto a = make_view("A", {{"u", {"C"}}, {"v", {"C"}}});
  auto b = make_view("B", {{"v", {"D"}}, {"w", {"D"}}});
  auto al = align_simple(a, b);
  CHECK(named(a, b, al) == NamePairs{{"v", "v"}});
  CHECK(al[0].rule == AlignmentRule::kUriEqual);

  auto c = make_view("C", {{"x", {"C"}}});
  CHECK(align_simple(a, c).empty());
  CHECK(align_simple(a, a).size() == a.object_count());
}

TEST_CASE("extended grounding: same local name in another namespace") {
  auto a = make_view("A", {{"ns1#bob", {"C"}}});
  auto b = make_view("B", {{"ns2#bob", {"D"}}});
  auto al = align_extended(a, b, {});
  REQUIRE(al.size() == 1);
  CHECK(named(a, b, al) == NamePairs{{"ns1#bob", "ns2#bob"}});
  CHECK(al[0].rule == AlignmentRule::kSameLocalName);
}

TEST_CASE("extended grounding: ambiguous local names are dropped") {
  auto a = make_view("A", {{"ns1#bob", {"C"}}});
  auto b = make_view("B", {{"ns2#bob", {"D"}}, {"ns3#bob", {"D"}}});
  CHECK(align_extended(a, b, {}).empty());
}

TEST_CASE("extended grounding: differing relation names do not align") {
  auto a = make_view("A", {{"p", {"Person"}}, {"a#x", {"Paper"}}}, {{"p", "a#writes", "a#x"}});
  auto b = make_view("B", {{"p", {"Person"}}, {"b#y", {"Paper"}}}, {{"p", "b#has_written", "b#y"}});
  CHECK(named(a, b, align_extended(a, b, {})) == NamePairs{{"p", "p"}});
}

TEST_CASE("extended grounding: relational rule fires after the local-name anchor") {
  // 6 objects per side. The anchor a#alice = b#alice appears only through the
  // local-name rule (round 1); papers hang off it by a relation (round 2), and
  // a review hangs off the paper (round 3).
  std::vector<Triple> ra = {{"a#alice", "a#writes", "a#p1"}, {"a#p1", "a#hasReview", "a#r1"}};
  std::vector<Triple> rb = {{"b#alice", "b#writes", "b#paper7"}, {"b#paper7", "b#hasReview", "b#rev3"}};
  auto a = make_view("A", {{"a#alice", {"a#Person"}}, {"a#p1", {"a#Paper"}}, {"a#r1", {"a#Review"}},
                           {"k", {"a#Person"}}, {"a#lonely", {}}, {"a#z", {"a#Paper"}}},
                     ra);
  auto b = make_view("B", {{"b#alice", {"b#Person"}}, {"b#paper7", {"b#Paper"}}, {"b#rev3", {"b#Review"}},
                           {"k", {"b#Person"}}, {"b#other", {}}, {"b#w", {"b#Paper"}}},
                     rb);

  const auto oracle = naive_relational_closure(ra, rb, {{{"a#alice", "b#alice"}, 0}});
  REQUIRE(oracle.at({"a#p1", "b#paper7"}) == 1);
  REQUIRE(oracle.at({"a#r1", "b#rev3"}) == 2);

  auto al = align_extended(a, b, {});
  check_partial_injection(al);
  std::map<std::pair<std::string, std::string>, std::size_t> rounds;
  for (const auto& x : al) rounds[{a.object_name(x.left), b.object_name(x.right)}] = x.round;
  CHECK(rounds.size() == 4);
  CHECK(rounds.at({"k", "k"}) == 0);
  CHECK(rounds.at({"a#alice", "b#alice"}) == 1);
  // oracle passes are counted from the anchor, which itself lands in round 1
  CHECK(rounds.at({"a#p1", "b#paper7"}) == 1 + oracle.at({"a#p1", "b#paper7"}));
  CHECK(rounds.at({"a#r1", "b#rev3"}) == 1 + oracle.at({"a#r1", "b#rev3"}));
}

TEST_CASE("extended grounding: relational conflicts are dropped, inverse edges count") {
  auto a = make_view("A", {{"e", {"C"}}, {"a#x1", {"C"}}, {"a#x2", {"C"}}, {"a#m", {"C"}}},
                     {{"e", "a#knows", "a#x1"}, {"a#m", "a#authorOf", "e"}});
  auto b = make_view("B", {{"e", {"C"}}, {"b#y1", {"C"}}, {"b#y2", {"C"}}, {"b#n", {"C"}}},
                     {{"e", "b#knows", "b#y1"}, {"e", "b#knows", "b#y2"}, {"b#n", "b#authorOf", "e"}});
  auto al = align_extended(a, b, {});
  check_partial_injection(al);
  // a#x1 has two candidates and is left alone; a#m = b#n via the inverse edge
  CHECK(named(a, b, al) == NamePairs{{"e", "e"}, {"a#m", "b#n"}});
}

TEST_CASE("extended grounding: imports") {
  auto a = make_view("A", {{"a#1", {"C"}}, {"s", {"C"}}});
  auto b = make_view("B", {{"b#2", {"C"}}, {"s", {"C"}}});
  auto al = align_extended(a, b, {{"a#1", "b#2"}});
  CHECK(named(a, b, al) == NamePairs{{"a#1", "b#2"}, {"s", "s"}});
  bool imported = false;
  for (const auto& x : al) imported |= x.rule == AlignmentRule::kImported;
  CHECK(imported);

  CHECK_THROWS_AS(align_extended(a, b, {{"a#1", "missing"}}), Error);
  CHECK_THROWS_AS(align_extended(a, b, {{"a#1", "b#2"}, {"a#1", "s"}}), Error);
  CHECK_THROWS_AS(ground(a, b, {GroundingKind::kSimple, {{"a#1", "b#2"}}}), Error);
}

TEST_CASE("parse_named_alignments") {
  auto al = parse_named_alignments("# comment\nx\ty\n\nu\tv\r\n");
  REQUIRE(al.size() == 2);
  CHECK(al[1].left == "u");
  CHECK(al[1].right == "v");
  CHECK_THROWS_AS(parse_named_alignments("x\n"), ParseError);
}

TEST_CASE("grounding properties on random relational worlds") {
  Rng rng(5);
  const std::vector<std::string> namespaces = {"a#", "b#", "c/"};
  for (int round = 0; round < 150; ++round) {
    auto random_side = [&](const std::string& home) {
      std::vector<Triple> triples;
      for (int i = 0; i < 12; ++i) {
        const std::string ns = uniform_unit(rng) < 0.5 ? home : namespaces[uniform_index(rng, 3)];
        const std::string s = ns + "o" + std::to_string(uniform_index(rng, 8));
        triples.push_back({s, "rdf:type", "C" + std::to_string(uniform_index(rng, 3))});
        const std::string o = namespaces[uniform_index(rng, 3)] + "o" + std::to_string(uniform_index(rng, 8));
        triples.push_back({s, home + "rel" + std::to_string(uniform_index(rng, 2)), o});
      }
      return triples;
    };
    const auto a = build_view(random_side("a#"), "A");
    const auto b = build_view(random_side("b#"), "B");

    const auto simple = align_simple(a, b);
    const auto extended = align_extended(a, b, {});
    check_partial_injection(extended);

    NamePairs ext_pairs = named(a, b, extended);
    for (const auto& p : named(a, b, simple)) CHECK(ext_pairs.contains(p));

    // fixpoint: feeding the result back in as imports adds nothing
    std::vector<NamedAlignment> again;
    for (const auto& [l, r] : ext_pairs) again.push_back({l, r});
    CHECK(named(a, b, align_extended(a, b, again)) == ext_pairs);
  }
}

TEST_CASE("orient swaps sides") {
  std::vector<InstanceAlignment> al = {{ObjectId{0}, ObjectId{3}}, {ObjectId{1}, ObjectId{2}}};
  auto t = orient(al, true);
  CHECK(t.teacher == std::vector<ObjectId>{ObjectId{0}, ObjectId{1}});
  auto s = orient(al, false);
  CHECK(s.teacher == std::vector<ObjectId>{ObjectId{3}, ObjectId{2}});
  CHECK(s.student == std::vector<ObjectId>{ObjectId{0}, ObjectId{1}});
}
