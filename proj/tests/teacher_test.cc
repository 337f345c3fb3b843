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

#include <map>
#include <set>

#include "doctest.h"
#include "squ/teacher.h"
#include "support/oracles.h"
#include "support/toys.h"

using namespace squ;
using namespace squ::testing;

namespace {

std::set<std::pair<std::string, std::string>> named(const AgentOntology& v, const CommonObjects& c,
                                                    const std::vector<GroundedExample>& examples) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& ex : examples) {
    out.emplace(v.object_name(c.teacher[index(ex.relevant)]), v.object_name(c.teacher[index(ex.irrelevant)]));
  }
  return out;
}

struct Toy {
  AgentOntology view;
  CommonObjects commons;
};

Toy toy(const Typing& typing) {
  Toy t{make_view("T", typing), {}};
  t.commons = orient(align_simple(t.view, t.view), true);
  return t;
}

}  // namespace

TEST_CASE("build_pool enumerates relevant x irrelevant pairs") {
  auto t = toy({{"a", {"q"}}, {"b", {}}, {"c", {"z"}}});
  auto pool = build_pool(t.view, t.commons, t.view.property("q"));
  CHECK(named(t.view, t.commons, pool.candidates()) == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"a", "c"}});
  CHECK(pool.initial_size() == 2);

  // two owners; the oracle is the plain double loop over names
  t = toy({{"a", {"q"}}, {"b", {"q", "z"}}, {"c", {"z"}}});
  std::set<std::pair<std::string, std::string>> expected;
  for (std::string r : {"a", "b", "c"}) {
    for (std::string i : {"a", "b", "c"}) {
      bool r_has = r != "c";
      bool i_has = i != "c";
      if (r != i && r_has && !i_has) expected.emplace(r, i);
    }
  }
  REQUIRE(expected == std::set<std::pair<std::string, std::string>>{{"a", "c"}, {"b", "c"}});
  pool = build_pool(t.view, t.commons, t.view.property("q"));
  CHECK(named(t.view, t.commons, pool.candidates()) == expected);

  t = toy({{"a", {"q"}}, {"b", {"q"}}});
  CHECK_THROWS_AS(build_pool(t.view, t.commons, t.view.property("q")), UntrainableQuery);
}

TEST_CASE("pool members always carry the query in the teacher's positive set") {
  Rng rng(3);
  for (int round = 0; round < 100; ++round) {
    auto t = toy(random_typing(rng, 2 + uniform_index(rng, 8), 5, 0.4));
    if (!separable(t.view, "P0")) continue;
    auto pool = build_pool(t.view, t.commons, t.view.property("P0"));
    for (const auto& ex : pool.candidates()) {
      auto x = interpret(t.view, t.commons, Role::kTeacher, ex);
      CHECK(std::binary_search(x.positive.begin(), x.positive.end(), t.view.property("P0")));
    }
  }
}

TEST_CASE("score_example is weighted negative and common minus positive") {
  // 10 objects: p on 2, q on 5, r on 3 -> w = 0.2, 0.5, 0.3
  Typing typing = {{"rel", {"p", "r"}}, {"irr", {"q", "r"}}};
  for (int i = 0; i < 8; ++i) {
    std::vector<std::string> cls;
    if (i < 1) cls.push_back("p");
    if (i < 4) cls.push_back("q");
    if (i < 1) cls.push_back("r");
    typing.emplace_back("o" + std::to_string(i), cls);
  }
  auto t = toy(typing);
  auto w = property_weights(t.view);
  REQUIRE(w.at(t.view.property("p")).value() == doctest::Approx(0.2));
  REQUIRE(w.at(t.view.property("q")).value() == doctest::Approx(0.5));
  REQUIRE(w.at(t.view.property("r")).value() == doctest::Approx(0.3));
  const CommonId rel{index(t.view.object("rel"))};
  const CommonId irr{index(t.view.object("irr"))};
  auto s = score_example(t.view, w, t.commons, {rel, irr});
  CHECK(s.value() == doctest::Approx(0.5 + 0.3 - 0.2));
  CHECK(s.numerator == 6);
  CHECK(s.denominator == 10);

  // purely positive example: P = {p} with w_p = 1
  auto t5 = toy({{"a", {"p"}}, {"b", {}}});
  std::map<PropertyId, PropertyWeight> saturated = {{t5.view.property("p"), {2, 2}}};
  auto s5 = score_example(t5.view, saturated, t5.commons, {CommonId{0}, CommonId{1}});
  CHECK(s5.numerator == -2);
  CHECK(s5.value() == doctest::Approx(-1.0));
}

TEST_CASE("score_example matches an exhaustive recomputation on a 5-object view") {
  Typing typing = {{"a", {"A", "B"}}, {"b", {"B", "C"}}, {"c", {"A", "C", "D"}}, {"d", {}}, {"e", {"B"}}};
  const auto triples = typed_triples(typing);
  const auto weights = brute_force_weights(triples, "rdf:type");
  auto t = toy(typing);
  const auto w = property_weights(t.view);

  std::map<std::string, std::vector<std::string>> classes(typing.begin(), typing.end());
  for (const auto& [r, rc] : classes) {
    for (const auto& [i, ic] : classes) {
      if (r == i) continue;
      StringSet rs(rc.begin(), rc.end());
      StringSet is(ic.begin(), ic.end());
      double expected = 0;
      for (const auto& c : rs) expected += is.contains(c) ? weights.at(c) : -weights.at(c);
      for (const auto& c : is) expected += rs.contains(c) ? 0.0 : weights.at(c);
      const GroundedExample ex{CommonId{index(t.view.object(r))}, CommonId{index(t.view.object(i))}};
      CHECK(score_example(t.view, w, t.commons, ex).value() == doctest::Approx(expected));
    }
  }
}

TEST_CASE("next_example policies") {
  SUBCASE("a single candidate is always returned") {
    auto t = toy({{"a", {"q"}}, {"b", {}}});
    auto pool = build_pool(t.view, t.commons, t.view.property("q"));
    auto w = property_weights(t.view);
    Rng rng(1);
    for (auto policy : {TeacherPolicy::kRandom, TeacherPolicy::kPropertyBased}) {
      auto ex = next_example(pool, policy, t.view, w, t.commons, rng);
      REQUIRE(ex);
      CHECK(*ex == pool.candidates().front());
    }
  }
  SUBCASE("property-based takes the argmax") {
    // (d, b) scores w_x - w_q; every other pair also loses w_z or w_x
    auto t = toy({{"a", {"q", "z"}}, {"b", {"x"}}, {"c", {}}, {"d", {"q"}}});
    auto pool = build_pool(t.view, t.commons, t.view.property("q"));
    auto w = property_weights(t.view);
    Rng rng(9);
    const GroundedExample best{CommonId{index(t.view.object("d"))}, CommonId{index(t.view.object("b"))}};
    for (int i = 0; i < 20; ++i) {
      auto ex = next_example(pool, TeacherPolicy::kPropertyBased, t.view, w, t.commons, rng);
      CHECK(*ex == best);
    }
  }
  SUBCASE("equal scores split evenly") {
    auto t = toy({{"a", {"q"}}, {"b", {"q"}}, {"c", {}}});
    auto pool = build_pool(t.view, t.commons, t.view.property("q"));
    auto w = property_weights(t.view);
    REQUIRE(pool.candidates().size() == 2);
    Rng rng(2024);
    std::size_t first = 0;
    for (int i = 0; i < 10000; ++i) {
      first += *next_example(pool, TeacherPolicy::kPropertyBased, t.view, w, t.commons, rng) == pool.candidates()[0];
    }
    // 4.5 standard deviations of Binomial(10000, 0.5)
    CHECK(first > 4775);
    CHECK(first < 5225);
  }
  SUBCASE("exhausted pool") {
    auto t = toy({{"a", {"q"}}, {"b", {}}});
    auto pool = build_pool(t.view, t.commons, t.view.property("q"));
    pool.receive_feedback(pool.candidates().front(), Feedback::kUnclear);
    Rng rng(1);
    CHECK_FALSE(next_example(pool, TeacherPolicy::kRandom, t.view, property_weights(t.view), t.commons, rng));
  }
}

TEST_CASE("receive_feedback removes unclear examples only") {
  auto t = toy({{"a", {"q"}}, {"b", {}}, {"c", {}}});
  auto pool = build_pool(t.view, t.commons, t.view.property("q"));
  const auto ex = pool.candidates().front();

  auto same = pool;
  same.receive_feedback(ex, Feedback::kClear);
  CHECK(same.candidates() == pool.candidates());
  CHECK(same.removed().empty());

  pool.receive_feedback(ex, Feedback::kUnclear);
  CHECK(pool.candidates().size() == 1);
  CHECK(pool.removed().size() == 1);
  pool.receive_feedback(ex, Feedback::kUnclear);
  CHECK(pool.candidates().size() == 1);
  CHECK(pool.removed().size() == 1);
  CHECK_FALSE(pool.is_candidate(ex));

  CHECK_THROWS_AS(pool.receive_feedback({CommonId{1}, CommonId{2}}, Feedback::kUnclear), Error);
}

TEST_CASE("Teacher draws exactly what next_example draws") {
  Rng gen(77);
  for (int round = 0; round < 60; ++round) {
    auto t = toy(random_typing(gen, 3 + uniform_index(gen, 9), 6, 0.45));
    if (!separable(t.view, "P1")) continue;
    const auto q = t.view.property("P1");
    const auto w = property_weights(t.view);
    for (auto policy : {TeacherPolicy::kRandom, TeacherPolicy::kPropertyBased}) {
      Teacher teacher(policy, t.view, t.commons, q);
      ExamplePool pool = build_pool(t.view, t.commons, q);
      Rng r1(round);
      Rng r2(round);
      std::size_t last_removed = 0;
      for (int step = 0; step < 15; ++step) {
        auto a = teacher.next_example(r1);
        auto b = next_example(pool, policy, t.view, w, t.commons, r2);
        REQUIRE(a.has_value() == b.has_value());
        if (!a) break;
        CHECK(*a == *b);
        const Feedback f = step % 3 == 0 ? Feedback::kUnclear : Feedback::kClear;
        teacher.receive_feedback(*a, f);
        pool.receive_feedback(*b, f);
        CHECK(teacher.episodic_memory() >= last_removed);
        last_removed = teacher.episodic_memory();
      }
    }
  }
}

TEST_CASE("policy names") {
  CHECK(parse_teacher_policy("random") == TeacherPolicy::kRandom);
  CHECK(parse_teacher_policy("property") == TeacherPolicy::kPropertyBased);
  CHECK(to_string(TeacherPolicy::kPropertyBased) == "property");
  CHECK_THROWS_AS(parse_teacher_policy("greedy"), Error);
}
