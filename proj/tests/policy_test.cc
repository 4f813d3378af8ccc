// Copyright 2026 The Taxsan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <sstream>

#include "taxsan/common/errors.h"
#include "taxsan/policy/access_level.h"
#include "taxsan/policy/contact_graph.h"
#include "taxsan/policy/rules.h"
#include "taxsan/policy/topics.h"
#include "test_support.h"

namespace taxsan {
namespace {

using namespace policy;

const char *kFamilyRequirements = R"({
  "publisher": "Bob",
  "categories": ["close friends", "family friends", "friends"],
  "topics": [
    {"st": "medical health", "levels": {"close friends": "diseases", "family friends": "hepatitis"}},
    {"st": "religion", "levels": {"friends": "religion", "family friends": "Muslim"}},
    {"st": "sexuality", "levels": {"friends": null, "family friends": "homosexual"}},
    {"st": "NE_person", "levels": {"strangers": "null", "family friends": "person_name"}},
    {"st": "NE_location", "levels": {"family friends": "location_name"}},
    {"st": "NE_organization", "levels": {"family friends": "organization"}}
  ]
})";

AccessLevel nodes_of(std::initializer_list<const char *> ids) {
  kb::ConceptSet s;
  for (const char *c : ids) s.insert(ConceptId(c));
  return AccessLevel::concept_nodes(s);
}

AccessLevel join(const kb::KnowledgeBase &kb, std::vector<AccessLevel> v) { return resolve_conflict(v, kb); }

TEST_CASE("topic catalog") {
  const auto &cat = TopicCatalog::system();
  REQUIRE(cat.find("Medical  Health"));
  CHECK(cat.find("Medical  Health")->name == "medical health");
  CHECK(cat.find("ne_PERSON")->entity == nlp::EntityCategory::kPerson);
  CHECK(cat.find("astrology") == nullptr);
  for (const char *t : {"religion", "race", "politics", "sexuality", "census data", "NE_time", "NE_location",
                        "NE_organization", "NE_money", "NE_percent", "NE_date"}) {
    CHECK_MESSAGE(cat.find(t), t);
  }
}

TEST_CASE("family and friends rules") {
  auto rs = compile_requirements(kFamilyRequirements);
  CHECK(rs.publisher == UserId("Bob"));
  auto tuples = rs.tuples();
  auto has = [&](const char *t, const char *c, const char *al) {
    return std::find(tuples.begin(), tuples.end(), RuleTuple{t, c, al}) != tuples.end();
  };
  CHECK(has("medical health", "close friends", "diseases"));
  CHECK(has("medical health", "family friends", "hepatitis"));
  CHECK(has("religion", "friends", "religion"));
  CHECK(has("religion", "family friends", "Muslim"));
  CHECK(has("sexuality", "friends", "null"));
  CHECK(has("NE_person", "strangers", "null"));
  CHECK(has("NE_person", "family friends", "person_name"));
  CHECK(has("NE_location", "family friends", "location_name"));
  CHECK(has("NE_organization", "family friends", "organization"));
  // Deny by default.
  CHECK(has("medical health", "friends", "null"));

  auto close = rule_for(rs, "close friends");
  CHECK(close.front().al == AccessLevel::concept_labels({"diseases"}));
  auto family = rule_for(rs, "family friends");
  CHECK(family[1].topic == "religion");
  CHECK(family[1].al.labels == std::vector<std::string>{"Muslim"});
  for (const auto &r : rule_for(rs, "strangers")) CHECK(r.al.is_null());
  CHECK(rule_for(rs, "strangers").size() == rs.topics.size());
  CHECK_THROWS_AS(rule_for(rs, "coworkers"), NotFoundError);
}

TEST_CASE("health network rules") {
  auto rs = compile_requirements(testing::read_file(testing::fixture("health_requirements.json")));
  auto t = rs.tuples();
  REQUIRE(t.size() == 6);
  CHECK(t[0] == RuleTuple{"medical health", "Clinicians/Researchers", "HIV"});
  CHECK(t[3] == RuleTuple{"medical health", "Clinicians/Researchers", "STDs"});
  CHECK(t[4] == RuleTuple{"medical health", "Followers", "Infections"});
  CHECK(t[5] == RuleTuple{"medical health", "Registered users", "ill health"});
}

TEST_CASE("requirements errors") {
  CHECK_THROWS_AS(compile_requirements(R"({"publisher":"b","topics":[{"st":"astrology"}]})"), ValidationError);
  CHECK_THROWS_AS(compile_requirements(R"({"publisher":"b","categories":["a"],
      "topics":[{"st":"religion","levels":{"z":"x"}}]})"),
                  ValidationError);
  CHECK_THROWS_AS(compile_requirements(R"({"publisher":"b","categories":["a"],
      "topics":[{"st":"religion","levels":{"a":"x"}},{"st":"Religion","levels":{"a":"y"}}]})"),
                  ConflictError);
  CHECK_THROWS_AS(compile_requirements(R"({"publisher":"b","categories":["a"],
      "topics":[{"st":"religion","levels":{"a":"x","a":"y"}}]})"),
                  ConflictError);
  CHECK_THROWS_AS(compile_requirements(R"({"publisher":"b","categories":["a"],
      "topics":[{"st":"NE_person","levels":{"a":"location"}}]})"),
                  ValidationError);
  CHECK_THROWS_AS(compile_requirements("{"), ValidationError);
  CHECK_THROWS_AS(compile_requirements(R"({"categories":[]})"), ValidationError);
  auto all = compile_requirements(R"({"publisher":"b","categories":["a"]})");
  CHECK(all.topics.size() == TopicCatalog::system().topics().size());
  for (const auto &r : all.rules) CHECK(r.al.is_null());
}

TEST_CASE("rule set JSON round trip") {
  auto kb = testing::load_fixture("hepatitis.taxsnap");
  auto rs = compile_requirements(R"({"publisher":"Bob","categories":["close friends","family friends"],
      "topics":[{"st":"medical health","scope":["illness"],
                 "levels":{"close friends":"diseases","family friends":["hepatitis","influenza"]}},
                {"st":"NE_person","levels":{"family friends":"person_name","close friends":"person"}}]})");
  auto resolved = resolve_rules(rs, kb);
  CHECK(rules_from_json(to_json(rs)) == rs);
  CHECK(rules_from_json(to_json(resolved)) == resolved);
  CHECK(resolved.scope_of("medical health") == std::vector<std::string>{"illness"});
  CHECK(resolved.scope_of("religion") == std::vector<std::string>{"religion"});
  CHECK(resolved.rules[0].al.nodes == kb::ConceptSet{ConceptId("disease")});
  CHECK_THROWS_AS(rules_from_json("[]"), ValidationError);
}

TEST_CASE("label validation") {
  auto kb = testing::load_fixture("health_network.taxsnap");
  auto rs = compile_requirements(R"({"publisher":"p","categories":["a","b","c"],
      "topics":[{"st":"medical health","levels":{"a":"Infections","b":"xyzzy","c":"STDs"}}]})");
  auto report = validate_rules(rs, kb);
  REQUIRE(report.checks.size() == 3);
  CHECK(report.checks[0].status == LabelCheck::Status::kAmbiguous);
  CHECK(report.checks[0].nodes ==
        std::vector<ConceptId>{ConceptId("infection"), ConceptId("infectious_disease")});
  CHECK(report.checks[1].status == LabelCheck::Status::kUnresolvable);
  CHECK(report.checks[2].status == LabelCheck::Status::kResolved);
  CHECK_FALSE(report.ok());
  CHECK(report.to_text().find("medical health\tb\txyzzy\tunresolvable\t\n") != std::string::npos);
  CHECK_THROWS_AS(resolve_rules(rs, kb), ConfigurationError);
}

TEST_CASE("label resolution order") {
  auto kb = testing::load_fixture("health_senses.taxsnap");
  CHECK(resolve_label(kb, "ill health") == std::vector<ConceptId>{ConceptId("ill_health")});
  CHECK(resolve_label(kb, "STDs") == std::vector<ConceptId>{ConceptId("STDs")});
  CHECK(resolve_label(kb, "Leper") == std::vector<ConceptId>{ConceptId("Leprosy")});
  CHECK(resolve_label(kb, "diseases") == std::vector<ConceptId>{ConceptId("disease")});
  CHECK(resolve_label(kb, "  ").empty());
  CHECK(resolve(AccessLevel::null(), kb).is_null());
  CHECK_THROWS_AS(resolve(AccessLevel::concept_labels({"xyzzy"}), kb), ConfigurationError);
}

TEST_CASE("access level display and fingerprint") {
  CHECK(AccessLevel::null().display() == "null");
  CHECK(AccessLevel::ne_name(nlp::EntityCategory::kPerson).display() == "person_name");
  CHECK(AccessLevel::ne_category(nlp::EntityCategory::kLocation).display() == "location");
  CHECK(AccessLevel::concept_labels({"HIV", "AIDS"}).display() == "HIV/AIDS");
  AccessLevel a = AccessLevel::concept_nodes({ConceptId("x")}, {"X"});
  AccessLevel b = AccessLevel::concept_nodes({ConceptId("x")}, {"another"});
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.fingerprint() != AccessLevel::null().fingerprint());
  CHECK(a.resolved());
  CHECK_FALSE(AccessLevel::concept_labels({"x"}).resolved());
}

TEST_CASE("two-party conflict cases") {
  auto kb = testing::load_fixture("hepatitis.taxsnap");
  auto disease = AccessLevel::concept_labels({"disease"});
  auto liver = AccessLevel::concept_labels({"liver disease"});
  auto illness = AccessLevel::concept_labels({"illness"});
  CHECK(join(kb, {disease, liver}).nodes == kb::ConceptSet{ConceptId("disease")});
  CHECK(join(kb, {liver, disease}).nodes == kb::ConceptSet{ConceptId("disease")});
  CHECK(join(kb, {illness, liver}).nodes == kb::ConceptSet{ConceptId("illness")});
  CHECK(join(kb, {disease, AccessLevel::null()}).is_null());
  CHECK(join(kb, {disease}).nodes == kb::ConceptSet{ConceptId("disease")});
  CHECK_THROWS_AS(join(kb, {}), Error);
}

TEST_CASE("incomparable levels keep both nodes") {
  auto kb = testing::load_fixture("hepatitis.taxsnap");
  auto r = join(kb, {nodes_of({"liver_disease"}), nodes_of({"influenza"})});
  CHECK(r.nodes == kb::ConceptSet{ConceptId("influenza"), ConceptId("liver_disease")});
  auto s = join(kb, {nodes_of({"hepatitis", "influenza"}), nodes_of({"liver_disease"})});
  CHECK(s.nodes == kb::ConceptSet{ConceptId("influenza"), ConceptId("liver_disease")});
}

TEST_CASE("entity level conflicts") {
  auto kb = testing::load_fixture("hepatitis.taxsnap");
  using nlp::EntityCategory;
  auto name = AccessLevel::ne_name(EntityCategory::kPerson);
  auto cat = AccessLevel::ne_category(EntityCategory::kPerson);
  CHECK(join(kb, {name, cat}) == cat);
  CHECK(join(kb, {name, name}) == name);
  CHECK(join(kb, {name, AccessLevel::null()}).is_null());
  CHECK_THROWS_AS(join(kb, {name, AccessLevel::ne_name(EntityCategory::kLocation)}), ConflictError);
  CHECK_THROWS_AS(join(kb, {name, nodes_of({"disease"})}), ConflictError);
}

TEST_CASE("conflict resolution laws on random taxonomies") {
  std::mt19937 rng(4242);
  int cases = 0;
  for (int round = 0; round < 40; ++round) {
    auto dag = testing::random_dag(rng, 30);
    auto kb = testing::load_text(dag.snapshot);
    auto random_level = [&] {
      if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return AccessLevel::null();
      kb::ConceptSet s;
      int n = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < n; ++i) s.insert(ConceptId(testing::node_name(std::uniform_int_distribution<int>(0, 29)(rng))));
      return AccessLevel::concept_nodes(s);
    };
    for (int k = 0; k < 5; ++k, ++cases) {
      auto a = random_level(), b = random_level(), c = random_level();
      CHECK(join(kb, {a, a}).fingerprint() == a.fingerprint());
      CHECK(join(kb, {a, b}).fingerprint() == join(kb, {b, a}).fingerprint());
      auto left = join(kb, {join(kb, {a, b}), c});
      auto right = join(kb, {a, join(kb, {b, c})});
      CHECK(left.fingerprint() == right.fingerprint());
      CHECK(left.fingerprint() == join(kb, {a, b, c}).fingerprint());
      // Comparable single nodes give the ancestor.
      if (!a.is_null() && !b.is_null() && a.nodes.size() == 1 && b.nodes.size() == 1) {
        const auto &x = *a.nodes.begin();
        const auto &y = *b.nodes.begin();
        if (kb.ancestors(y).contains(x)) CHECK(join(kb, {a, b}).nodes == a.nodes);
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("contact graph") {
  std::istringstream in("# owner contact category\nBob\tAlice\tclose friends\nBob\tCarl\tfamily friends\n");
  auto g = ContactGraph::load(in);
  CHECK(g.size() == 2);
  CHECK(g.category_of(UserId("Bob"), UserId("Alice")) == "close friends");
  CHECK(g.category_of(UserId("Bob"), UserId("Zed")) == "strangers");
  CHECK(g.category_of(UserId("Ann"), UserId("Alice")) == "strangers");
  g.add(UserId("Bob"), UserId("Alice"), "close friends");
  CHECK_THROWS_AS(g.add(UserId("Bob"), UserId("Alice"), "family friends"), ConflictError);
  std::istringstream again(g.to_tsv());
  CHECK(ContactGraph::load(again) == g);
  std::istringstream bad("Bob\tAlice\n");
  CHECK_THROWS_AS(ContactGraph::load(bad), ParseError);
  std::istringstream clash("a\tb\tx\na\tb\ty\n");
  CHECK_THROWS_AS(ContactGraph::load(clash), ParseError);
}

}  // namespace
}  // namespace taxsan
