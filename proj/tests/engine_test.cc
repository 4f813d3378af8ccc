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
#include <thread>

#include "taxsan/annotate/annotator.h"
#include "taxsan/common/errors.h"
#include "taxsan/engine/monitor.h"
#include "taxsan/engine/sanitizer.h"
#include "taxsan/policy/contact_graph.h"
#include "taxsan/policy/rules.h"
#include "taxsan/store/repository.h"
#include "synthetic.h"
#include "test_support.h"

namespace taxsan {
namespace {

using namespace engine;
using policy::AccessLevel;

const char *kSample =
    "Dealing with Hiv and then being told that you suffer from AIDS is almost the hardest thing to face with in "
    "life. The hardest thing is dealing with the virus because there are people that just do not understand and "
    "think that you are a leper.";
const char *kFollowersView =
    "Dealing with infection and then being told that you suffer from infectious disease is almost the hardest "
    "thing to face with in life. The hardest thing is dealing with the virus because there are people that just do "
    "not understand and think that you are a infectious disease.";
const char *kRegisteredView =
    "Dealing with ill health and then being told that you suffer from ill health is almost the hardest thing to "
    "face with in life. The hardest thing is dealing with the virus because there are people that just do not "
    "understand and think that you are a ill health.";

struct SampleInNetwork {
  kb::TaxonomyStore kb = testing::load_fixture("health_network.taxsnap");
  annotate::AnnotatedMessage message = annotate::annotate_message(
      {MessageId("sample"), UserId("patient"), {}, kSample}, kb, testing::default_analyzer());

  AccessLevel level(std::vector<std::string> labels) {
    return policy::resolve(AccessLevel::concept_labels(std::move(labels)), kb);
  }
};

std::vector<std::string> surfaces(const std::vector<SensitiveOccurrence> &os) {
  std::vector<std::string> out;
  for (const auto &o : os) out.push_back(o.surface);
  return out;
}

TEST_CASE("sensitive terms under Infections and ill health") {
  SampleInNetwork f;
  auto inf = assess_sensitivity(f.message, single_level(f.level({"Infections"})), f.kb);
  CHECK(surfaces(inf) == std::vector<std::string>{"Hiv", "AIDS", "leper"});
  CHECK(inf[0].replacement == "infection");
  CHECK(inf[0].generalization == ConceptId("infection"));
  CHECK(inf[1].replacement == "infectious disease");
  CHECK(inf[2].replacement == "infectious disease");
  CHECK(inf[0].rule == "Infections");

  auto ill = assess_sensitivity(f.message, single_level(f.level({"ill health"})), f.kb);
  CHECK(surfaces(ill) == std::vector<std::string>{"Hiv", "AIDS", "leper"});
  for (const auto &o : ill) CHECK(o.replacement == "ill health");
}

TEST_CASE("followers and registered users views") {
  SampleInNetwork f;
  CHECK(sanitize(f.message, f.level({"Infections"}), f.kb).text == kFollowersView);
  CHECK(sanitize(f.message, f.level({"ill health"}), f.kb).text == kRegisteredView);
  CHECK(sanitize(f.message, f.level({"HIV", "AIDS", "Hepatitis", "STDs"}), f.kb).text == kSample);
}

TEST_CASE("null level withholds annotated phrases") {
  SampleInNetwork f;
  auto s = sanitize(f.message, AccessLevel::null(), f.kb);
  CHECK(s.substitutions.size() == 6);
  CHECK(s.text.find("thing") != std::string::npos);
  CHECK(s.text.find("virus") == std::string::npos);
  CHECK(s.text.rfind("Dealing with [withheld] and", 0) == 0);

  TopicLevel scoped;
  scoped.topic = "medical health";
  scoped.al = AccessLevel::null();
  scoped.scope = {ConceptId("health")};
  auto t = sanitize(f.message, EffectivePolicy{{scoped}}, f.kb);
  CHECK(t.substitutions.size() == 3);
  CHECK(t.text.find("virus") != std::string::npos);
}

TEST_CASE("entity levels") {
  auto kb = testing::load_fixture("health_senses.taxsnap");
  auto m = annotate::annotate_message({MessageId("e"), UserId("u"), {}, "Carol met Dave in Paris on 4 July 2020."},
                                      kb, testing::default_analyzer());
  using nlp::EntityCategory;
  CHECK(sanitize(m, AccessLevel::ne_category(EntityCategory::kPerson), kb).text ==
        "a person met a person in Paris on 4 July 2020.");
  CHECK(sanitize(m, AccessLevel::ne_category(EntityCategory::kLocation), kb).text ==
        "Carol met Dave in a location on 4 July 2020.");
  CHECK(sanitize(m, AccessLevel::ne_name(EntityCategory::kPerson), kb).text == m.text);

  TopicLevel date;
  date.topic = "NE_date";
  date.al = AccessLevel::null();
  date.entity = EntityCategory::kDate;
  TopicLevel person;
  person.topic = "NE_person";
  person.al = AccessLevel::ne_category(EntityCategory::kPerson);
  person.entity = EntityCategory::kPerson;
  auto s = sanitize(m, EffectivePolicy{{date, person}}, kb);
  CHECK(s.text == "a person met a person in Paris on [withheld].");
  CHECK(s.substitutions.back().topic == "NE_date");
  CHECK(entity_placeholder(EntityCategory::kOrganization) == "an organization");
  CHECK(entity_placeholder(EntityCategory::kMoney) == "an amount");
}

TEST_CASE("withholding beats generalization across topics") {
  SampleInNetwork f;
  TopicLevel a;
  a.topic = "medical health";
  a.al = f.level({"Infections"});
  TopicLevel b;
  b.topic = "other";
  b.al = f.level({"ill health"});
  auto both = assess_sensitivity(f.message, EffectivePolicy{{a, b}}, f.kb);
  for (const auto &o : both) CHECK(o.replacement == "ill health");
  TopicLevel n;
  n.topic = "null";
  n.al = AccessLevel::null();
  n.scope = {ConceptId("AIDS")};
  auto w = assess_sensitivity(f.message, EffectivePolicy{{a, n}}, f.kb);
  CHECK(w[1].replacement == kWithheld);
  CHECK(w[0].replacement == "infection");
}

TEST_CASE("membership checks are counted per distinct sense and level node") {
  SampleInNetwork f;
  SensitivityCounters c;
  auto al = f.level({"Infections"});
  assess_sensitivity(f.message, single_level(al), f.kb, &c);
  CHECK(c.branch_queries == al.nodes.size());
  std::set<ConceptId> senses;
  for (const auto &p : f.message.phrases) {
    if (p.chosen) senses.insert(*p.chosen);
  }
  CHECK(c.membership_checks == senses.size() * al.nodes.size());
}

TEST_CASE("unresolved levels are rejected") {
  SampleInNetwork f;
  CHECK_THROWS_AS(assess_sensitivity(f.message, single_level(AccessLevel::concept_labels({"x"})), f.kb),
                  ConfigurationError);
}

TEST_CASE("substitution ledger") {
  SampleInNetwork f;
  auto s = sanitize(f.message, f.level({"Infections"}), f.kb);
  CHECK(apply_substitutions(f.message.text, s.substitutions) == s.text);
  CHECK(s.ledger_tsv().rfind("start\tend\toriginal\treplacement\ttopic\trule\n13\t16\tHiv\tinfection\t*\tInfections\n",
                             0) == 0);
  CHECK(s.cache_key.rfind("sample|", 0) == 0);
  std::vector<Substitution> overlapping{{{0, 5}, "", "x", "", ""}, {{3, 6}, "", "y", "", ""}};
  CHECK_THROWS_AS(apply_substitutions("abcdefg", overlapping), Error);
  std::vector<Substitution> beyond{{{5, 9}, "", "x", "", ""}};
  CHECK_THROWS_AS(apply_substitutions("abc", beyond), Error);
}

// Health network held in memory.
struct Network {
  kb::TaxonomyStore kb = testing::load_fixture("health_network.taxsnap");
  store::MemoryRepository repo;
  Network() {
    repo.put_annotated(annotate::annotate_message({MessageId("sample"), UserId("patient"), {}, kSample}, kb,
                                                  testing::default_analyzer()));
    repo.put_rules(policy::compile_requirements(testing::read_file(testing::fixture("health_requirements.json"))));
    repo.set_contacts(policy::ContactGraph::load(testing::fixture("health_contacts.tsv")));
  }
};

TEST_CASE("monitor serves each category its version") {
  Network n;
  Monitor monitor(n.kb, n.repo);
  auto read = [&](const char *reader) { return monitor.handle_access({UserId(reader), MessageId("sample")}).text; };
  CHECK(read("frank") == kFollowersView);
  CHECK(read("rita") == kRegisteredView);
  CHECK(read("carol") == kSample);
  CHECK(read("patient") == kSample);
  std::string stranger = read("mallory");
  CHECK(stranger.find("Hiv") == std::string::npos);
  CHECK(stranger.find("[withheld]") != std::string::npos);
  CHECK_THROWS_AS(monitor.handle_access({UserId("frank"), MessageId("missing")}), NotFoundError);
}

TEST_CASE("cached versions are shared and identical") {
  Network n;
  Monitor monitor(n.kb, n.repo);
  auto first = monitor.handle_access({UserId("carol"), MessageId("sample")});
  auto branch_before = n.kb.branch_query_count();
  auto second = monitor.handle_access({UserId("carol"), MessageId("sample")});
  CHECK(second == first);
  CHECK(n.kb.branch_query_count() == branch_before);
  auto stats = monitor.stats();
  CHECK(stats.requests == 2);
  CHECK(stats.cache_hits == 1);
  CHECK(stats.cache_misses == 1);
  monitor.handle_access({UserId("mallory"), MessageId("sample")});
  monitor.handle_access({UserId("trudy"), MessageId("sample")});
  CHECK(monitor.cache_size() == 2);
  monitor.clear_cache();
  CHECK(monitor.cache_size() == 0);
  CHECK(monitor.handle_access({UserId("carol"), MessageId("sample")}) == first);
}

TEST_CASE("concurrent requests") {
  Network n;
  Monitor monitor(n.kb, n.repo);
  const char *readers[] = {"frank", "rita", "carol", "mallory"};
  std::vector<std::string> expect;
  for (const char *r : readers) expect.push_back(sanitize(n.repo.get_annotated(MessageId("sample")),
                                                          effective_policy(n.repo.get_annotated(MessageId("sample")),
                                                                           UserId(r), n.repo, n.kb),
                                                          n.kb)
                                                     .text);
  std::vector<std::thread> pool;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) {
        int k = (t + i) % 4;
        if (monitor.handle_access({UserId(readers[k]), MessageId("sample")}).text != expect[k]) ++mismatches;
      }
    });
  }
  for (auto &th : pool) th.join();
  CHECK(mismatches == 0);
  CHECK(monitor.cache_size() == 4);
}

// Bob publishes with Ted tagged.
struct TwoParties {
  kb::TaxonomyStore kb = testing::load_fixture("hepatitis.taxsnap");
  store::MemoryRepository repo;
  TwoParties(bool alice_close_to_bob) {
    repo.put_annotated(annotate::annotate_message(
        {MessageId("m"), UserId("Bob"), {UserId("Ted")}, "Ted has hepatitis and cirrhosis, not influenza."}, kb,
        testing::default_analyzer()));
    repo.put_rules(policy::compile_requirements(R"({"publisher":"Bob","categories":["close friends"],
        "topics":[{"st":"medical health","levels":{"close friends":"disease","strangers":"illness"}}]})"));
    repo.put_rules(policy::compile_requirements(R"({"publisher":"Ted","categories":["close friends"],
        "topics":[{"st":"medical health","levels":{"close friends":"liver disease","strangers":"illness"}}]})"));
    policy::ContactGraph g;
    if (alice_close_to_bob) g.add(UserId("Bob"), UserId("Alice"), "close friends");
    g.add(UserId("Ted"), UserId("Alice"), "close friends");
    repo.set_contacts(g);
  }
};

TEST_CASE("two parties, both close friends") {
  TwoParties p(true);
  auto policy = effective_policy(p.repo.get_annotated(MessageId("m")), UserId("Alice"), p.repo, p.kb);
  REQUIRE(policy.levels.size() == 1);
  CHECK(policy.levels[0].al.nodes == kb::ConceptSet{ConceptId("disease")});
  Monitor monitor(p.kb, p.repo);
  CHECK(monitor.handle_access({UserId("Alice"), MessageId("m")}).text == "Ted has disease and disease, not disease.");
}

TEST_CASE("two parties, one stranger") {
  TwoParties p(false);
  auto policy = effective_policy(p.repo.get_annotated(MessageId("m")), UserId("Alice"), p.repo, p.kb);
  REQUIRE(policy.levels.size() == 1);
  CHECK(policy.levels[0].al.nodes == kb::ConceptSet{ConceptId("illness")});
  // A party reading its own publication is bound by the other party only.
  auto ted = effective_policy(p.repo.get_annotated(MessageId("m")), UserId("Ted"), p.repo, p.kb);
  CHECK(ted.levels[0].al.nodes == kb::ConceptSet{ConceptId("illness")});
}

TEST_CASE("parties without rules impose nothing") {
  store::MemoryRepository repo;
  auto kb = testing::load_fixture("hepatitis.taxsnap");
  repo.put_annotated(annotate::annotate_message({MessageId("m"), UserId("Zoe"), {}, "Hepatitis again."}, kb,
                                                testing::default_analyzer()));
  CHECK(effective_policy(repo.get_annotated(MessageId("m")), UserId("x"), repo, kb).levels.empty());
  Monitor monitor(kb, repo);
  CHECK(monitor.handle_access({UserId("x"), MessageId("m")}).text == "Hepatitis again.");
}

struct RandomWorld {
  kb::TaxonomyStore kb;
  std::mt19937 &rng;
  RandomWorld(std::mt19937 &r) : kb(testing::load_text(testing::random_dag(r, 30).snapshot)), rng(r) {}
  AccessLevel random_level() {
    kb::ConceptSet s;
    int n = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < n; ++i) s.insert(ConceptId(testing::node_name(std::uniform_int_distribution<int>(0, 29)(rng))));
    return AccessLevel::concept_nodes(s);
  }
};

TEST_CASE("soundness and idempotence on generated messages") {
  std::mt19937 rng(77);
  int cases = 0;
  for (int round = 0; round < 40; ++round) {
    RandomWorld w(rng);
    for (int k = 0; k < 5; ++k, ++cases) {
      auto m = testing::random_message(rng, 30, "r");
      auto al = w.random_level();
      auto occ = assess_sensitivity(m, single_level(al), w.kb);
      auto s = sanitize(m, al, w.kb);
      // No phrase left in the output has a sense strictly below a level node.
      auto again = as_annotated(m, s, occ);
      CHECK(again.text == s.text);
      for (const auto &p : again.phrases) {
        CHECK(again.text.substr(p.phrase.span.start, p.phrase.span.size()) == p.phrase.surface);
        if (!p.chosen) continue;
        for (const auto &n : al.nodes) CHECK_FALSE((w.kb.branch(n).contains(*p.chosen) && !al.nodes.contains(*p.chosen)));
      }
      auto twice = sanitize(again, al, w.kb);
      CHECK(twice.text == s.text);
      CHECK(twice.substitutions.empty());
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("monotonicity on generated messages") {
  std::mt19937 rng(78);
  int cases = 0;
  for (int round = 0; round < 40; ++round) {
    RandomWorld w(rng);
    for (int k = 0; k < 5; ++k, ++cases) {
      auto m = testing::random_message(rng, 30, "r");
      ConceptId low(testing::node_name(std::uniform_int_distribution<int>(0, 29)(rng)));
      auto ups = w.kb.ancestors(low);
      ConceptId high = *std::next(ups.begin(), std::uniform_int_distribution<std::size_t>(0, ups.size() - 1)(rng));
      auto spans = [&](const ConceptId &c) {
        std::set<nlp::Span> out;
        for (const auto &o : assess_sensitivity(m, single_level(AccessLevel::concept_nodes({c})), w.kb)) {
          out.insert(o.span);
        }
        return out;
      };
      auto a = spans(high), b = spans(low);
      CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
  CHECK(cases >= 100);
}

}  // namespace
}  // namespace taxsan
