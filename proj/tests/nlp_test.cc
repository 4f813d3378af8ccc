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
#include "taxsan/common/text.h"
#include "taxsan/nlp/lexicon.h"
#include "taxsan/nlp/pipeline.h"
#include "test_support.h"

namespace taxsan {
namespace {

using namespace nlp;

const char *kSample =
    "Dealing with Hiv and then being told that you suffer from AIDS is almost the hardest thing to face with in "
    "life. The hardest thing is dealing with the virus because there are people that just do not understand and "
    "think that you are a leper.";

std::vector<std::string> texts(const std::vector<Token> &ts) {
  std::vector<std::string> out;
  for (const auto &t : ts) out.push_back(t.text);
  return out;
}

std::vector<std::string> surfaces(const std::vector<NounPhrase> &ps) {
  std::vector<std::string> out;
  for (const auto &p : ps) out.push_back(p.surface);
  return out;
}

TEST_CASE("tokenizer") {
  auto ts = tokenize(kSample);
  REQUIRE(ts.size() > 4);
  auto words = texts(ts);
  CHECK(std::vector<std::string>(words.begin(), words.begin() + 4) ==
        std::vector<std::string>{"Dealing", "with", "Hiv", "and"});
  CHECK(texts(tokenize("a,b")) == std::vector<std::string>{"a", ",", "b"});
  CHECK(texts(tokenize("don't re-enter 3.5 1,000 12:30 and/or")) ==
        std::vector<std::string>{"don't", "re-enter", "3.5", "1,000", "12:30", "and/or"});
  CHECK(texts(tokenize("end. (x)")) == std::vector<std::string>{"end", ".", "(", "x", ")"});
  auto two = tokenize("One. Two! Three");
  CHECK(two[0].sentence == 0);
  CHECK(two[2].sentence == 1);
  CHECK(two[4].sentence == 2);
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \n\t ").empty());
}

TEST_CASE("token spans are ordered, disjoint and cover every non-space byte") {
  std::mt19937 rng(7);
  const std::string alphabet = "ab Z9.,;'-/:!?é\t";
  for (int round = 0; round < 200; ++round) {
    std::string s;
    int len = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < len; ++i) s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    auto ts = tokenize(s);
    std::vector<bool> covered(s.size(), false);
    std::size_t prev_end = 0;
    for (const auto &t : ts) {
      REQUIRE(t.span.start >= prev_end);
      REQUIRE(t.span.end > t.span.start);
      CHECK(s.substr(t.span.start, t.span.size()) == t.text);
      for (std::size_t i = t.span.start; i < t.span.end; ++i) covered[i] = true;
      prev_end = t.span.end;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool space = s[i] == ' ' || s[i] == '\t';
      CHECK(covered[i] != space);
    }
  }
}

TEST_CASE("gazetteer entities") {
  Gazetteer g;
  g.add("Bob", EntityCategory::kPerson);
  g.add("Berlin", EntityCategory::kLocation);
  std::string text = "Bob lives in Berlin";
  auto ts = tokenize(text);
  auto es = recognize_entities(ts, g, text);
  REQUIRE(es.size() == 2);
  CHECK(es[0].category == EntityCategory::kPerson);
  CHECK(es[0].surface == "Bob");
  CHECK(es[1].category == EntityCategory::kLocation);
  CHECK(es[1].surface == "Berlin");
}

TEST_CASE("pattern entities") {
  Gazetteer g;
  std::string text = "50% on 4 July 2020";
  auto ts = tokenize(text);
  auto es = recognize_entities(ts, g, text);
  REQUIRE(es.size() == 2);
  CHECK(es[0].category == EntityCategory::kPercent);
  CHECK(es[0].surface == "50%");
  CHECK(es[1].category == EntityCategory::kDate);
  CHECK(es[1].surface == "4 July 2020");

  auto one = [&](const std::string &s) {
    auto t = tokenize(s);
    auto e = recognize_entities(t, g, s);
    REQUIRE(e.size() == 1);
    return std::make_pair(e[0].category, e[0].surface);
  };
  CHECK(one("paid $250 yesterday") == std::make_pair(EntityCategory::kMoney, std::string("$250")));
  CHECK(one("cost 3 million euros") == std::make_pair(EntityCategory::kMoney, std::string("3 million euros")));
  CHECK(one("meet at 10:30 am") == std::make_pair(EntityCategory::kTime, std::string("10:30 am")));
  CHECK(one("on 2020-07-04") == std::make_pair(EntityCategory::kDate, std::string("2020-07-04")));
  CHECK(one("since March 3, 2021") == std::make_pair(EntityCategory::kDate, std::string("March 3, 2021")));
  CHECK(one("ask Dr. Jane Smith") == std::make_pair(EntityCategory::kPerson, std::string("Dr. Jane Smith")));
  CHECK(one("at Acme Widgets Ltd today") ==
        std::make_pair(EntityCategory::kOrganization, std::string("Acme Widgets Ltd")));
  CHECK(one("up 12 percent") == std::make_pair(EntityCategory::kPercent, std::string("12 percent")));
}

TEST_CASE("entities are masked") {
  std::string text = "Carol met Dave in Paris.";
  const auto &a = testing::default_analyzer();
  auto r = a.analyze(text);
  CHECK(r.entities.size() == 3);
  for (const auto &e : r.entities) {
    for (std::size_t i = e.tokens.first; i < e.tokens.last; ++i) CHECK(r.tokens[i].masked);
  }
  CHECK(r.phrases.empty());
}

TEST_CASE("sample sentence tagging") {
  auto r = testing::default_analyzer().analyze(kSample);
  std::map<std::string, PosTag> tag;
  for (const auto &t : r.tokens) tag[t.text] = t.pos;
  CHECK(tag["thing"] == PosTag::kNN);
  CHECK(tag["life"] == PosTag::kNN);
  CHECK(tag["virus"] == PosTag::kNN);
  CHECK(tag["people"] == PosTag::kNNS);
  CHECK(tag["leper"] == PosTag::kNN);
  CHECK(tag["Hiv"] == PosTag::kNNP);
  CHECK(tag["AIDS"] == PosTag::kNNP);
  CHECK(tag["hardest"] == PosTag::kOther);
  CHECK(tag["dealing"] == PosTag::kOther);
}

TEST_CASE("plural of a known noun") {
  Lexicon lex;
  lex.add("apple", PosTag::kNN);
  auto ts = pos_tag(tokenize("apples and pears"), lex);
  CHECK(ts[0].pos == PosTag::kNNS);
  CHECK(ts[2].pos == PosTag::kOther);
  CHECK(normalize_head("Apples", lex) == "apple");
  lex.add("berry", PosTag::kNN);
  CHECK(normalize_head("berries", lex) == "berry");
  CHECK(normalize_head("news", lex) == "news");
  lex.add("bus", PosTag::kNN);
  CHECK(normalize_head("buses", lex) == "bus");
  CHECK(pos_tag(tokenize("the creation of happiness"), lex)[1].pos == PosTag::kNN);
}

TEST_CASE("sample sentence noun phrases") {
  auto r = testing::default_analyzer().analyze(kSample);
  CHECK(surfaces(r.phrases) ==
        std::vector<std::string>{"Hiv", "AIDS", "thing", "life", "thing", "virus", "people", "leper"});
  std::set<std::string> keys;
  for (const auto &p : r.phrases) keys.insert(p.key);
  CHECK(keys == std::set<std::string>{"hiv", "aids", "thing", "life", "virus", "people", "leper"});
}

TEST_CASE("compound chunk") {
  auto r = testing::default_analyzer().analyze("Her liver disease worsened.");
  REQUIRE(r.phrases.size() == 1);
  CHECK(r.phrases[0].surface == "liver disease");
  CHECK(r.phrases[0].head == "disease");
  CHECK(r.phrases[0].key == "liver disease");
  auto s = testing::default_analyzer().analyze("The virus. Life goes on.");
  CHECK(surfaces(s.phrases) == std::vector<std::string>{"virus", "Life"});
}

TEST_CASE("lexicon and gazetteer files") {
  std::istringstream lex_in("# comment\napple\tNN\nPeople\tNNS\n\n");
  auto lex = Lexicon::load(lex_in);
  CHECK(lex.size() == 2);
  CHECK(lex.find("people") == PosTag::kNNS);
  std::istringstream bad_lex("apple\tVB\n");
  CHECK_THROWS_AS(Lexicon::load(bad_lex), ParseError);
  std::istringstream gaz_in("New York\tLocation\n");
  auto gaz = Gazetteer::load(gaz_in);
  CHECK(gaz.size() == 1);
  std::istringstream bad_gaz("X\tPlanet\n");
  CHECK_THROWS_AS(Gazetteer::load(bad_gaz), ParseError);
}

TEST_CASE("analysis invariants on generated sentences") {
  const std::vector<std::string> words = {"Bob",    "met",   "Alice", "in",     "Paris",  "on",    "4",
                                          "July",   "2020",  "the",   "virus",  "people", "life",  "thing",
                                          "health", "paid",  "$",     "20",     "apples", "and",   "."};
  const auto &a = testing::default_analyzer();
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    std::string text;
    int n = std::uniform_int_distribution<int>(1, 15)(rng);
    for (int i = 0; i < n; ++i) {
      if (i) text += ' ';
      text += words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
    }
    auto r = a.analyze(text);
    CHECK(r.tokens == a.analyze(text).tokens);
    for (const auto &p : r.phrases) {
      CHECK_FALSE(p.head.empty());
      CHECK(text.substr(p.span.start, p.span.size()) == p.surface);
      CHECK(text::to_lower(p.surface).find(p.head.substr(0, p.head.size() - 1)) != std::string::npos);
      for (const auto &e : r.entities) CHECK_FALSE(p.span.overlaps(e.span));
    }
    for (std::size_t i = 1; i < r.entities.size(); ++i) CHECK(r.entities[i - 1].span.end <= r.entities[i].span.start);
  }
}

}  // namespace
}  // namespace taxsan
