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

#include "taxsan/annotate/annotated_message.h"

#include <json.hpp>

#include "taxsan/common/errors.h"

namespace taxsan::annotate {
namespace {

using Json = nlohmann::ordered_json;

Json pair_json(std::size_t a, std::size_t b) { return Json::array({a, b}); }

template <typename T>
T read_pair(const Json &j) {
  if (!j.is_array() || j.size() != 2) throw ValidationError("expected a [start, end] pair");
  return T{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

Json users_json(const std::vector<UserId> &users) {
  Json arr = Json::array();
  for (const UserId &u : users) arr.push_back(u.str());
  return arr;
}

std::vector<UserId> read_users(const Json &j) {
  std::vector<UserId> out;
  for (const Json &u : j) out.emplace_back(u.get<std::string>());
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto guarded(F &&f) {
  try {
    return f();
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("malformed message record: ") + e.what());
  }
}

}  // namespace

std::string to_json(const AnnotatedMessage &m) {
  Json j;
  j["message_id"] = m.id.str();
  j["publisher"] = m.publisher.str();
  j["co_publishers"] = users_json(m.co_publishers);
  j["text"] = m.text;

  Json entities = Json::array();
  for (const nlp::NamedEntity &e : m.entities) {
    Json je;
    je["tokens"] = pair_json(e.tokens.first, e.tokens.last);
    je["span"] = pair_json(e.span.start, e.span.end);
    je["category"] = std::string(nlp::to_string(e.category));
    je["surface"] = e.surface;
    entities.push_back(std::move(je));
  }
  j["entities"] = std::move(entities);

  Json phrases = Json::array();
  for (const AnnotatedPhrase &p : m.phrases) {
    Json jp;
    jp["tokens"] = pair_json(p.phrase.tokens.first, p.phrase.tokens.last);
    jp["span"] = pair_json(p.phrase.span.start, p.phrase.span.end);
    jp["surface"] = p.phrase.surface;
    jp["head"] = p.phrase.head;
    jp["key"] = p.phrase.key;
    Json candidates = Json::array();
    for (const ConceptId &c : p.candidates) candidates.push_back(c.str());
    jp["candidates"] = std::move(candidates);
    jp["chosen"] = p.chosen ? Json(p.chosen->str()) : Json(nullptr);
    phrases.push_back(std::move(jp));
  }
  j["phrases"] = std::move(phrases);

  Json tokens = Json::array();
  for (const nlp::Token &t : m.tokens) {
    Json jt;
    jt["text"] = t.text;
    jt["span"] = pair_json(t.span.start, t.span.end);
    jt["pos"] = std::string(nlp::to_string(t.pos));
    jt["sentence"] = t.sentence;
    jt["masked"] = t.masked;
    tokens.push_back(std::move(jt));
  }
  j["tokens"] = std::move(tokens);
  return j.dump(2) + "\n";
}

AnnotatedMessage annotated_from_json(std::string_view json) {
  Json j = parse(json);
  return guarded([&] {
    AnnotatedMessage m;
    m.id = MessageId(j.at("message_id").get<std::string>());
    m.publisher = UserId(j.at("publisher").get<std::string>());
    m.co_publishers = read_users(j.at("co_publishers"));
    m.text = j.at("text").get<std::string>();
    for (const Json &je : j.at("entities")) {
      nlp::NamedEntity e;
      e.tokens = read_pair<nlp::TokenRange>(je.at("tokens"));
      e.span = read_pair<nlp::Span>(je.at("span"));
      auto cat = nlp::parse_entity_category(je.at("category").get<std::string>());
      if (!cat) throw ValidationError("unknown entity category");
      e.category = *cat;
      e.surface = je.at("surface").get<std::string>();
      m.entities.push_back(std::move(e));
    }
    for (const Json &jp : j.at("phrases")) {
      AnnotatedPhrase p;
      p.phrase.tokens = read_pair<nlp::TokenRange>(jp.at("tokens"));
      p.phrase.span = read_pair<nlp::Span>(jp.at("span"));
      p.phrase.surface = jp.at("surface").get<std::string>();
      p.phrase.head = jp.at("head").get<std::string>();
      p.phrase.key = jp.at("key").get<std::string>();
      for (const Json &c : jp.at("candidates")) p.candidates.emplace_back(c.get<std::string>());
      if (!jp.at("chosen").is_null()) p.chosen = ConceptId(jp.at("chosen").get<std::string>());
      if (p.chosen && std::find(p.candidates.begin(), p.candidates.end(), *p.chosen) == p.candidates.end()) {
        throw ValidationError("chosen sense is not among the candidates: " + p.chosen->str());
      }
      if (!p.chosen && !p.candidates.empty()) throw ValidationError("phrase with candidates but no chosen sense");
      m.phrases.push_back(std::move(p));
    }
    for (const Json &jt : j.at("tokens")) {
      nlp::Token t;
      t.text = jt.at("text").get<std::string>();
      t.span = read_pair<nlp::Span>(jt.at("span"));
      auto pos = nlp::parse_pos_tag(jt.at("pos").get<std::string>());
      if (!pos) throw ValidationError("unknown POS tag");
      t.pos = *pos;
      t.sentence = jt.at("sentence").get<std::size_t>();
      t.masked = jt.at("masked").get<bool>();
      m.tokens.push_back(std::move(t));
    }
    return m;
  });
}

std::string to_json(const RawMessage &m) {
  Json j;
  j["message_id"] = m.id.str();
  j["publisher"] = m.publisher.str();
  j["co_publishers"] = users_json(m.co_publishers);
  j["text"] = m.text;
  return j.dump(2) + "\n";
}

RawMessage raw_message_from_json(std::string_view json) {
  Json j = parse(json);
  return guarded([&] {
    RawMessage m;
    m.id = MessageId(j.at("message_id").get<std::string>());
    m.publisher = UserId(j.at("publisher").get<std::string>());
    if (j.contains("co_publishers")) m.co_publishers = read_users(j.at("co_publishers"));
    m.text = j.at("text").get<std::string>();
    if (m.id.empty()) throw ValidationError("message_id must not be empty");
    if (m.publisher.empty()) throw ValidationError("publisher must not be empty");
    return m;
  });
}

}  // namespace taxsan::annotate
