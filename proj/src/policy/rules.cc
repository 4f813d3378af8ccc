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

#include "taxsan/policy/rules.h"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"

namespace taxsan::policy {
namespace {

using Json = nlohmann::ordered_json;

// Rejects objects that repeat a key; the parser would otherwise keep only
// the last value.
Json parse_strict(std::string_view text) {
  std::vector<std::set<std::string>> seen;
  std::string duplicate;
  auto cb = [&](int, Json::parse_event_t event, Json &parsed) {
    if (event == Json::parse_event_t::object_start) {
      seen.emplace_back();
    } else if (event == Json::parse_event_t::object_end) {
      seen.pop_back();
    } else if (event == Json::parse_event_t::key && !seen.empty()) {
      std::string k = parsed.get<std::string>();
      if (!seen.back().insert(k).second && duplicate.empty()) duplicate = k;
    }
    return true;
  };
  Json j;
  try {
    j = Json::parse(text, cb);
  } catch (const Json::parse_error &e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!duplicate.empty()) throw ConflictError("duplicate key in requirements: " + duplicate);
  return j;
}

AccessLevel level_for(const Topic &topic, const Json &value) {
  if (value.is_null()) return AccessLevel::null();
  std::vector<std::string> labels;
  if (value.is_string()) {
    labels.push_back(value.get<std::string>());
  } else if (value.is_array()) {
    for (const Json &v : value) {
      if (!v.is_string()) throw ValidationError("access level labels must be strings");
      labels.push_back(v.get<std::string>());
    }
  } else {
    throw ValidationError("access level must be a label, a list of labels or null");
  }
  if (labels.empty()) throw ValidationError("empty access level for topic " + topic.name);
  if (labels.size() == 1 && text::normalize_label(labels.front()) == "null") return AccessLevel::null();

  if (topic.kind == TopicKind::kConcept) return AccessLevel::concept_labels(std::move(labels));

  if (labels.size() != 1) throw ValidationError("entity topics take a single access level: " + topic.name);
  std::string want = text::normalize_label(labels.front());
  std::string word = text::to_lower(nlp::to_string(*topic.entity));
  if (want == word) return AccessLevel::ne_category(*topic.entity);
  if (want == word + " name") return AccessLevel::ne_name(*topic.entity);
  throw ValidationError("access level '" + labels.front() + "' does not apply to topic " + topic.name);
}

Json level_json(const AccessLevel &al) {
  Json j;
  j["kind"] = std::string(to_string(al.kind));
  if (al.kind == AccessKind::kConcept) {
    j["labels"] = al.labels;
    Json nodes = Json::array();
    for (const ConceptId &c : al.nodes) nodes.push_back(c.str());
    j["nodes"] = std::move(nodes);
  } else if (al.is_entity()) {
    j["entity"] = std::string(nlp::to_string(*al.entity));
  }
  return j;
}

AccessLevel level_from_json(const Json &j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "null") return AccessLevel::null();
  if (kind == "concept") {
    AccessLevel al = AccessLevel::concept_labels(j.at("labels").get<std::vector<std::string>>());
    if (j.contains("nodes")) {
      for (const Json &n : j.at("nodes")) al.nodes.emplace(n.get<std::string>());
    }
    if (al.labels.empty() && al.nodes.empty()) throw ValidationError("concept access level without labels");
    return al;
  }
  auto entity = nlp::parse_entity_category(j.at("entity").get<std::string>());
  if (!entity) throw ValidationError("unknown entity category in access level");
  if (kind == "ne-category") return AccessLevel::ne_category(*entity);
  if (kind == "ne-name") return AccessLevel::ne_name(*entity);
  throw ValidationError("unknown access level kind: " + kind);
}

}  // namespace

std::vector<RuleTuple> RuleSet::tuples() const {
  std::vector<RuleTuple> out;
  for (const PrivacyRule &r : rules) {
    if (r.al.kind == AccessKind::kConcept && !r.al.labels.empty()) {
      for (const std::string &l : r.al.labels) out.push_back({r.topic, r.category, l});
    } else {
      out.push_back({r.topic, r.category, r.al.display()});
    }
  }
  return out;
}

std::vector<std::string> RuleSet::scope_of(std::string_view topic) const {
  if (auto it = scopes.find(std::string(topic)); it != scopes.end()) return it->second;
  if (const Topic *t = TopicCatalog::system().find(topic)) return t->scope;
  return {};
}

RuleSet compile_requirements(std::string_view requirements_json, const TopicCatalog &catalog) {
  Json j = parse_strict(requirements_json);
  try {
    RuleSet rs;
    rs.publisher = UserId(j.at("publisher").get<std::string>());
    if (rs.publisher.empty()) throw ValidationError("publisher must not be empty");
    if (j.contains("categories")) {
      for (const Json &c : j.at("categories")) {
        std::string name = c.get<std::string>();
        if (name.empty()) throw ValidationError("empty contact category");
        if (std::find(rs.categories.begin(), rs.categories.end(), name) != rs.categories.end()) {
          throw ConflictError("duplicate contact category: " + name);
        }
        rs.categories.push_back(std::move(name));
      }
    }
    auto declared = [&](const std::string &cc) {
      return cc == kStrangers || std::find(rs.categories.begin(), rs.categories.end(), cc) != rs.categories.end();
    };

    // (topic, category) -> level, as stated.
    std::map<std::pair<std::string, std::string>, AccessLevel> stated;
    std::vector<std::string> stated_extra;  // "strangers" when used
    const Json topics = j.contains("topics") ? j.at("topics") : Json::array();
    for (const Json &jt : topics) {
      std::string st = jt.at("st").get<std::string>();
      const Topic *topic = catalog.find(st);
      if (!topic) throw ValidationError("unknown sensitive topic: " + st);
      if (std::find(rs.topics.begin(), rs.topics.end(), topic->name) == rs.topics.end()) {
        rs.topics.push_back(topic->name);
      }
      if (jt.contains("scope")) {
        if (topic->kind != TopicKind::kConcept) throw ValidationError("entity topics take no scope: " + st);
        rs.scopes[topic->name] = jt.at("scope").get<std::vector<std::string>>();
      }
      if (!jt.contains("levels")) continue;
      for (const auto &[cc, value] : jt.at("levels").items()) {
        if (!declared(cc)) throw ValidationError("undeclared contact category: " + cc);
        if (cc == kStrangers && std::find(stated_extra.begin(), stated_extra.end(), cc) == stated_extra.end()) {
          stated_extra.push_back(cc);
        }
        auto key = std::make_pair(topic->name, cc);
        if (stated.contains(key)) throw ConflictError("duplicate rule for (" + topic->name + ", " + cc + ")");
        stated.emplace(key, level_for(*topic, value));
      }
    }
    if (rs.topics.empty()) {
      for (const Topic &t : catalog.topics()) rs.topics.push_back(t.name);
    }

    std::vector<std::string> cats = rs.categories;
    for (const std::string &e : stated_extra) {
      if (std::find(cats.begin(), cats.end(), e) == cats.end()) cats.push_back(e);
    }
    for (const std::string &t : rs.topics) {
      for (const std::string &cc : cats) {
        auto it = stated.find({t, cc});
        rs.rules.push_back({t, cc, it == stated.end() ? AccessLevel::null() : it->second});
      }
    }
    return rs;
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("malformed requirements: ") + e.what());
  }
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const LabelCheck &c) { return c.status == LabelCheck::Status::kUnresolvable; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const LabelCheck &c : checks) {
    out << c.topic << '\t' << c.category << '\t' << c.label << '\t';
    switch (c.status) {
      case LabelCheck::Status::kResolved: out << "ok"; break;
      case LabelCheck::Status::kAmbiguous: out << "ambiguous"; break;
      case LabelCheck::Status::kUnresolvable: out << "unresolvable"; break;
    }
    out << '\t';
    for (std::size_t i = 0; i < c.nodes.size(); ++i) out << (i ? "," : "") << c.nodes[i].str();
    out << '\n';
  }
  return out.str();
}

ValidationReport validate_rules(const RuleSet &rules, const kb::KnowledgeBase &kb) {
  ValidationReport report;
  for (const PrivacyRule &r : rules.rules) {
    if (r.al.kind != AccessKind::kConcept) continue;
    for (const std::string &label : r.al.labels) {
      LabelCheck check{r.topic, r.category, label, LabelCheck::Status::kResolved, resolve_label(kb, label)};
      if (check.nodes.empty()) {
        check.status = LabelCheck::Status::kUnresolvable;
      } else if (check.nodes.size() > 1) {
        check.status = LabelCheck::Status::kAmbiguous;
      }
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

RuleSet resolve_rules(const RuleSet &rules, const kb::KnowledgeBase &kb) {
  RuleSet out = rules;
  for (PrivacyRule &r : out.rules) r.al = resolve(r.al, kb);
  return out;
}

std::vector<PrivacyRule> rule_for(const RuleSet &rules, std::string_view category) {
  bool known = category == kStrangers ||
               std::find(rules.categories.begin(), rules.categories.end(), category) != rules.categories.end();
  if (!known) throw NotFoundError("unknown contact category: " + std::string(category));
  std::vector<PrivacyRule> out;
  for (const std::string &t : rules.topics) {
    auto it = std::find_if(rules.rules.begin(), rules.rules.end(),
                           [&](const PrivacyRule &r) { return r.topic == t && r.category == category; });
    out.push_back(it != rules.rules.end() ? *it : PrivacyRule{t, std::string(category), AccessLevel::null()});
  }
  return out;
}

std::string to_json(const RuleSet &rules) {
  Json j;
  j["publisher"] = rules.publisher.str();
  j["categories"] = rules.categories;
  j["topics"] = rules.topics;
  Json scopes = Json::object();
  for (const auto &[t, labels] : rules.scopes) scopes[t] = labels;
  j["scopes"] = std::move(scopes);
  Json arr = Json::array();
  for (const PrivacyRule &r : rules.rules) {
    Json jr;
    jr["st"] = r.topic;
    jr["cc"] = r.category;
    jr["al"] = level_json(r.al);
    arr.push_back(std::move(jr));
  }
  j["rules"] = std::move(arr);
  return j.dump(2) + "\n";
}

RuleSet rules_from_json(std::string_view json) {
  Json j = parse_strict(json);
  try {
    RuleSet rs;
    rs.publisher = UserId(j.at("publisher").get<std::string>());
    rs.categories = j.at("categories").get<std::vector<std::string>>();
    rs.topics = j.at("topics").get<std::vector<std::string>>();
    if (j.contains("scopes")) {
      for (const auto &[t, labels] : j.at("scopes").items()) rs.scopes[t] = labels.get<std::vector<std::string>>();
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const Json &jr : j.at("rules")) {
      PrivacyRule r{jr.at("st").get<std::string>(), jr.at("cc").get<std::string>(), level_from_json(jr.at("al"))};
      if (!seen.emplace(r.topic, r.category).second) {
        throw ConflictError("duplicate rule for (" + r.topic + ", " + r.category + ")");
      }
      rs.rules.push_back(std::move(r));
    }
    return rs;
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("malformed rule set: ") + e.what());
  }
}

}  // namespace taxsan::policy
