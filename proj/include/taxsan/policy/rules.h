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

#ifndef TAXSAN_POLICY_RULES_H_
#define TAXSAN_POLICY_RULES_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/common/ids.h"
#include "taxsan/kb/knowledge_base.h"
#include "taxsan/policy/access_level.h"
#include "taxsan/policy/topics.h"

namespace taxsan::policy {

// Built-in category for readers with no contact edge to the owner.
inline constexpr std::string_view kStrangers = "strangers";

struct PrivacyRule {
  std::string topic;
  std::string category;
  AccessLevel al;

  friend bool operator==(const PrivacyRule &, const PrivacyRule &) = default;
};

// One label per tuple; a multi-label level yields several tuples.
struct RuleTuple {
  std::string topic;
  std::string category;
  std::string al;

  friend bool operator==(const RuleTuple &, const RuleTuple &) = default;
};

struct RuleSet {
  UserId publisher;
  std::vector<std::string> categories;
  std::vector<std::string> topics;
  // Per-topic scope labels replacing the catalog defaults.
  std::map<std::string, std::vector<std::string>> scopes;
  // One rule per (topic, category), ordered by topic then category as
  // declared.
  std::vector<PrivacyRule> rules;

  std::vector<RuleTuple> tuples() const;
  // Scope labels for a topic: override if present, else catalog default.
  std::vector<std::string> scope_of(std::string_view topic) const;

  friend bool operator==(const RuleSet &, const RuleSet &) = default;
};

// Parses a requirements document
//   {"publisher": ..., "categories": [...],
//    "topics": [{"st": ..., "scope": [...], "levels": {cc: label | [labels] | null}}]}
// Unstated (topic, category) pairs become NULL rules. An absent or empty
// topic list covers every system topic.
RuleSet compile_requirements(std::string_view requirements_json,
                             const TopicCatalog &catalog = TopicCatalog::system());

struct LabelCheck {
  enum class Status { kResolved, kAmbiguous, kUnresolvable };
  std::string topic;
  std::string category;
  std::string label;
  Status status = Status::kResolved;
  std::vector<ConceptId> nodes;
};

struct ValidationReport {
  std::vector<LabelCheck> checks;

  bool ok() const;
  std::string to_text() const;
};

ValidationReport validate_rules(const RuleSet &rules, const kb::KnowledgeBase &kb);

// Copy with every concept level resolved. Throws ConfigurationError on
// unresolvable labels.
RuleSet resolve_rules(const RuleSet &rules, const kb::KnowledgeBase &kb);

// The rule per topic for a reader category, NULL where none was stated.
// Throws NotFoundError for categories that are neither declared nor
// strangers.
std::vector<PrivacyRule> rule_for(const RuleSet &rules, std::string_view category);

std::string to_json(const RuleSet &rules);
RuleSet rules_from_json(std::string_view json);

}  // namespace taxsan::policy

#endif  // TAXSAN_POLICY_RULES_H_
