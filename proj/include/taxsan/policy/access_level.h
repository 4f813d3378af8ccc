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

#ifndef TAXSAN_POLICY_ACCESS_LEVEL_H_
#define TAXSAN_POLICY_ACCESS_LEVEL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/kb/knowledge_base.h"
#include "taxsan/nlp/types.h"

namespace taxsan::policy {

enum class AccessKind {
  kConcept,     // generalize to the nearest node of `nodes`
  kNeCategory,  // replace entities by their category placeholder
  kNull,        // disclose nothing
  kNeName,      // disclose entity names
};

std::string_view to_string(AccessKind k);

struct AccessLevel {
  AccessKind kind = AccessKind::kNull;
  // Labels as written by the user (concept kind), in input order.
  std::vector<std::string> labels;
  // Resolved taxonomy nodes (concept kind); empty until resolved.
  kb::ConceptSet nodes;
  std::optional<nlp::EntityCategory> entity;

  static AccessLevel null();
  static AccessLevel concept_labels(std::vector<std::string> labels);
  static AccessLevel concept_nodes(kb::ConceptSet nodes, std::vector<std::string> labels = {});
  static AccessLevel ne_category(nlp::EntityCategory c);
  static AccessLevel ne_name(nlp::EntityCategory c);

  bool is_null() const { return kind == AccessKind::kNull; }
  bool is_entity() const { return kind == AccessKind::kNeCategory || kind == AccessKind::kNeName; }
  bool resolved() const { return kind != AccessKind::kConcept || !nodes.empty(); }

  // Canonical identity used for caching: kind plus resolved nodes or entity
  // category. Labels do not participate.
  std::string fingerprint() const;
  // Human-readable form, e.g. "Infections", "HIV/AIDS", "null", "person_name".
  std::string display() const;

  friend bool operator==(const AccessLevel &, const AccessLevel &) = default;
};

// Taxonomy nodes named by an access-level label. Tried in order: concepts
// whose label or id matches; otherwise resources with that exact title (their
// concept plus categories); otherwise concepts matching the singular form.
std::vector<ConceptId> resolve_label(const kb::KnowledgeBase &kb, std::string_view label);

// Fills `nodes` for concept levels. Throws ConfigurationError when a label
// does not resolve.
AccessLevel resolve(const AccessLevel &al, const kb::KnowledgeBase &kb);

// Strictest level that satisfies every input. NULL wins outright. Concept
// levels keep each node that is not strictly below a node of some input
// level unless that input lists it too; comparable levels therefore yield
// the more general one. Entity levels order null > category > name. Mixing
// concept and entity levels, or entity levels of different categories,
// throws ConflictError. Empty input throws Error.
AccessLevel resolve_conflict(std::span<const AccessLevel> levels, const kb::KnowledgeBase &kb);

}  // namespace taxsan::policy

#endif  // TAXSAN_POLICY_ACCESS_LEVEL_H_
