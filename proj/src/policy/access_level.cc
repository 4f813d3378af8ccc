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

#include "taxsan/policy/access_level.h"

#include <algorithm>

#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"

namespace taxsan::policy {
namespace {

std::string entity_word(nlp::EntityCategory c) { return text::to_lower(nlp::to_string(c)); }

int strictness(AccessKind k) {
  switch (k) {
    case AccessKind::kNull: return 2;
    case AccessKind::kNeCategory: return 1;
    default: return 0;
  }
}

void append_unique(std::vector<ConceptId> &out, const ConceptId &c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

std::vector<std::string> singular_forms(const std::string &w) {
  std::vector<std::string> out;
  auto ends = [&](std::string_view s) { return w.size() > s.size() && w.ends_with(s); };
  if (ends("ies")) out.push_back(w.substr(0, w.size() - 3) + "y");
  if (ends("es")) out.push_back(w.substr(0, w.size() - 2));
  if (ends("s")) out.push_back(w.substr(0, w.size() - 1));
  return out;
}

}  // namespace

std::string_view to_string(AccessKind k) {
  switch (k) {
    case AccessKind::kConcept: return "concept";
    case AccessKind::kNeCategory: return "ne-category";
    case AccessKind::kNull: return "null";
    case AccessKind::kNeName: return "ne-name";
  }
  return "null";
}

AccessLevel AccessLevel::null() { return AccessLevel{}; }

AccessLevel AccessLevel::concept_labels(std::vector<std::string> labels) {
  AccessLevel al;
  al.kind = AccessKind::kConcept;
  al.labels = std::move(labels);
  return al;
}

AccessLevel AccessLevel::concept_nodes(kb::ConceptSet nodes, std::vector<std::string> labels) {
  AccessLevel al;
  al.kind = AccessKind::kConcept;
  al.nodes = std::move(nodes);
  al.labels = std::move(labels);
  return al;
}

AccessLevel AccessLevel::ne_category(nlp::EntityCategory c) {
  AccessLevel al;
  al.kind = AccessKind::kNeCategory;
  al.entity = c;
  return al;
}

AccessLevel AccessLevel::ne_name(nlp::EntityCategory c) {
  AccessLevel al;
  al.kind = AccessKind::kNeName;
  al.entity = c;
  return al;
}

std::string AccessLevel::fingerprint() const {
  std::string out(to_string(kind));
  switch (kind) {
    case AccessKind::kConcept:
      out += ':';
      if (nodes.empty()) {
        for (const std::string &l : labels) out += "~" + text::normalize_label(l) + ';';
      }
      for (const ConceptId &c : nodes) out += c.str() + ';';
      break;
    case AccessKind::kNeCategory:
    case AccessKind::kNeName:
      out += ':' + std::string(nlp::to_string(*entity));
      break;
    case AccessKind::kNull:
      break;
  }
  return out;
}

std::string AccessLevel::display() const {
  switch (kind) {
    case AccessKind::kNull: return "null";
    case AccessKind::kNeCategory: return entity_word(*entity);
    case AccessKind::kNeName: return entity_word(*entity) + "_name";
    case AccessKind::kConcept: break;
  }
  std::string out;
  if (!labels.empty()) {
    for (const std::string &l : labels) out += (out.empty() ? "" : "/") + l;
  } else {
    for (const ConceptId &c : nodes) out += (out.empty() ? "" : "/") + c.str();
  }
  return out;
}

std::vector<ConceptId> resolve_label(const kb::KnowledgeBase &kb, std::string_view label) {
  std::vector<ConceptId> out;
  std::string trimmed(text::trim(label));
  if (trimmed.empty()) return out;

  for (const ConceptId &c : kb.find_concepts_by_label(trimmed)) append_unique(out, c);
  std::string as_id = trimmed;
  std::replace(as_id.begin(), as_id.end(), ' ', '_');
  for (const std::string &candidate : {trimmed, as_id}) {
    if (kb.contains(ConceptId(candidate))) append_unique(out, ConceptId(candidate));
  }
  if (!out.empty()) return out;

  for (const kb::Resource &r : kb.find_resources_by_title(trimmed)) {
    append_unique(out, r.concept_id);
    for (const ConceptId &c : r.categories) append_unique(out, c);
  }
  if (!out.empty()) return out;

  for (const std::string &s : singular_forms(text::normalize_label(trimmed))) {
    for (const ConceptId &c : kb.find_concepts_by_label(s)) append_unique(out, c);
    if (!out.empty()) break;
  }
  return out;
}

AccessLevel resolve(const AccessLevel &al, const kb::KnowledgeBase &kb) {
  if (al.kind != AccessKind::kConcept || !al.nodes.empty()) return al;
  AccessLevel out = al;
  for (const std::string &l : al.labels) {
    std::vector<ConceptId> nodes = resolve_label(kb, l);
    if (nodes.empty()) throw ConfigurationError("access level label does not resolve: " + l);
    out.nodes.insert(nodes.begin(), nodes.end());
  }
  if (out.nodes.empty()) throw ConfigurationError("concept access level without labels");
  return out;
}

AccessLevel resolve_conflict(std::span<const AccessLevel> levels, const kb::KnowledgeBase &kb) {
  if (levels.empty()) throw Error("resolve_conflict: no access levels");
  for (const AccessLevel &al : levels) {
    if (al.is_null()) return AccessLevel::null();
  }
  const bool concept_kind = levels.front().kind == AccessKind::kConcept;
  for (const AccessLevel &al : levels) {
    if ((al.kind == AccessKind::kConcept) != concept_kind) {
      throw ConflictError("cannot combine concept and entity access levels");
    }
  }

  if (!concept_kind) {
    const AccessLevel *strictest = &levels.front();
    for (const AccessLevel &al : levels) {
      if (al.entity != levels.front().entity) {
        throw ConflictError("entity access levels refer to different entity categories");
      }
      if (strictness(al.kind) > strictness(strictest->kind)) strictest = &al;
    }
    return *strictest;
  }

  std::vector<AccessLevel> resolved;
  for (const AccessLevel &al : levels) resolved.push_back(resolve(al, kb));
  bool all_same = std::all_of(resolved.begin(), resolved.end(),
                              [&](const AccessLevel &al) { return al.nodes == resolved.front().nodes; });
  if (all_same) return resolved.front();

  kb::ConceptSet all;
  for (const AccessLevel &al : resolved) all.insert(al.nodes.begin(), al.nodes.end());
  kb::ConceptSet kept;
  for (const ConceptId &n : all) {
    kb::ConceptSet above = kb.ancestors(n, true);
    bool keep = std::all_of(resolved.begin(), resolved.end(), [&](const AccessLevel &al) {
      if (al.nodes.contains(n)) return true;
      return std::none_of(al.nodes.begin(), al.nodes.end(),
                          [&](const ConceptId &a) { return above.contains(a); });
    });
    if (keep) kept.insert(n);
  }
  std::vector<std::string> labels;
  for (const ConceptId &c : kept) labels.push_back(kb.label(c));
  return AccessLevel::concept_nodes(std::move(kept), std::move(labels));
}

}  // namespace taxsan::policy
