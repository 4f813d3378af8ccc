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
#ifndef TAXSAN_KB_KNOWLEDGE_BASE_H_
#define TAXSAN_KB_KNOWLEDGE_BASE_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taxsan/common/ids.h"

namespace taxsan::kb {

using ConceptSet = std::set<ConceptId>;

struct Concept {
  ConceptId id;
  std::string label;
  std::vector<ConceptId> parents;  // sorted
};

struct Resource {
  ResourceId id;
  std::string title;
  ConceptId concept_id;
  // (property name, target resource), sorted.
  std::vector<std::pair<std::string, ResourceId>> properties;
  std::vector<ConceptId> categories;  // sorted

  friend bool operator==(const Resource &, const Resource &) = default;
};

// Read-only view of a taxonomy knowledge base. Implemented by the offline
// TaxonomyStore and by the SPARQL-backed remote client; both honour the
// same result contract.
//
// query_count() counts lookup_resources() calls, one per call regardless of
// the number of results. branch_query_count() counts branch() calls. Both
// are atomic and never influence results.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  KnowledgeBase(KnowledgeBase &&other) noexcept;
  KnowledgeBase &operator=(KnowledgeBase &&other) noexcept;
  virtual ~KnowledgeBase() = default;

  // Resources whose normalized title contains the normalized phrase.
  // Results are ordered by resource id.
  virtual std::vector<Resource> lookup_resources(std::string_view phrase) const = 0;

  virtual std::optional<Resource> resource(const ResourceId &id) const = 0;

  // Input resources followed by the targets of their property links,
  // deduplicated, in first-seen order.
  std::vector<Resource> expand_related(std::span<const Resource> resources) const;

  // Union of the category concepts of the resources, deduplicated, in
  // first-seen order (resources in input order, categories by id).
  std::vector<ConceptId> categories_of(std::span<const Resource> resources) const;

  // Transitive parent closure. Contains c itself unless strict is set.
  // Throws NotFoundError for unknown ids.
  virtual ConceptSet ancestors(const ConceptId &c, bool strict = false) const = 0;

  // All strict descendants of root.
  virtual ConceptSet branch(const ConceptId &root) const = 0;

  virtual std::vector<ConceptId> parents(const ConceptId &c) const = 0;
  virtual std::string label(const ConceptId &c) const = 0;
  virtual bool contains(const ConceptId &c) const = 0;

  // Exact match on normalized label / title, ordered by id.
  virtual std::vector<ConceptId> find_concepts_by_label(std::string_view label) const = 0;
  virtual std::vector<Resource> find_resources_by_title(std::string_view title) const = 0;

  std::uint64_t query_count() const { return lookups_.load(std::memory_order_relaxed); }
  std::uint64_t branch_query_count() const {
    return branch_queries_.load(std::memory_order_relaxed);
  }

 protected:
  void count_lookup() const { lookups_.fetch_add(1, std::memory_order_relaxed); }
  void count_branch() const { branch_queries_.fetch_add(1, std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::uint64_t> lookups_{0};
  mutable std::atomic<std::uint64_t> branch_queries_{0};
};

// Shortest number of parent hops from c up to target, or nullopt when target
// is not an ancestor (c itself is at distance 0).
std::optional<std::size_t> ancestor_distance(const KnowledgeBase &kb, const ConceptId &c,
                                             const ConceptId &target);

}  // namespace taxsan::kb

#endif  // TAXSAN_KB_KNOWLEDGE_BASE_H_
