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
#ifndef TAXSAN_KB_TAXONOMY_STORE_H_
#define TAXSAN_KB_TAXONOMY_STORE_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "taxsan/kb/knowledge_base.h"

namespace taxsan::kb {

// Immutable in-memory taxonomy loaded from a snapshot file.
//
// Snapshot format (UTF-8, one record per line, tab separated, order
// independent, '#' starts a comment). The first line must be the header
// "# taxsnap v1".
//
//   C <id> <label> <parent ids, comma separated, may be empty>
//   R <id> <title> <concept id>
//   P <resource id> <property name> <target resource id>
//   K <resource id> <category concept id>
class TaxonomyStore final : public KnowledgeBase {
 public:
  static constexpr const char *kHeader = "# taxsnap v1";

  TaxonomyStore() = default;
  TaxonomyStore(TaxonomyStore &&) noexcept = default;
  TaxonomyStore &operator=(TaxonomyStore &&) noexcept = default;

  // Throws ParseError, IntegrityError or CycleError.
  static TaxonomyStore load(std::istream &in);
  static TaxonomyStore load(const std::filesystem::path &path);

  std::vector<Resource> lookup_resources(std::string_view phrase) const override;
  std::optional<Resource> resource(const ResourceId &id) const override;
  ConceptSet ancestors(const ConceptId &c, bool strict = false) const override;
  ConceptSet branch(const ConceptId &root) const override;
  std::vector<ConceptId> parents(const ConceptId &c) const override;
  std::string label(const ConceptId &c) const override;
  bool contains(const ConceptId &c) const override;
  std::vector<ConceptId> find_concepts_by_label(std::string_view label) const override;
  std::vector<Resource> find_resources_by_title(std::string_view title) const override;

  std::size_t concept_count() const { return concepts_.size(); }
  std::size_t resource_count() const { return resources_.size(); }
  const Concept &concept_at(std::size_t i) const { return concepts_[i]; }
  const Resource &resource_at(std::size_t i) const { return resources_[i]; }

 private:
  using Index = std::uint32_t;

  Index concept_index(const ConceptId &c) const;
  void build_indexes();
  std::vector<Index> title_candidates(const std::string &needle) const;

  std::vector<Concept> concepts_;  // sorted by id
  std::vector<std::vector<Index>> parent_idx_;
  std::vector<std::vector<Index>> child_idx_;
  std::unordered_map<ConceptId, Index> concept_pos_;

  std::vector<Resource> resources_;  // sorted by id
  std::unordered_map<ResourceId, Index> resource_pos_;
  std::vector<std::string> norm_titles_;
  // Trigram -> resources whose normalized title contains it (ascending).
  std::unordered_map<std::string, std::vector<Index>> trigrams_;
};

// Convenience wrapper used by the CLI and the tests.
inline TaxonomyStore load_snapshot(const std::filesystem::path &path) {
  return TaxonomyStore::load(path);
}

}  // namespace taxsan::kb

#endif  // TAXSAN_KB_TAXONOMY_STORE_H_
