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
#include "taxsan/kb/knowledge_base.h"

#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace taxsan::kb {

KnowledgeBase::KnowledgeBase(KnowledgeBase &&other) noexcept
    : lookups_(other.lookups_.load()), branch_queries_(other.branch_queries_.load()) {}

KnowledgeBase &KnowledgeBase::operator=(KnowledgeBase &&other) noexcept {
  lookups_.store(other.lookups_.load());
  branch_queries_.store(other.branch_queries_.load());
  return *this;
}

std::vector<Resource> KnowledgeBase::expand_related(std::span<const Resource> resources) const {
  std::vector<Resource> out;
  std::unordered_set<ResourceId> seen;
  for (const Resource &r : resources) {
    if (seen.insert(r.id).second) out.push_back(r);
  }
  for (const Resource &r : resources) {
    for (const auto &[name, target] : r.properties) {
      if (seen.count(target)) continue;
      auto linked = resource(target);
      if (!linked) continue;
      seen.insert(target);
      out.push_back(std::move(*linked));
    }
  }
  return out;
}

std::vector<ConceptId> KnowledgeBase::categories_of(std::span<const Resource> resources) const {
  std::vector<ConceptId> out;
  std::unordered_set<ConceptId> seen;
  for (const Resource &r : resources) {
    for (const ConceptId &c : r.categories) {
      if (seen.insert(c).second) out.push_back(c);
    }
  }
  return out;
}

std::optional<std::size_t> ancestor_distance(const KnowledgeBase &kb, const ConceptId &c,
                                             const ConceptId &target) {
  std::unordered_map<ConceptId, std::size_t> depth{{c, 0}};
  std::deque<ConceptId> queue{c};
  while (!queue.empty()) {
    ConceptId cur = queue.front();
    queue.pop_front();
    std::size_t d = depth[cur];
    if (cur == target) return d;
    for (const ConceptId &p : kb.parents(cur)) {
      if (depth.emplace(p, d + 1).second) queue.push_back(p);
    }
  }
  return std::nullopt;
}

}  // namespace taxsan::kb
