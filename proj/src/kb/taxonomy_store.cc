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
#include "taxsan/kb/taxonomy_store.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"

namespace taxsan::kb {
namespace {

struct PendingConcept {
  std::string label;
  std::vector<std::string> parents;
  std::size_t line;
};

struct PendingResource {
  std::string title;
  std::string concept_id;
  std::size_t line;
};

struct PendingLink {
  std::string resource;
  std::string property;
  std::string target;
  std::size_t line;
};

std::vector<std::string> fields_of(const std::string &line) {
  std::vector<std::string> f = text::split(line, '\t');
  for (auto &s : f) s = std::string(text::trim(s));
  return f;
}

}  // namespace

TaxonomyStore TaxonomyStore::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open snapshot " + path.string());
  return load(in);
}

TaxonomyStore TaxonomyStore::load(std::istream &in) {
  std::map<std::string, PendingConcept> concepts;
  std::map<std::string, PendingResource> resources;
  std::vector<PendingLink> links;
  std::vector<PendingLink> categories;  // property unused

  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (text::trim(line) != kHeader) {
        throw ParseError(std::string("missing header '") + kHeader + "'", lineno);
      }
      header_seen = true;
      continue;
    }
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;

    auto f = fields_of(line);
    const std::string &kind = f[0];
    if (kind == "C") {
      if (f.size() < 3 || f.size() > 4) throw ParseError("C record needs 3 or 4 fields", lineno);
      if (f[1].empty()) throw ParseError("empty concept id", lineno);
      std::vector<std::string> parents;
      if (f.size() == 4 && !f[3].empty()) {
        for (auto &p : text::split(f[3], ',')) {
          auto t = std::string(text::trim(p));
          if (t.empty()) throw ParseError("empty parent id", lineno);
          parents.push_back(t);
        }
      }
      if (!concepts.emplace(f[1], PendingConcept{f[2], parents, lineno}).second) {
        throw ParseError("duplicate concept id '" + f[1] + "'", lineno);
      }
    } else if (kind == "R") {
      if (f.size() != 4) throw ParseError("R record needs 4 fields", lineno);
      if (f[1].empty() || f[2].empty()) throw ParseError("empty resource id or title", lineno);
      if (!resources.emplace(f[1], PendingResource{f[2], f[3], lineno}).second) {
        throw ParseError("duplicate resource id '" + f[1] + "'", lineno);
      }
    } else if (kind == "P") {
      if (f.size() != 4) throw ParseError("P record needs 4 fields", lineno);
      links.push_back({f[1], f[2], f[3], lineno});
    } else if (kind == "K") {
      if (f.size() != 3) throw ParseError("K record needs 3 fields", lineno);
      categories.push_back({f[1], "", f[2], lineno});
    } else {
      throw ParseError("unknown record kind '" + kind + "'", lineno);
    }
  }
  if (!header_seen) throw ParseError(std::string("missing header '") + kHeader + "'", 1);

  TaxonomyStore store;
  for (const auto &[id, pc] : concepts) {
    Concept c{ConceptId(id), pc.label, {}};
    for (const auto &p : pc.parents) {
      if (!concepts.count(p)) {
        throw IntegrityError("line " + std::to_string(pc.line) + ": concept '" + id +
                             "' has unknown parent '" + p + "'");
      }
      c.parents.emplace_back(p);
    }
    std::sort(c.parents.begin(), c.parents.end());
    c.parents.erase(std::unique(c.parents.begin(), c.parents.end()), c.parents.end());
    store.concepts_.push_back(std::move(c));
  }

  for (const auto &[id, pr] : resources) {
    if (!concepts.count(pr.concept_id)) {
      throw IntegrityError("line " + std::to_string(pr.line) + ": resource '" + id +
                           "' denotes unknown concept '" + pr.concept_id + "'");
    }
    store.resources_.push_back(Resource{ResourceId(id), pr.title, ConceptId(pr.concept_id), {}, {}});
  }
  std::unordered_map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < store.resources_.size(); ++i) slot.emplace(store.resources_[i].id.str(), i);
  auto resource_slot = [&](const std::string &id, std::size_t line) -> Resource & {
    auto it = slot.find(id);
    if (it == slot.end()) {
      throw IntegrityError("line " + std::to_string(line) + ": unknown resource '" + id + "'");
    }
    return store.resources_[it->second];
  };
  for (const auto &l : links) {
    Resource &r = resource_slot(l.resource, l.line);
    if (!slot.count(l.target)) {
      throw IntegrityError("line " + std::to_string(l.line) + ": property target '" + l.target +
                           "' is not a resource");
    }
    r.properties.emplace_back(l.property, ResourceId(l.target));
  }
  for (const auto &k : categories) {
    Resource &r = resource_slot(k.resource, k.line);
    if (!concepts.count(k.target)) {
      throw IntegrityError("line " + std::to_string(k.line) + ": category '" + k.target +
                           "' is not a concept");
    }
    r.categories.emplace_back(k.target);
  }
  for (Resource &r : store.resources_) {
    std::sort(r.properties.begin(), r.properties.end());
    r.properties.erase(std::unique(r.properties.begin(), r.properties.end()), r.properties.end());
    std::sort(r.categories.begin(), r.categories.end());
    r.categories.erase(std::unique(r.categories.begin(), r.categories.end()), r.categories.end());
  }

  store.build_indexes();

  // Cycle check: iterative three-colour DFS over parent edges.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(store.concepts_.size(), kWhite);
  for (Index start = 0; start < store.concepts_.size(); ++start) {
    if (colour[start] != kWhite) continue;
    std::vector<std::pair<Index, std::size_t>> stack{{start, 0}};
    colour[start] = kGrey;
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      const auto &ps = store.parent_idx_[node];
      if (next < ps.size()) {
        Index p = ps[next++];
        if (colour[p] == kGrey) throw CycleError(store.concepts_[p].id.str());
        if (colour[p] == kWhite) {
          colour[p] = kGrey;
          stack.emplace_back(p, 0);
        }
      } else {
        colour[node] = kBlack;
        stack.pop_back();
      }
    }
  }
  return store;
}

void TaxonomyStore::build_indexes() {
  concept_pos_.clear();
  for (Index i = 0; i < concepts_.size(); ++i) concept_pos_.emplace(concepts_[i].id, i);
  parent_idx_.assign(concepts_.size(), {});
  child_idx_.assign(concepts_.size(), {});
  for (Index i = 0; i < concepts_.size(); ++i) {
    for (const ConceptId &p : concepts_[i].parents) {
      Index pi = concept_pos_.at(p);
      parent_idx_[i].push_back(pi);
      child_idx_[pi].push_back(i);
    }
  }

  resource_pos_.clear();
  norm_titles_.clear();
  trigrams_.clear();
  for (Index i = 0; i < resources_.size(); ++i) {
    resource_pos_.emplace(resources_[i].id, i);
    std::string norm = text::normalize_label(resources_[i].title);
    std::set<std::string> grams;
    for (std::size_t k = 0; k + 3 <= norm.size(); ++k) grams.insert(norm.substr(k, 3));
    for (const auto &g : grams) trigrams_[g].push_back(i);
    norm_titles_.push_back(std::move(norm));
  }
}

TaxonomyStore::Index TaxonomyStore::concept_index(const ConceptId &c) const {
  auto it = concept_pos_.find(c);
  if (it == concept_pos_.end()) throw NotFoundError("unknown concept '" + c.str() + "'");
  return it->second;
}

std::vector<TaxonomyStore::Index> TaxonomyStore::title_candidates(const std::string &needle) const {
  std::vector<Index> all;
  if (needle.size() < 3) {
    all.resize(resources_.size());
    for (Index i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  // Intersect posting lists, rarest first.
  std::vector<const std::vector<Index> *> lists;
  for (std::size_t k = 0; k + 3 <= needle.size(); ++k) {
    auto it = trigrams_.find(needle.substr(k, 3));
    if (it == trigrams_.end()) return {};
    lists.push_back(&it->second);
  }
  std::sort(lists.begin(), lists.end(),
            [](const auto *a, const auto *b) { return a->size() < b->size(); });
  all = *lists.front();
  for (std::size_t k = 1; k < lists.size() && !all.empty(); ++k) {
    std::vector<Index> next;
    std::set_intersection(all.begin(), all.end(), lists[k]->begin(), lists[k]->end(),
                          std::back_inserter(next));
    all.swap(next);
  }
  return all;
}

std::vector<Resource> TaxonomyStore::lookup_resources(std::string_view phrase) const {
  count_lookup();
  std::string needle = text::normalize_label(phrase);
  std::vector<Resource> out;
  if (needle.empty()) return out;
  for (Index i : title_candidates(needle)) {
    if (norm_titles_[i].find(needle) != std::string::npos) out.push_back(resources_[i]);
  }
  return out;
}

std::optional<Resource> TaxonomyStore::resource(const ResourceId &id) const {
  auto it = resource_pos_.find(id);
  if (it == resource_pos_.end()) return std::nullopt;
  return resources_[it->second];
}

ConceptSet TaxonomyStore::ancestors(const ConceptId &c, bool strict) const {
  Index start = concept_index(c);
  std::vector<char> seen(concepts_.size(), 0);
  std::vector<Index> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Index cur = stack.back();
    stack.pop_back();
    for (Index p : parent_idx_[cur]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  ConceptSet out;
  for (Index i = 0; i < seen.size(); ++i) {
    if (seen[i] && !(strict && i == start)) out.insert(concepts_[i].id);
  }
  return out;
}

ConceptSet TaxonomyStore::branch(const ConceptId &root) const {
  count_branch();
  Index start = concept_index(root);
  std::vector<char> seen(concepts_.size(), 0);
  std::vector<Index> stack{start};
  while (!stack.empty()) {
    Index cur = stack.back();
    stack.pop_back();
    for (Index ch : child_idx_[cur]) {
      if (!seen[ch]) {
        seen[ch] = 1;
        stack.push_back(ch);
      }
    }
  }
  ConceptSet out;
  for (Index i = 0; i < seen.size(); ++i) {
    if (seen[i] && i != start) out.insert(concepts_[i].id);
  }
  return out;
}

std::vector<ConceptId> TaxonomyStore::parents(const ConceptId &c) const {
  return concepts_[concept_index(c)].parents;
}

std::string TaxonomyStore::label(const ConceptId &c) const {
  return concepts_[concept_index(c)].label;
}

bool TaxonomyStore::contains(const ConceptId &c) const { return concept_pos_.count(c) > 0; }

std::vector<ConceptId> TaxonomyStore::find_concepts_by_label(std::string_view label) const {
  std::string want = text::normalize_label(label);
  std::vector<ConceptId> out;
  if (want.empty()) return out;
  for (const Concept &c : concepts_) {
    if (text::normalize_label(c.label) == want) out.push_back(c.id);
  }
  return out;
}

std::vector<Resource> TaxonomyStore::find_resources_by_title(std::string_view title) const {
  std::string want = text::normalize_label(title);
  std::vector<Resource> out;
  if (want.empty()) return out;
  for (Index i = 0; i < resources_.size(); ++i) {
    if (norm_titles_[i] == want) out.push_back(resources_[i]);
  }
  return out;
}

}  // namespace taxsan::kb
