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

#include "taxsan/policy/topics.h"

#include "taxsan/common/text.h"

namespace taxsan::policy {

const TopicCatalog &TopicCatalog::system() {
  static const TopicCatalog catalog([] {
    std::vector<Topic> t = {
        {"medical health", TopicKind::kConcept, {"health"}, std::nullopt},
        {"religion", TopicKind::kConcept, {"religion"}, std::nullopt},
        {"race", TopicKind::kConcept, {"race", "ethnic groups"}, std::nullopt},
        {"politics", TopicKind::kConcept, {"politics"}, std::nullopt},
        {"sexuality", TopicKind::kConcept, {"sexuality", "human sexuality"}, std::nullopt},
        {"census data", TopicKind::kConcept, {"demographics", "census"}, std::nullopt},
    };
    for (nlp::EntityCategory c : nlp::kAllEntityCategories) {
      t.push_back({"NE_" + text::to_lower(nlp::to_string(c)), TopicKind::kEntity, {}, c});
    }
    return t;
  }());
  return catalog;
}

const Topic *TopicCatalog::find(std::string_view name) const {
  std::string want = text::normalize_label(name);
  for (const Topic &t : topics_) {
    if (text::normalize_label(t.name) == want) return &t;
  }
  return nullptr;
}

}  // namespace taxsan::policy
