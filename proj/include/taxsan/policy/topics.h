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

#ifndef TAXSAN_POLICY_TOPICS_H_
#define TAXSAN_POLICY_TOPICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/nlp/types.h"

namespace taxsan::policy {

enum class TopicKind { kConcept, kEntity };

struct Topic {
  std::string name;
  TopicKind kind = TopicKind::kConcept;
  // Concept topics: labels of the taxonomy nodes that delimit the topic. A
  // NULL access level withholds every sense at or below these nodes.
  std::vector<std::string> scope;
  // Entity topics: the entity category the topic protects.
  std::optional<nlp::EntityCategory> entity;
};

// Sensitive topics offered by the system: medical health, religion, race,
// politics, sexuality and census data, plus one topic per entity category
// (NE_person, NE_location, ...).
class TopicCatalog {
 public:
  static const TopicCatalog &system();

  explicit TopicCatalog(std::vector<Topic> topics) : topics_(std::move(topics)) {}

  // Case-insensitive, whitespace-normalized lookup.
  const Topic *find(std::string_view name) const;
  const std::vector<Topic> &topics() const { return topics_; }

 private:
  std::vector<Topic> topics_;
};

}  // namespace taxsan::policy

#endif  // TAXSAN_POLICY_TOPICS_H_
