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

#include "taxsan/store/repository.h"

#include <mutex>

#include "taxsan/common/errors.h"

namespace taxsan::store {

void MemoryRepository::put_annotated(annotate::AnnotatedMessage m) {
  std::unique_lock lock(mu_);
  MessageId id = m.id;
  messages_.insert_or_assign(std::move(id), std::move(m));
}

void MemoryRepository::put_rules(policy::RuleSet rules) {
  std::unique_lock lock(mu_);
  UserId publisher = rules.publisher;
  rules_.insert_or_assign(std::move(publisher), std::move(rules));
}

void MemoryRepository::set_contacts(policy::ContactGraph graph) {
  std::unique_lock lock(mu_);
  contacts_ = std::move(graph);
}

annotate::AnnotatedMessage MemoryRepository::get_annotated(const MessageId &id) const {
  std::shared_lock lock(mu_);
  auto it = messages_.find(id);
  if (it == messages_.end()) throw NotFoundError("unknown message: " + id.str());
  return it->second;
}

std::optional<policy::RuleSet> MemoryRepository::find_rules(const UserId &publisher) const {
  std::shared_lock lock(mu_);
  auto it = rules_.find(publisher);
  if (it == rules_.end()) return std::nullopt;
  return it->second;
}

std::string MemoryRepository::get_category(const UserId &owner, const UserId &contact) const {
  std::shared_lock lock(mu_);
  return contacts_.category_of(owner, contact);
}

}  // namespace taxsan::store
