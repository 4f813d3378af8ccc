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

#ifndef TAXSAN_STORE_REPOSITORY_H_
#define TAXSAN_STORE_REPOSITORY_H_

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "taxsan/annotate/annotated_message.h"
#include "taxsan/policy/contact_graph.h"
#include "taxsan/policy/rules.h"

namespace taxsan::store {

// What the monitor reads: annotated messages, rule sets and the contact
// graph. Implementations are safe for concurrent readers.
class Repository {
 public:
  virtual ~Repository() = default;

  // Throws NotFoundError for unknown ids.
  virtual annotate::AnnotatedMessage get_annotated(const MessageId &id) const = 0;
  virtual std::optional<policy::RuleSet> find_rules(const UserId &publisher) const = 0;
  // "strangers" when there is no edge.
  virtual std::string get_category(const UserId &owner, const UserId &contact) const = 0;
};

// Repository held in memory; used for one-shot command-line runs and tests.
class MemoryRepository final : public Repository {
 public:
  void put_annotated(annotate::AnnotatedMessage m);
  void put_rules(policy::RuleSet rules);
  void set_contacts(policy::ContactGraph graph);

  annotate::AnnotatedMessage get_annotated(const MessageId &id) const override;
  std::optional<policy::RuleSet> find_rules(const UserId &publisher) const override;
  std::string get_category(const UserId &owner, const UserId &contact) const override;

 private:
  mutable std::shared_mutex mu_;
  std::map<MessageId, annotate::AnnotatedMessage> messages_;
  std::map<UserId, policy::RuleSet> rules_;
  policy::ContactGraph contacts_;
};

}  // namespace taxsan::store

#endif  // TAXSAN_STORE_REPOSITORY_H_
