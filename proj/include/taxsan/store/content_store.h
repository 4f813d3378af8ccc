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

#ifndef TAXSAN_STORE_CONTENT_STORE_H_
#define TAXSAN_STORE_CONTENT_STORE_H_

#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "taxsan/store/repository.h"

namespace taxsan::store {

// Directory-backed store:
//   <root>/messages/<id>.json   annotated messages, write-once
//   <root>/rules/<publisher>.json
//   <root>/contacts.tsv         owner, contact, category
// Every write goes to a temporary file in the target directory first and is
// then published with a single link or rename, so readers never observe a
// partial record. Identifiers are restricted to [A-Za-z0-9._@-] and may not
// start with '.'.
class ContentStore final : public Repository {
 public:
  explicit ContentStore(std::filesystem::path root);

  const std::filesystem::path &root() const { return root_; }

  // Throws ConflictError when the id is already stored.
  MessageId put_annotated(const annotate::AnnotatedMessage &m);
  annotate::AnnotatedMessage get_annotated(const MessageId &id) const override;
  // Stored serialization, byte for byte.
  std::string get_annotated_bytes(const MessageId &id) const;
  bool has_message(const MessageId &id) const;
  std::vector<MessageId> message_ids() const;

  // Replaces the publisher's rule set atomically.
  void put_rules(const policy::RuleSet &rules);
  // Throws NotFoundError when the publisher has no rule set.
  policy::RuleSet get_rules(const UserId &publisher) const;
  std::optional<policy::RuleSet> find_rules(const UserId &publisher) const override;

  void put_contacts(const policy::ContactGraph &graph);
  // Empty graph when no contact file exists.
  policy::ContactGraph contacts() const;
  std::string get_category(const UserId &owner, const UserId &contact) const override;

 private:
  std::filesystem::path message_path(const MessageId &id) const;
  std::filesystem::path rules_path(const UserId &publisher) const;

  std::filesystem::path root_;

  // Parsed contact graph, reloaded when the file changes on disk.
  mutable std::shared_mutex contacts_mu_;
  struct FileStamp {
    unsigned long long inode;
    long long sec;
    long long nsec;
    long long size;
    friend bool operator==(const FileStamp &, const FileStamp &) = default;
  };
  mutable std::optional<FileStamp> contacts_stamp_;
  mutable policy::ContactGraph contacts_cache_;
};

}  // namespace taxsan::store

#endif  // TAXSAN_STORE_CONTENT_STORE_H_
