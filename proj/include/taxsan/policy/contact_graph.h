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

#ifndef TAXSAN_POLICY_CONTACT_GRAPH_H_
#define TAXSAN_POLICY_CONTACT_GRAPH_H_

#include <filesystem>
#include <istream>
#include <map>
#include <string>

#include "taxsan/common/ids.h"

namespace taxsan::policy {

// owner -> contact -> category. TSV "owner<TAB>contact<TAB>category"; '#'
// comments.
class ContactGraph {
 public:
  static ContactGraph load(std::istream &in);
  static ContactGraph load(const std::filesystem::path &path);

  // Throws ConflictError when the edge exists with another category.
  void add(const UserId &owner, const UserId &contact, std::string category);

  // Category of contact for owner; "strangers" without an edge.
  std::string category_of(const UserId &owner, const UserId &contact) const;

  std::string to_tsv() const;
  std::size_t size() const;

  friend bool operator==(const ContactGraph &, const ContactGraph &) = default;

 private:
  std::map<UserId, std::map<UserId, std::string>> edges_;
};

}  // namespace taxsan::policy

#endif  // TAXSAN_POLICY_CONTACT_GRAPH_H_
