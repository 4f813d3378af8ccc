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
#ifndef TAXSAN_COMMON_IDS_H_
#define TAXSAN_COMMON_IDS_H_

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace taxsan {

// Opaque string identifier, tagged so that concept, resource and user ids
// cannot be mixed up.
template <typename Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}
  explicit Id(std::string_view value) : value_(value) {}
  explicit Id(const char *value) : value_(value) {}

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Id &, const Id &) = default;
  friend bool operator==(const Id &, const Id &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Id &id) {
    return os << id.value_;
  }

 private:
  std::string value_;
};

using ConceptId = Id<struct ConceptTag>;
using ResourceId = Id<struct ResourceTag>;
using UserId = Id<struct UserTag>;
using MessageId = Id<struct MessageTag>;

}  // namespace taxsan

template <typename Tag>
struct std::hash<taxsan::Id<Tag>> {
  size_t operator()(const taxsan::Id<Tag> &id) const noexcept {
    return std::hash<std::string>()(id.str());
  }
};

#endif  // TAXSAN_COMMON_IDS_H_
