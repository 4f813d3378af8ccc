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

#ifndef TAXSAN_NLP_TYPES_H_
#define TAXSAN_NLP_TYPES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace taxsan::nlp {

enum class PosTag { kNN, kNNS, kNNP, kOther };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view s);

inline bool is_noun(PosTag t) { return t != PosTag::kOther; }

// Byte offsets into the source message, half open.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool overlaps(const Span &o) const { return start < o.end && o.start < end; }
  friend auto operator<=>(const Span &, const Span &) = default;
};

struct Token {
  std::string text;
  Span span;
  PosTag pos = PosTag::kOther;
  std::size_t sentence = 0;
  // Covered by a named entity; excluded from tagging and chunking.
  bool masked = false;

  friend bool operator==(const Token &, const Token &) = default;
};

// Half-open token index range.
struct TokenRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first; }
  friend auto operator<=>(const TokenRange &, const TokenRange &) = default;
};

enum class EntityCategory { kTime, kLocation, kOrganization, kPerson, kMoney, kPercent, kDate };

inline constexpr std::array<EntityCategory, 7> kAllEntityCategories = {
    EntityCategory::kTime,  EntityCategory::kLocation, EntityCategory::kOrganization,
    EntityCategory::kPerson, EntityCategory::kMoney,   EntityCategory::kPercent,
    EntityCategory::kDate};

std::string_view to_string(EntityCategory c);
std::optional<EntityCategory> parse_entity_category(std::string_view s);

struct NamedEntity {
  TokenRange tokens;
  Span span;
  EntityCategory category = EntityCategory::kPerson;
  std::string surface;

  friend bool operator==(const NamedEntity &, const NamedEntity &) = default;
};

struct NounPhrase {
  TokenRange tokens;
  Span span;
  std::string surface;
  // Rightmost noun, lowercased and singularized.
  std::string head;
  // Lowercased surface with the head normalized; the knowledge-base key.
  std::string key;

  friend bool operator==(const NounPhrase &, const NounPhrase &) = default;
};

}  // namespace taxsan::nlp

#endif  // TAXSAN_NLP_TYPES_H_
