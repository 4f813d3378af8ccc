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

#ifndef TAXSAN_ANNOTATE_ANNOTATED_MESSAGE_H_
#define TAXSAN_ANNOTATE_ANNOTATED_MESSAGE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/common/ids.h"
#include "taxsan/nlp/types.h"

namespace taxsan::annotate {

// A message as submitted by its publisher.
struct RawMessage {
  MessageId id;
  UserId publisher;
  std::vector<UserId> co_publishers;
  std::string text;

  friend bool operator==(const RawMessage &, const RawMessage &) = default;
};

struct AnnotatedPhrase {
  nlp::NounPhrase phrase;
  // Senses retrieved for the phrase key, in retrieval order.
  std::vector<ConceptId> candidates;
  // Empty iff candidates is empty (the phrase is unannotated).
  std::optional<ConceptId> chosen;

  bool annotated() const { return chosen.has_value(); }
  friend bool operator==(const AnnotatedPhrase &, const AnnotatedPhrase &) = default;
};

struct AnnotatedMessage {
  MessageId id;
  UserId publisher;
  std::vector<UserId> co_publishers;  // sorted, unique
  std::string text;
  std::vector<nlp::Token> tokens;
  std::vector<nlp::NamedEntity> entities;
  std::vector<AnnotatedPhrase> phrases;

  friend bool operator==(const AnnotatedMessage &, const AnnotatedMessage &) = default;
};

// JSON with a fixed field order: message_id, publisher, co_publishers, text,
// entities, phrases, tokens.
std::string to_json(const AnnotatedMessage &m);
AnnotatedMessage annotated_from_json(std::string_view json);

// {"message_id", "publisher", "co_publishers", "text"}
std::string to_json(const RawMessage &m);
RawMessage raw_message_from_json(std::string_view json);

}  // namespace taxsan::annotate

#endif  // TAXSAN_ANNOTATE_ANNOTATED_MESSAGE_H_
