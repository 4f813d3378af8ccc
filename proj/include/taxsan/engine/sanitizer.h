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

#ifndef TAXSAN_ENGINE_SANITIZER_H_
#define TAXSAN_ENGINE_SANITIZER_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/annotate/annotated_message.h"
#include "taxsan/kb/knowledge_base.h"
#include "taxsan/policy/access_level.h"

namespace taxsan::engine {

inline constexpr std::string_view kWithheld = "[withheld]";

// Placeholder used when an entity's category may be disclosed but not its
// name: "a person", "a location", "an organization", ...
std::string_view entity_placeholder(nlp::EntityCategory c);

// Access level in force for one topic.
struct TopicLevel {
  std::string topic;
  policy::AccessLevel al;
  // Concept topics under a NULL level: nodes delimiting what is withheld
  // (the nodes and everything below them). Empty means every annotated
  // phrase.
  kb::ConceptSet scope;
  // Entity topics: the category whose entities this level governs.
  std::optional<nlp::EntityCategory> entity;
};

// The access levels that govern one reader's view of one message.
struct EffectivePolicy {
  std::vector<TopicLevel> levels;

  // Canonical cache identity.
  std::string fingerprint() const;
};

// Policy with a single level that applies to every phrase (concept and NULL
// levels) or to the entities of its category (entity levels).
EffectivePolicy single_level(policy::AccessLevel al);

struct SensitiveOccurrence {
  enum class Source { kPhrase, kEntity };
  Source source = Source::kPhrase;
  // Index into AnnotatedMessage::phrases or ::entities.
  std::size_t index = 0;
  nlp::Span span;
  std::string surface;
  std::string replacement;
  // AL node the surface is generalized to; empty when withheld or for
  // entity placeholders.
  std::optional<ConceptId> generalization;
  std::string topic;
  // Display form of the governing access level.
  std::string rule;
};

// Instrumentation of the sensitivity check.
struct SensitivityCounters {
  std::atomic<std::uint64_t> membership_checks{0};
  std::atomic<std::uint64_t> branch_queries{0};
};

// Phrase occurrences whose chosen sense lies strictly below a node of a
// concept level (senses that are themselves level nodes stay disclosed),
// phrase occurrences in the scope of a NULL level, and entities governed by
// NULL or category levels. Each branch is fetched once per level node; each
// distinct chosen sense is checked once against each non-empty branch.
// When several topics apply to an occurrence, withholding wins, then the
// most general replacement, then topic order. Throws ConfigurationError for
// unresolved levels.
std::vector<SensitiveOccurrence> assess_sensitivity(const annotate::AnnotatedMessage &message,
                                                    const EffectivePolicy &policy, const kb::KnowledgeBase &kb,
                                                    SensitivityCounters *counters = nullptr);

struct Substitution {
  nlp::Span span;  // in the original text
  std::string original;
  std::string replacement;
  std::string topic;
  std::string rule;

  friend bool operator==(const Substitution &, const Substitution &) = default;
};

struct SanitizedMessage {
  MessageId id;
  std::string text;
  std::vector<Substitution> substitutions;  // ordered by span
  std::string cache_key;

  // TSV ledger: start, end, original, replacement, topic, rule.
  std::string ledger_tsv() const;

  friend bool operator==(const SanitizedMessage &, const SanitizedMessage &) = default;
};

SanitizedMessage sanitize(const annotate::AnnotatedMessage &message, const EffectivePolicy &policy,
                          const kb::KnowledgeBase &kb, SensitivityCounters *counters = nullptr);

inline SanitizedMessage sanitize(const annotate::AnnotatedMessage &message, const policy::AccessLevel &al,
                                 const kb::KnowledgeBase &kb, SensitivityCounters *counters = nullptr) {
  return sanitize(message, single_level(al), kb, counters);
}

// Applies substitutions to text. Throws Error on overlapping or
// out-of-range spans.
std::string apply_substitutions(std::string_view text, const std::vector<Substitution> &subs);

// The sanitized message as an annotated message: text and spans shifted,
// generalized phrases carrying their AL node as the chosen sense, withheld
// phrases and replaced entities no longer annotated.
annotate::AnnotatedMessage as_annotated(const annotate::AnnotatedMessage &original,
                                        const SanitizedMessage &sanitized,
                                        const std::vector<SensitiveOccurrence> &occurrences);

}  // namespace taxsan::engine

#endif  // TAXSAN_ENGINE_SANITIZER_H_
