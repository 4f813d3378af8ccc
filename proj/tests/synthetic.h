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

#ifndef TAXSAN_TESTS_SYNTHETIC_H_
#define TAXSAN_TESTS_SYNTHETIC_H_

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "taxsan/annotate/annotated_message.h"
#include "taxsan/common/text.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::testing {

// Annotated message whose phrases are the given words, each carrying the
// given sense, separated by filler words.
inline annotate::AnnotatedMessage synthetic_message(
    const std::string &id, const std::vector<std::pair<std::string, std::optional<ConceptId>>> &words) {
  annotate::AnnotatedMessage m;
  m.id = MessageId(id);
  m.publisher = UserId("pub");
  std::vector<std::size_t> starts;
  for (const auto &[w, c] : words) {
    if (!m.text.empty()) m.text += " and ";
    starts.push_back(m.text.size());
    m.text += w;
  }
  m.text += ".";
  m.tokens = nlp::tokenize(m.text);
  for (std::size_t i = 0; i < words.size(); ++i) {
    annotate::AnnotatedPhrase p;
    p.phrase.span = {starts[i], starts[i] + words[i].first.size()};
    p.phrase.surface = words[i].first;
    p.phrase.key = text::to_lower(words[i].first);
    p.phrase.head = p.phrase.key;
    for (std::size_t t = 0; t < m.tokens.size(); ++t) {
      if (m.tokens[t].span.start == p.phrase.span.start) {
        p.phrase.tokens = {t, t + 1};
        m.tokens[t].pos = nlp::PosTag::kNN;
      }
    }
    if (words[i].second) {
      p.candidates = {*words[i].second};
      p.chosen = words[i].second;
    }
    m.phrases.push_back(std::move(p));
  }
  return m;
}

// Random message over the concepts n00..n{n-1} of a random DAG.
inline annotate::AnnotatedMessage random_message(std::mt19937 &rng, int n_concepts, const std::string &id) {
  std::vector<std::pair<std::string, std::optional<ConceptId>>> words;
  int len = std::uniform_int_distribution<int>(1, 8)(rng);
  for (int i = 0; i < len; ++i) {
    int c = std::uniform_int_distribution<int>(0, n_concepts - 1)(rng);
    std::string name = "n";
    if (c < 10) name += '0';
    name += std::to_string(c);
    bool annotated = std::uniform_int_distribution<int>(0, 5)(rng) != 0;
    words.emplace_back("w" + name, annotated ? std::optional<ConceptId>(ConceptId(name)) : std::nullopt);
  }
  return synthetic_message(id, words);
}

}  // namespace taxsan::testing

#endif  // TAXSAN_TESTS_SYNTHETIC_H_
