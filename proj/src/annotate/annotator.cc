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

#include "taxsan/annotate/annotator.h"

#include <algorithm>
#include <map>

namespace taxsan::annotate {

std::vector<ConceptId> retrieve_senses(const kb::KnowledgeBase &kb, const nlp::NounPhrase &phrase) {
  std::vector<kb::Resource> found = kb.lookup_resources(phrase.key);
  if (found.empty() && phrase.key != phrase.head && !phrase.head.empty()) {
    found = kb.lookup_resources(phrase.head);
  }
  if (found.empty()) return {};
  std::vector<kb::Resource> expanded = kb.expand_related(found);
  return kb.categories_of(expanded);
}

AnnotatedMessage Annotator::annotate(const RawMessage &message, AnnotationReport *report) const {
  AnnotatedMessage out;
  out.id = message.id;
  out.publisher = message.publisher;
  out.co_publishers = message.co_publishers;
  std::sort(out.co_publishers.begin(), out.co_publishers.end());
  out.co_publishers.erase(std::unique(out.co_publishers.begin(), out.co_publishers.end()), out.co_publishers.end());
  out.text = message.text;

  nlp::Analysis analysis = analyzer_.analyze(message.text);
  out.tokens = std::move(analysis.tokens);
  out.entities = std::move(analysis.entities);

  // Distinct keys in order of first occurrence.
  std::vector<std::string> keys;
  std::map<std::string, std::size_t> key_index;
  std::vector<std::vector<ConceptId>> senses;
  for (const nlp::NounPhrase &p : analysis.phrases) {
    if (key_index.contains(p.key)) continue;
    key_index.emplace(p.key, keys.size());
    keys.push_back(p.key);
    senses.push_back(retrieve_senses(kb_, p));
  }

  std::vector<std::vector<SenseCandidate>> groups(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    for (const ConceptId &c : senses[k]) groups[k].push_back(make_candidate(kb_, k, c));
  }
  Disambiguation result = disambiguate(groups, options_);

  for (nlp::NounPhrase &p : analysis.phrases) {
    std::size_t k = key_index.at(p.key);
    AnnotatedPhrase ap;
    ap.candidates = senses[k];
    ap.chosen = result.chosen[k];
    ap.phrase = std::move(p);
    out.phrases.push_back(std::move(ap));
  }
  if (report) {
    report->distinct_keys = keys.size();
    report->exhaustive = result.exhaustive;
    report->cost = result.cost;
    report->unannotated = result.empty;
  }
  return out;
}

}  // namespace taxsan::annotate
