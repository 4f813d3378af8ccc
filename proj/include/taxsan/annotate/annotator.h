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

#ifndef TAXSAN_ANNOTATE_ANNOTATOR_H_
#define TAXSAN_ANNOTATE_ANNOTATOR_H_

#include <cstddef>
#include <string>
#include <vector>

#include "taxsan/annotate/annotated_message.h"
#include "taxsan/annotate/disambiguator.h"
#include "taxsan/kb/knowledge_base.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::annotate {

// Senses for one lookup key: lookup, expansion along property links, then
// the categories of the expanded resources. A multi-word key that matches
// nothing is retried with its head alone.
std::vector<ConceptId> retrieve_senses(const kb::KnowledgeBase &kb, const nlp::NounPhrase &phrase);

struct AnnotationReport {
  std::size_t distinct_keys = 0;
  bool exhaustive = true;
  double cost = 0.0;
  // No phrase had a sense.
  bool unannotated = false;
};

// NER, POS tagging and chunking, sense retrieval (one retrieval per distinct
// phrase key), then joint disambiguation over the distinct keys. Every
// occurrence of a key carries the same chosen sense.
class Annotator {
 public:
  Annotator(const kb::KnowledgeBase &kb, const nlp::Analyzer &analyzer, DisambiguationOptions options = {})
      : kb_(kb), analyzer_(analyzer), options_(options) {}

  AnnotatedMessage annotate(const RawMessage &message, AnnotationReport *report = nullptr) const;

 private:
  const kb::KnowledgeBase &kb_;
  const nlp::Analyzer &analyzer_;
  DisambiguationOptions options_;
};

inline AnnotatedMessage annotate_message(const RawMessage &message, const kb::KnowledgeBase &kb,
                                         const nlp::Analyzer &analyzer, const DisambiguationOptions &options = {}) {
  return Annotator(kb, analyzer, options).annotate(message);
}

}  // namespace taxsan::annotate

#endif  // TAXSAN_ANNOTATE_ANNOTATOR_H_
