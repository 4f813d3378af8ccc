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

#ifndef TAXSAN_NLP_PIPELINE_H_
#define TAXSAN_NLP_PIPELINE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/nlp/lexicon.h"
#include "taxsan/nlp/types.h"

namespace taxsan::nlp {

// Splits text into word and punctuation tokens with byte spans. Every
// non-whitespace byte belongs to exactly one token.
std::vector<Token> tokenize(std::string_view text);

// Gazetteer lookup, pattern rules for dates, times, money and percentages,
// and capitalization rules (honorifics, company suffixes). Entities never
// overlap.
std::vector<NamedEntity> recognize_entities(std::span<const Token> tokens, const Gazetteer &gazetteer,
                                            std::string_view text);

void mask_entities(std::span<Token> tokens, std::span<const NamedEntity> entities);

// Lexicon first, then suffix rules (-tion/-ness/-ity -> NN, plural of a
// known noun -> NNS), otherwise other. Masked tokens stay other.
std::vector<Token> pos_tag(std::vector<Token> tokens, const Lexicon &lexicon);

// Lowercase plus naive singularization against the lexicon.
std::string normalize_head(std::string_view word, const Lexicon &lexicon);

// Maximal runs of adjacent unmasked noun tokens.
std::vector<NounPhrase> chunk_noun_phrases(std::span<const Token> tokens, const Lexicon &lexicon,
                                           std::string_view text);

struct Analysis {
  std::vector<Token> tokens;
  std::vector<NamedEntity> entities;
  std::vector<NounPhrase> phrases;
};

// Lexical front end used by the annotator. Alternative taggers plug in by
// implementing analyze().
class Analyzer {
 public:
  virtual ~Analyzer() = default;
  virtual Analysis analyze(std::string_view text) const = 0;
};

class RuleBasedAnalyzer final : public Analyzer {
 public:
  RuleBasedAnalyzer(Lexicon lexicon, Gazetteer gazetteer)
      : lexicon_(std::move(lexicon)), gazetteer_(std::move(gazetteer)) {}

  Analysis analyze(std::string_view text) const override;

  const Lexicon &lexicon() const { return lexicon_; }
  const Gazetteer &gazetteer() const { return gazetteer_; }

 private:
  Lexicon lexicon_;
  Gazetteer gazetteer_;
};

}  // namespace taxsan::nlp

#endif  // TAXSAN_NLP_PIPELINE_H_
