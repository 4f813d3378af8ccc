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

#include <algorithm>
#include <set>

#include "taxsan/common/text.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::nlp {
namespace {

const std::set<std::string, std::less<>> &closed_class() {
  static const std::set<std::string, std::less<>> words = {
      "a",     "about", "above",  "after", "again", "against", "all",   "also",  "am",     "an",
      "and",   "any",   "are",    "as",    "at",    "be",      "been",  "before", "being", "below",
      "both",  "but",   "by",     "can",   "could", "did",     "do",    "does",  "doing",  "down",
      "during", "each", "either", "every", "few",   "for",     "from",  "had",   "has",    "have",
      "having", "he",   "her",    "here",  "hers",  "herself", "him",   "himself", "his",  "how",
      "i",     "if",    "in",     "into",  "is",    "it",      "its",   "itself", "just",  "may",
      "me",    "might", "more",   "most",  "must",  "my",      "myself", "neither", "no",  "nor",
      "not",   "now",   "of",     "off",   "on",    "once",    "only",  "or",    "other",  "our",
      "ours",  "out",   "over",   "own",   "same",  "shall",   "she",   "should", "so",    "some",
      "such",  "than",  "that",   "the",   "their", "theirs",  "them",  "then",  "there",  "these",
      "they",  "this",  "those",  "through", "to",  "too",     "under", "until", "up",     "upon",
      "us",    "very",  "was",    "we",    "were",  "what",    "when",  "where", "which",  "while",
      "who",   "whom",  "whose",  "why",   "will",  "with",    "within", "without", "would", "yet",
      "you",   "your",  "yours",  "yourself", "because", "although", "though", "since", "unless"};
  return words;
}

bool has_word_char(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
  });
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Stem candidates for a plural form, most specific first.
std::vector<std::string> plural_stems(const std::string &lower) {
  std::vector<std::string> stems;
  if (ends_with(lower, "ies")) stems.push_back(lower.substr(0, lower.size() - 3) + "y");
  if (ends_with(lower, "es")) stems.push_back(lower.substr(0, lower.size() - 2));
  if (ends_with(lower, "s") && !ends_with(lower, "ss")) stems.push_back(lower.substr(0, lower.size() - 1));
  return stems;
}

PosTag tag_word(std::string_view word, const Lexicon &lexicon) {
  std::string lower = text::to_lower(word);
  if (!has_word_char(lower) || closed_class().contains(lower)) return PosTag::kOther;
  if (auto tag = lexicon.find(lower)) return *tag;
  if (ends_with(lower, "tion") || ends_with(lower, "ness") || ends_with(lower, "ity")) return PosTag::kNN;
  for (const std::string &stem : plural_stems(lower)) {
    if (lexicon.find(stem) == PosTag::kNN) return PosTag::kNNS;
  }
  return PosTag::kOther;
}

}  // namespace

std::vector<Token> pos_tag(std::vector<Token> tokens, const Lexicon &lexicon) {
  for (Token &t : tokens) t.pos = t.masked ? PosTag::kOther : tag_word(t.text, lexicon);
  return tokens;
}

std::string normalize_head(std::string_view word, const Lexicon &lexicon) {
  std::string lower = text::to_lower(word);
  // Words listed in their own right (other than as plurals) keep their form.
  if (auto tag = lexicon.find(lower); tag && *tag != PosTag::kNNS) return lower;
  for (const std::string &stem : plural_stems(lower)) {
    if (lexicon.is_known_noun(stem)) return stem;
  }
  return lower;
}

std::vector<NounPhrase> chunk_noun_phrases(std::span<const Token> tokens, const Lexicon &lexicon,
                                           std::string_view text) {
  std::vector<NounPhrase> out;
  std::size_t i = 0;
  auto is_chunkable = [&](std::size_t k) { return !tokens[k].masked && is_noun(tokens[k].pos); };
  while (i < tokens.size()) {
    if (!is_chunkable(i)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < tokens.size() && is_chunkable(j) && tokens[j].sentence == tokens[i].sentence) ++j;
    NounPhrase p;
    p.tokens = {i, j};
    p.span = {tokens[i].span.start, tokens[j - 1].span.end};
    p.surface = std::string(text.substr(p.span.start, p.span.size()));
    p.head = normalize_head(tokens[j - 1].text, lexicon);
    std::string prefix = text::to_lower(text.substr(p.span.start, tokens[j - 1].span.start - p.span.start));
    p.key = prefix + p.head;
    out.push_back(std::move(p));
    i = j;
  }
  return out;
}

Analysis RuleBasedAnalyzer::analyze(std::string_view text) const {
  Analysis a;
  a.tokens = tokenize(text);
  a.entities = recognize_entities(a.tokens, gazetteer_, text);
  mask_entities(a.tokens, a.entities);
  a.tokens = pos_tag(std::move(a.tokens), lexicon_);
  a.phrases = chunk_noun_phrases(a.tokens, lexicon_, text);
  return a;
}

}  // namespace taxsan::nlp
