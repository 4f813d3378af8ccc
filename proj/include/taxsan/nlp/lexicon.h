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

#ifndef TAXSAN_NLP_LEXICON_H_
#define TAXSAN_NLP_LEXICON_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/nlp/types.h"

namespace taxsan::nlp {

// POS lexicon: lowercased surface -> tag. TSV "surface<TAB>tag" with tags
// NN, NNS, NNP or other; '#' comments.
class Lexicon {
 public:
  static Lexicon load(std::istream &in);
  static Lexicon load(const std::filesystem::path &path);

  void add(std::string_view surface, PosTag tag);
  std::optional<PosTag> find(std::string_view word) const;
  bool is_known_noun(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, PosTag, std::less<>> entries_;
};

// Named-entity gazetteer. TSV "surface<TAB>category" where category is one
// of Time, Location, Organization, Person, Money, Percent, Date. Surfaces
// may span several tokens and match case-sensitively.
class Gazetteer {
 public:
  struct Entry {
    std::vector<std::string> tokens;
    EntityCategory category;
  };

  static Gazetteer load(std::istream &in);
  static Gazetteer load(const std::filesystem::path &path);

  void add(std::string_view surface, EntityCategory category);

  // Longest entry whose tokens match texts starting at pos.
  const Entry *longest_match(const std::vector<std::string_view> &texts, std::size_t pos) const;
  std::size_t size() const { return entries_.size(); }

 private:
  // Keyed by first token.
  std::multimap<std::string, Entry, std::less<>> entries_;
};

}  // namespace taxsan::nlp

#endif  // TAXSAN_NLP_LEXICON_H_
