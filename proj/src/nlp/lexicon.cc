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

#include "taxsan/nlp/lexicon.h"

#include <fstream>

#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::nlp {
namespace {

// Calls fn(surface, value, lineno) for each non-comment TSV line.
template <typename Fn>
void read_tsv(std::istream &in, Fn fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected surface<TAB>value", lineno);
    auto surface = text::trim(std::string_view(line).substr(0, tab));
    auto value = text::trim(std::string_view(line).substr(tab + 1));
    if (surface.empty() || value.empty()) throw ParseError("empty field", lineno);
    fn(surface, value, lineno);
  }
}

}  // namespace

Lexicon Lexicon::load(std::istream &in) {
  Lexicon lex;
  read_tsv(in, [&](std::string_view surface, std::string_view value, std::size_t lineno) {
    auto tag = parse_pos_tag(value);
    if (!tag) throw ParseError("unknown POS tag '" + std::string(value) + "'", lineno);
    lex.add(surface, *tag);
  });
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open lexicon " + path.string());
  return load(in);
}

void Lexicon::add(std::string_view surface, PosTag tag) {
  entries_[text::to_lower(surface)] = tag;
}

std::optional<PosTag> Lexicon::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_known_noun(std::string_view word) const {
  auto tag = find(word);
  return tag && is_noun(*tag);
}

Gazetteer Gazetteer::load(std::istream &in) {
  Gazetteer g;
  read_tsv(in, [&](std::string_view surface, std::string_view value, std::size_t lineno) {
    auto cat = parse_entity_category(value);
    if (!cat) throw ParseError("unknown entity category '" + std::string(value) + "'", lineno);
    g.add(surface, *cat);
  });
  return g;
}

Gazetteer Gazetteer::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open gazetteer " + path.string());
  return load(in);
}

void Gazetteer::add(std::string_view surface, EntityCategory category) {
  Entry e;
  for (const Token &t : tokenize(surface)) e.tokens.push_back(t.text);
  if (e.tokens.empty()) return;
  e.category = category;
  std::string first = e.tokens.front();
  entries_.emplace(std::move(first), std::move(e));
}

const Gazetteer::Entry *Gazetteer::longest_match(const std::vector<std::string_view> &texts,
                                                 std::size_t pos) const {
  const Entry *best = nullptr;
  auto [lo, hi] = entries_.equal_range(texts[pos]);
  for (auto it = lo; it != hi; ++it) {
    const Entry &e = it->second;
    if (pos + e.tokens.size() > texts.size()) continue;
    bool ok = true;
    for (std::size_t k = 1; k < e.tokens.size() && ok; ++k) ok = texts[pos + k] == e.tokens[k];
    if (ok && (!best || e.tokens.size() > best->tokens.size())) best = &e;
  }
  return best;
}

}  // namespace taxsan::nlp
