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

#ifndef TAXSAN_EVAL_HARNESS_H_
#define TAXSAN_EVAL_HARNESS_H_

#include <compare>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/annotate/disambiguator.h"
#include "taxsan/kb/knowledge_base.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::eval {

struct Document {
  std::string id;
  std::string text;
  std::string topic;
  std::vector<std::string> access_levels;
};

// {"documents": [{"id", "text", "topic", "access_levels": [...]}]}
std::vector<Document> parse_corpus(std::string_view json);
std::vector<Document> load_corpus(const std::filesystem::path &path);

// A term occurrence. Detection compares (doc, al, start, end); sense scoring
// compares (doc, start, end, value) with value the concept id.
struct Occurrence {
  std::string doc;
  std::string al;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string value;

  friend auto operator<=>(const Occurrence &, const Occurrence &) = default;
};

// Detection gold: doc-id, al-label, start, end, surface. The surface is
// informational and not compared.
std::set<Occurrence> load_detect_gold(std::istream &in);
// Sense gold: doc-id, al-label (ignored), start, end, gold-concept.
std::set<Occurrence> load_wsd_gold(std::istream &in);

struct EvalRow {
  std::string doc;
  std::string al;
  std::size_t gold = 0;      // |H|
  std::size_t system = 0;    // |S|
  std::size_t correct = 0;   // |S n H|
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f_measure;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  // Pooled counts over all rows.
  EvalRow total;

  std::string to_tsv() const;
};

EvalRow make_row(std::string doc, std::string al, const std::set<Occurrence> &s, const std::set<Occurrence> &h);

struct EvalContext {
  const kb::KnowledgeBase &kb;
  const nlp::Analyzer &analyzer;
  annotate::DisambiguationOptions options;
};

// Annotates and sanitizes every document under each of its access levels;
// S is the set of sanitized occurrences. One row per (document, level) in
// corpus order.
EvalReport evaluate_detection(const std::vector<Document> &corpus, const std::set<Occurrence> &gold,
                              const EvalContext &ctx);

// Scores chosen senses of phrase occurrences listed in the gold file. One row
// per document.
EvalReport evaluate_disambiguation(const std::vector<Document> &corpus, const std::set<Occurrence> &gold,
                                   const EvalContext &ctx);

}  // namespace taxsan::eval

#endif  // TAXSAN_EVAL_HARNESS_H_
