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

#include "taxsan/eval/harness.h"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "taxsan/annotate/annotator.h"
#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"
#include "taxsan/engine/sanitizer.h"
#include "taxsan/eval/metrics.h"
#include "taxsan/policy/access_level.h"
#include "taxsan/policy/topics.h"

namespace taxsan::eval {
namespace {

using Json = nlohmann::json;

struct GoldLine {
  std::string doc, al;
  std::size_t start = 0, end = 0;
  std::string last;
};

std::vector<GoldLine> read_gold(std::istream &in) {
  std::vector<GoldLine> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string> f = text::split(line, '\t');
    if (f.size() != 5) throw ParseError("expected 5 tab-separated fields", lineno);
    GoldLine g{f[0], f[1], 0, 0, f[4]};
    try {
      std::size_t used = 0;
      g.start = std::stoul(f[2], &used);
      if (used != f[2].size()) throw std::invalid_argument("start");
      g.end = std::stoul(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument("end");
    } catch (const std::exception &) {
      throw ParseError("start and end must be non-negative integers", lineno);
    }
    if (g.end < g.start) throw ParseError("end before start", lineno);
    out.push_back(std::move(g));
  }
  return out;
}

std::string percent(const std::optional<double> &v) {
  if (!v) return "N/A";
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << *v;
  return s.str();
}

annotate::AnnotatedMessage annotate_document(const Document &d, const EvalContext &ctx) {
  annotate::RawMessage raw{MessageId(d.id), UserId("eval"), {}, d.text};
  return annotate::Annotator(ctx.kb, ctx.analyzer, ctx.options).annotate(raw);
}

engine::EffectivePolicy policy_for(const Document &d, const std::string &label, const kb::KnowledgeBase &kb) {
  engine::TopicLevel tl;
  tl.topic = d.topic.empty() ? "*" : d.topic;
  const policy::Topic *topic = policy::TopicCatalog::system().find(d.topic);
  if (text::normalize_label(label) == "null") {
    tl.al = policy::AccessLevel::null();
    if (topic) {
      tl.entity = topic->entity;
      for (const std::string &l : topic->scope) {
        for (const ConceptId &c : policy::resolve_label(kb, l)) tl.scope.insert(c);
      }
    }
  } else {
    tl.al = policy::resolve(policy::AccessLevel::concept_labels({label}), kb);
  }
  return engine::EffectivePolicy{{std::move(tl)}};
}

void add_to_total(EvalRow &total, const EvalRow &row) {
  total.gold += row.gold;
  total.system += row.system;
  total.correct += row.correct;
}

void finish_total(EvalReport &r) {
  r.total.doc = "total";
  r.total.al = "*";
  r.total.precision = precision(r.total.correct, r.total.system, r.total.gold);
  r.total.recall = recall(r.total.correct, r.total.gold);
  r.total.f_measure = f_measure(r.total.precision, r.total.recall);
}

}  // namespace

std::vector<Document> parse_corpus(std::string_view json) {
  try {
    Json j = Json::parse(json);
    std::vector<Document> out;
    for (const Json &d : j.at("documents")) {
      Document doc;
      doc.id = d.at("id").get<std::string>();
      doc.text = d.at("text").get<std::string>();
      doc.topic = d.value("topic", std::string());
      doc.access_levels = d.value("access_levels", std::vector<std::string>{});
      out.push_back(std::move(doc));
    }
    return out;
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("malformed corpus: ") + e.what());
  }
}

std::vector<Document> load_corpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open corpus: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

std::set<Occurrence> load_detect_gold(std::istream &in) {
  std::set<Occurrence> out;
  for (GoldLine &g : read_gold(in)) out.insert({std::move(g.doc), std::move(g.al), g.start, g.end, ""});
  return out;
}

std::set<Occurrence> load_wsd_gold(std::istream &in) {
  std::set<Occurrence> out;
  for (GoldLine &g : read_gold(in)) out.insert({std::move(g.doc), "", g.start, g.end, std::move(g.last)});
  return out;
}

EvalRow make_row(std::string doc, std::string al, const std::set<Occurrence> &s, const std::set<Occurrence> &h) {
  EvalRow row;
  row.doc = std::move(doc);
  row.al = std::move(al);
  row.gold = h.size();
  row.system = s.size();
  row.correct = intersection_size(s, h);
  row.precision = precision(row.correct, row.system, row.gold);
  row.recall = recall(row.correct, row.gold);
  row.f_measure = f_measure(row.precision, row.recall);
  return row;
}

std::string EvalReport::to_tsv() const {
  std::ostringstream out;
  out << "doc\tal\tH\tS\tS&H\tprecision\trecall\tf_measure\n";
  auto emit = [&](const EvalRow &r) {
    out << r.doc << '\t' << r.al << '\t' << r.gold << '\t' << r.system << '\t' << r.correct << '\t'
        << percent(r.precision) << '\t' << percent(r.recall) << '\t' << percent(r.f_measure) << '\n';
  };
  for (const EvalRow &r : rows) emit(r);
  emit(total);
  return out.str();
}

EvalReport evaluate_detection(const std::vector<Document> &corpus, const std::set<Occurrence> &gold,
                              const EvalContext &ctx) {
  EvalReport report;
  for (const Document &d : corpus) {
    annotate::AnnotatedMessage m = annotate_document(d, ctx);
    for (const std::string &label : d.access_levels) {
      engine::SanitizedMessage sm = engine::sanitize(m, policy_for(d, label, ctx.kb), ctx.kb);
      std::set<Occurrence> s;
      for (const engine::Substitution &sub : sm.substitutions) s.insert({d.id, label, sub.span.start, sub.span.end, ""});
      std::set<Occurrence> h;
      for (const Occurrence &o : gold) {
        if (o.doc == d.id && o.al == label) h.insert(o);
      }
      EvalRow row = make_row(d.id, label, s, h);
      add_to_total(report.total, row);
      report.rows.push_back(std::move(row));
    }
  }
  finish_total(report);
  return report;
}

EvalReport evaluate_disambiguation(const std::vector<Document> &corpus, const std::set<Occurrence> &gold,
                                   const EvalContext &ctx) {
  EvalReport report;
  for (const Document &d : corpus) {
    std::set<Occurrence> h;
    for (const Occurrence &o : gold) {
      if (o.doc == d.id) h.insert(o);
    }
    annotate::AnnotatedMessage m = annotate_document(d, ctx);
    std::set<Occurrence> s;
    for (const annotate::AnnotatedPhrase &p : m.phrases) {
      if (!p.chosen) continue;
      // Only occurrences the gold file judges are scored.
      bool judged = std::any_of(h.begin(), h.end(), [&](const Occurrence &o) {
        return o.start == p.phrase.span.start && o.end == p.phrase.span.end;
      });
      if (judged) s.insert({d.id, "", p.phrase.span.start, p.phrase.span.end, p.chosen->str()});
    }
    EvalRow row = make_row(d.id, "senses", s, h);
    add_to_total(report.total, row);
    report.rows.push_back(std::move(row));
  }
  finish_total(report);
  return report;
}

}  // namespace taxsan::eval
