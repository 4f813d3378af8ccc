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

// Command-line front end:
//   taxsan annotate    annotate a message (and optionally store it)
//   taxsan sanitize    serve a message to a reader
//   taxsan rules       compile | validate privacy requirements
//   taxsan eval        detect | wsd evaluation over a corpus
//
// Exit status: 0 success, 2 validation failure, 1 any other error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "taxsan/annotate/annotator.h"
#include "taxsan/common/errors.h"
#include "taxsan/engine/monitor.h"
#include "taxsan/eval/harness.h"
#include "taxsan/kb/sparql_client.h"
#include "taxsan/kb/taxonomy_store.h"
#include "taxsan/nlp/pipeline.h"
#include "taxsan/policy/rules.h"
#include "taxsan/store/content_store.h"

#ifndef TAXSAN_DATA_DIR
#define TAXSAN_DATA_DIR "data"
#endif

namespace {

using namespace taxsan;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInvalid = 2;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << bytes;
}

struct Common {
  std::string kb;
  std::string lexicon = std::string(TAXSAN_DATA_DIR) + "/lexicon.tsv";
  std::string gazetteer = std::string(TAXSAN_DATA_DIR) + "/gazetteer.tsv";
  std::size_t exhaustive_bound = 10'000;
  std::size_t beam_width = 32;

  void add_kb(CLI::App *cmd) {
    cmd->add_option("--kb", kb, "Taxonomy snapshot (remote endpoint from TAXSAN_KB_ENDPOINT when omitted)");
  }
  void add_nlp(CLI::App *cmd) {
    cmd->add_option("--lexicon", lexicon, "POS lexicon TSV")->capture_default_str();
    cmd->add_option("--gazetteer", gazetteer, "Named-entity gazetteer TSV")->capture_default_str();
    cmd->add_option("--exhaustive-bound", exhaustive_bound, "Largest combination count searched exhaustively")
        ->capture_default_str();
    cmd->add_option("--beam-width", beam_width, "Beam width beyond the exhaustive bound")->capture_default_str();
  }

  std::unique_ptr<kb::KnowledgeBase> open_kb() const {
    if (!kb.empty()) return std::make_unique<kb::TaxonomyStore>(kb::TaxonomyStore::load(kb));
    if (auto remote = kb::SparqlKnowledgeBase::from_environment()) {
      return std::make_unique<kb::SparqlKnowledgeBase>(std::move(*remote));
    }
    throw ConfigurationError("no knowledge base: pass --kb or set TAXSAN_KB_ENDPOINT");
  }
  nlp::RuleBasedAnalyzer analyzer() const {
    return nlp::RuleBasedAnalyzer(nlp::Lexicon::load(lexicon), nlp::Gazetteer::load(gazetteer));
  }
  annotate::DisambiguationOptions options() const {
    annotate::DisambiguationOptions o;
    o.exhaustive_bound = exhaustive_bound;
    o.beam_width = beam_width;
    return o;
  }
};

// Accepts either an annotated message or a raw {message_id, publisher,
// co_publishers, text} document, annotating the latter.
annotate::AnnotatedMessage load_message(const std::string &path, const Common &c, const kb::KnowledgeBase &kb) {
  std::string bytes = read_file(path);
  if (bytes.find("\"phrases\"") != std::string::npos) return annotate::annotated_from_json(bytes);
  annotate::RawMessage raw = annotate::raw_message_from_json(bytes);
  nlp::RuleBasedAnalyzer analyzer = c.analyzer();
  return annotate::Annotator(kb, analyzer, c.options()).annotate(raw);
}

// Accepts a compiled rule set or a requirements document.
policy::RuleSet load_rules(const std::string &path) {
  std::string bytes = read_file(path);
  if (bytes.find("\"rules\"") != std::string::npos) return policy::rules_from_json(bytes);
  return policy::compile_requirements(bytes);
}

int cmd_annotate(const Common &c, const std::string &message, const std::string &out, const std::string &store_root) {
  auto kb = c.open_kb();
  nlp::RuleBasedAnalyzer analyzer = c.analyzer();
  annotate::RawMessage raw = annotate::raw_message_from_json(read_file(message));
  annotate::AnnotationReport report;
  annotate::AnnotatedMessage m = annotate::Annotator(*kb, analyzer, c.options()).annotate(raw, &report);
  if (!store_root.empty()) store::ContentStore(store_root).put_annotated(m);
  write_output(out, annotate::to_json(m));
  std::cerr << "phrases: " << m.phrases.size() << ", distinct keys: " << report.distinct_keys
            << ", kb lookups: " << kb->query_count() << ", search: " << (report.exhaustive ? "exhaustive" : "beam")
            << '\n';
  if (report.unannotated && !m.phrases.empty()) std::cerr << "warning: no phrase has a sense in the knowledge base\n";
  return kOk;
}

int cmd_sanitize(const Common &c, const std::string &message, const std::string &reader,
                 const std::string &contacts, const std::vector<std::string> &rules_files, const std::string &out,
                 const std::string &ledger) {
  auto kb = c.open_kb();
  store::MemoryRepository repo;
  annotate::AnnotatedMessage m = load_message(message, c, *kb);
  for (const std::string &f : rules_files) repo.put_rules(load_rules(f));
  if (!contacts.empty()) repo.set_contacts(policy::ContactGraph::load(contacts));
  repo.put_annotated(m);
  engine::Monitor monitor(*kb, repo);
  engine::SanitizedMessage sm = monitor.handle_access({UserId(reader), m.id});
  std::string text = sm.text;
  if (text.empty() || text.back() != '\n') text += '\n';
  write_output(out, text);
  if (!ledger.empty()) write_output(ledger, sm.ledger_tsv());
  return kOk;
}

int cmd_rules_compile(const Common &c, const std::string &requirements, const std::string &out) {
  policy::RuleSet rules = policy::compile_requirements(read_file(requirements));
  int status = kOk;
  if (!c.kb.empty()) {
    auto kb = c.open_kb();
    policy::ValidationReport report = policy::validate_rules(rules, *kb);
    std::cerr << report.to_text();
    if (!report.ok()) return kInvalid;
    rules = policy::resolve_rules(rules, *kb);
  }
  write_output(out, policy::to_json(rules));
  return status;
}

int cmd_rules_validate(const Common &c, const std::string &rules_file, const std::string &out) {
  auto kb = c.open_kb();
  policy::ValidationReport report = policy::validate_rules(load_rules(rules_file), *kb);
  write_output(out, report.to_text());
  return report.ok() ? kOk : kInvalid;
}

int cmd_eval(const Common &c, bool detect, const std::string &corpus, const std::string &gold_file,
             const std::string &out) {
  auto kb = c.open_kb();
  nlp::RuleBasedAnalyzer analyzer = c.analyzer();
  std::vector<eval::Document> docs = eval::load_corpus(corpus);
  std::ifstream gin(gold_file);
  if (!gin) throw NotFoundError("cannot open gold file " + gold_file);
  eval::EvalContext ctx{*kb, analyzer, c.options()};
  eval::EvalReport report = detect ? eval::evaluate_detection(docs, eval::load_detect_gold(gin), ctx)
                                   : eval::evaluate_disambiguation(docs, eval::load_wsd_gold(gin), ctx);
  write_output(out, report.to_tsv());
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"taxsan: taxonomy-driven sanitization of textual messages"};
  app.require_subcommand(1);
  Common common;

  std::string message, out, store_root, reader, contacts, ledger, requirements, rules_file, corpus, gold;
  std::vector<std::string> rules_files;

  CLI::App *annotate_cmd = app.add_subcommand("annotate", "Annotate a message with taxonomy senses");
  common.add_kb(annotate_cmd);
  common.add_nlp(annotate_cmd);
  annotate_cmd->add_option("--message", message, "Message JSON {message_id, publisher, co_publishers, text}")
      ->required();
  annotate_cmd->add_option("--out", out, "Output file (stdout by default)");
  annotate_cmd->add_option("--store", store_root, "Content store root to persist the annotation in");

  CLI::App *sanitize_cmd = app.add_subcommand("sanitize", "Produce the version of a message a reader may see");
  common.add_kb(sanitize_cmd);
  common.add_nlp(sanitize_cmd);
  sanitize_cmd->add_option("--message", message, "Raw or annotated message JSON")->required();
  sanitize_cmd->add_option("--reader", reader, "Reader user id")->required();
  sanitize_cmd->add_option("--contacts", contacts, "Contact graph TSV (owner, contact, category)");
  sanitize_cmd->add_option("--rules", rules_files, "Rule set or requirements JSON; repeat per party");
  sanitize_cmd->add_option("--out", out, "Sanitized text output (stdout by default)");
  sanitize_cmd->add_option("--ledger", ledger, "Substitution ledger TSV output");

  CLI::App *rules_cmd = app.add_subcommand("rules", "Compile or validate privacy rules");
  rules_cmd->require_subcommand(1);
  CLI::App *compile_cmd = rules_cmd->add_subcommand("compile", "Compile a requirements document into rules");
  common.add_kb(compile_cmd);
  compile_cmd->add_option("requirements,--rules", requirements, "Requirements JSON")->required();
  compile_cmd->add_option("--out", out, "Rule set output (stdout by default)");
  CLI::App *validate_cmd = rules_cmd->add_subcommand("validate", "Check rule labels against the taxonomy");
  common.add_kb(validate_cmd);
  validate_cmd->add_option("--rules", rules_file, "Rule set or requirements JSON")->required();
  validate_cmd->add_option("--out", out, "Report output (stdout by default)");

  CLI::App *eval_cmd = app.add_subcommand("eval", "Score detection or disambiguation against gold data");
  eval_cmd->require_subcommand(1);
  CLI::App *detect_cmd = eval_cmd->add_subcommand("detect", "Sensitive-term detection");
  CLI::App *wsd_cmd = eval_cmd->add_subcommand("wsd", "Sense disambiguation");
  for (CLI::App *cmd : {detect_cmd, wsd_cmd}) {
    common.add_kb(cmd);
    common.add_nlp(cmd);
    cmd->add_option("--corpus", corpus, "Corpus JSON")->required();
    cmd->add_option("--gold", gold, "Gold TSV")->required();
    cmd->add_option("--out", out, "Report output (stdout by default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*annotate_cmd) return cmd_annotate(common, message, out, store_root);
    if (*sanitize_cmd) return cmd_sanitize(common, message, reader, contacts, rules_files, out, ledger);
    if (*compile_cmd) return cmd_rules_compile(common, requirements, out);
    if (*validate_cmd) return cmd_rules_validate(common, rules_file, out);
    if (*detect_cmd) return cmd_eval(common, true, corpus, gold, out);
    if (*wsd_cmd) return cmd_eval(common, false, corpus, gold, out);
  } catch (const ValidationError &e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ConflictError &e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
