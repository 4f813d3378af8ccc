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
#include "taxsan/kb/sparql_client.h"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <regex>

#include "httplib.h"
#include "json.hpp"
#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"

namespace taxsan::kb {
namespace sparql {
namespace {

constexpr const char *kPrefixes =
    "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n"
    "PREFIX skos: <http://www.w3.org/2004/02/skos/core#>\n"
    "PREFIX dct: <http://purl.org/dc/terms/>\n";

std::string iri(const std::string &s) {
  // Angle brackets, quotes and whitespace are not legal inside an IRIREF.
  for (char c : s) {
    if (c == '<' || c == '>' || c == '"' || c == ' ' || c == '\n' || c == '{' || c == '}') {
      throw RemoteError("illegal character in IRI '" + s + "'");
    }
  }
  return "<" + s + ">";
}

}  // namespace

std::string escape_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string lookup_query(std::string_view phrase, int limit) {
  return std::string(kPrefixes) +
         "SELECT DISTINCT ?r ?title WHERE {\n"
         "  ?r rdfs:label ?title .\n"
         "  FILTER(LANG(?title) = \"en\")\n"
         "  FILTER(CONTAINS(REPLACE(LCASE(STR(?title)), \"_\", \" \"), \"" +
         escape_literal(text::normalize_label(phrase)) +
         "\"))\n"
         "  FILTER EXISTS { ?r dct:subject ?any }\n"
         "} ORDER BY ?r LIMIT " +
         std::to_string(limit);
}

std::string resource_query(const std::string &r) {
  return std::string(kPrefixes) + "SELECT ?title WHERE { " + iri(r) +
         " rdfs:label ?title . FILTER(LANG(?title) = \"en\") } LIMIT 1";
}

std::string properties_query(const std::string &r) {
  return std::string(kPrefixes) + "SELECT DISTINCT ?p ?o WHERE {\n  " + iri(r) +
         " ?p ?o .\n  FILTER(isIRI(?o) && STRSTARTS(STR(?p), \"" + kPropertyNamespace +
         "\"))\n  FILTER EXISTS { ?o dct:subject ?any }\n} ORDER BY ?p ?o";
}

std::string categories_query(const std::string &r) {
  return std::string(kPrefixes) + "SELECT DISTINCT ?c WHERE { " + iri(r) +
         " dct:subject ?c } ORDER BY ?c";
}

std::string ancestors_query(const std::string &c) {
  return std::string(kPrefixes) + "SELECT DISTINCT ?a WHERE { " + iri(c) +
         " skos:broader* ?a } ORDER BY ?a";
}

std::string branch_query(const std::string &c) {
  return std::string(kPrefixes) + "SELECT DISTINCT ?d WHERE { ?d skos:broader+ " + iri(c) +
         " } ORDER BY ?d";
}

std::string parents_query(const std::string &c) {
  return std::string(kPrefixes) + "SELECT DISTINCT ?p WHERE { " + iri(c) +
         " skos:broader ?p } ORDER BY ?p";
}

std::string label_query(const std::string &c) {
  return std::string(kPrefixes) + "SELECT ?l WHERE { " + iri(c) +
         " rdfs:label ?l } ORDER BY ?l LIMIT 1";
}

std::string concepts_by_label_query(std::string_view label) {
  return std::string(kPrefixes) +
         "SELECT DISTINCT ?c WHERE {\n  ?c a skos:Concept ; rdfs:label ?l .\n"
         "  FILTER(REPLACE(LCASE(STR(?l)), \"_\", \" \") = \"" +
         escape_literal(text::normalize_label(label)) + "\")\n} ORDER BY ?c";
}

std::string resources_by_title_query(std::string_view title) {
  return std::string(kPrefixes) +
         "SELECT DISTINCT ?r ?title WHERE {\n  ?r rdfs:label ?title ; dct:subject ?any .\n"
         "  FILTER(REPLACE(LCASE(STR(?title)), \"_\", \" \") = \"" +
         escape_literal(text::normalize_label(title)) + "\")\n} ORDER BY ?r";
}

std::vector<Row> parse_results(std::string_view body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception &e) {
    throw RemoteError(std::string("malformed SPARQL result: ") + e.what());
  }
  if (!doc.contains("results") || !doc["results"].contains("bindings") ||
      !doc["results"]["bindings"].is_array()) {
    throw RemoteError("SPARQL result has no results.bindings array");
  }
  std::vector<Row> rows;
  for (const auto &binding : doc["results"]["bindings"]) {
    Row row;
    for (auto it = binding.begin(); it != binding.end(); ++it) {
      if (!it.value().contains("value")) throw RemoteError("binding without value");
      row[it.key()] = it.value()["value"].get<std::string>();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sparql

struct SparqlKnowledgeBase::Transport {
  std::string base;  // scheme://host[:port]
  std::string path;
  std::mutex mu;     // httplib::Client is not safe for concurrent use
  std::unique_ptr<httplib::Client> client;
};

SparqlKnowledgeBase::SparqlKnowledgeBase(std::string endpoint_url, int lookup_limit)
    : transport_(std::make_unique<Transport>()), lookup_limit_(lookup_limit) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(endpoint_url, m, kUrl)) {
    throw ConfigurationError("invalid SPARQL endpoint URL '" + endpoint_url + "'");
  }
  transport_->base = m[1];
  transport_->path = m[2].matched ? std::string(m[2]) : "/sparql";
  transport_->client = std::make_unique<httplib::Client>(transport_->base);
  transport_->client->set_connection_timeout(5);
  transport_->client->set_read_timeout(30);
}

SparqlKnowledgeBase::~SparqlKnowledgeBase() = default;
SparqlKnowledgeBase::SparqlKnowledgeBase(SparqlKnowledgeBase &&) noexcept = default;
SparqlKnowledgeBase &SparqlKnowledgeBase::operator=(SparqlKnowledgeBase &&) noexcept = default;

std::optional<SparqlKnowledgeBase> SparqlKnowledgeBase::from_environment() {
  const char *url = std::getenv(sparql::kEndpointEnv);
  if (!url || !*url) return std::nullopt;
  return SparqlKnowledgeBase(url);
}

std::vector<sparql::Row> SparqlKnowledgeBase::select(const std::string &query) const {
  std::lock_guard<std::mutex> lock(transport_->mu);
  httplib::Params params{{"query", query}, {"format", "application/sparql-results+json"}};
  httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
  auto res = transport_->client->Get(transport_->path, params, headers);
  if (!res) {
    throw RemoteError("SPARQL request to " + transport_->base + " failed: " +
                      httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw RemoteError("SPARQL endpoint returned HTTP " + std::to_string(res->status));
  }
  return sparql::parse_results(res->body);
}

Resource SparqlKnowledgeBase::fill(ResourceId id, std::string title) const {
  Resource r{std::move(id), std::move(title), ConceptId(), {}, {}};
  r.concept_id = ConceptId(r.id.str());
  for (auto &row : select(sparql::properties_query(r.id.str()))) {
    r.properties.emplace_back(row["p"], ResourceId(row["o"]));
  }
  for (auto &row : select(sparql::categories_query(r.id.str()))) {
    r.categories.emplace_back(row["c"]);
  }
  std::sort(r.properties.begin(), r.properties.end());
  std::sort(r.categories.begin(), r.categories.end());
  return r;
}

std::vector<Resource> SparqlKnowledgeBase::lookup_resources(std::string_view phrase) const {
  count_lookup();
  std::vector<Resource> out;
  if (text::normalize_label(phrase).empty()) return out;
  for (auto &row : select(sparql::lookup_query(phrase, lookup_limit_))) {
    out.push_back(fill(ResourceId(row["r"]), row["title"]));
  }
  std::sort(out.begin(), out.end(), [](const Resource &a, const Resource &b) { return a.id < b.id; });
  return out;
}

std::optional<Resource> SparqlKnowledgeBase::resource(const ResourceId &id) const {
  auto rows = select(sparql::resource_query(id.str()));
  if (rows.empty()) return std::nullopt;
  return fill(id, rows.front()["title"]);
}

ConceptSet SparqlKnowledgeBase::ancestors(const ConceptId &c, bool strict) const {
  if (!contains(c)) throw NotFoundError("unknown concept '" + c.str() + "'");
  ConceptSet out{c};
  for (auto &row : select(sparql::ancestors_query(c.str()))) out.emplace(row["a"]);
  if (strict) out.erase(c);
  return out;
}

ConceptSet SparqlKnowledgeBase::branch(const ConceptId &root) const {
  count_branch();
  if (!contains(root)) throw NotFoundError("unknown concept '" + root.str() + "'");
  ConceptSet out;
  for (auto &row : select(sparql::branch_query(root.str()))) out.emplace(row["d"]);
  out.erase(root);
  return out;
}

std::vector<ConceptId> SparqlKnowledgeBase::parents(const ConceptId &c) const {
  std::vector<ConceptId> out;
  for (auto &row : select(sparql::parents_query(c.str()))) out.emplace_back(row["p"]);
  return out;
}

std::string SparqlKnowledgeBase::label(const ConceptId &c) const {
  auto rows = select(sparql::label_query(c.str()));
  if (rows.empty()) {
    // Category IRIs end in the label with underscores.
    const std::string &s = c.str();
    auto pos = s.find_last_of("/:");
    std::string tail = pos == std::string::npos ? s : s.substr(pos + 1);
    std::replace(tail.begin(), tail.end(), '_', ' ');
    return tail;
  }
  return rows.front()["l"];
}

bool SparqlKnowledgeBase::contains(const ConceptId &c) const {
  // Any IRI is a node of the remote graph; emptiness is the only invalid id.
  return !c.empty();
}

std::vector<ConceptId> SparqlKnowledgeBase::find_concepts_by_label(std::string_view label) const {
  std::vector<ConceptId> out;
  for (auto &row : select(sparql::concepts_by_label_query(label))) out.emplace_back(row["c"]);
  return out;
}

std::vector<Resource> SparqlKnowledgeBase::find_resources_by_title(std::string_view title) const {
  std::vector<Resource> out;
  for (auto &row : select(sparql::resources_by_title_query(title))) {
    out.push_back(fill(ResourceId(row["r"]), row["title"]));
  }
  return out;
}

}  // namespace taxsan::kb
