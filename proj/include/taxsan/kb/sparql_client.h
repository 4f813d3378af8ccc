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
#ifndef TAXSAN_KB_SPARQL_CLIENT_H_
#define TAXSAN_KB_SPARQL_CLIENT_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsan/kb/knowledge_base.h"

namespace taxsan::kb {

// SPARQL query text and result parsing, kept free of any transport so the
// queries can be checked in isolation.
namespace sparql {

constexpr const char *kEndpointEnv = "TAXSAN_KB_ENDPOINT";

// Object properties followed when expanding related resources.
constexpr const char *kPropertyNamespace = "http://dbpedia.org/ontology/";

using Row = std::map<std::string, std::string>;

std::string escape_literal(std::string_view s);

std::string lookup_query(std::string_view phrase, int limit);
std::string resource_query(const std::string &iri);
std::string properties_query(const std::string &iri);
std::string categories_query(const std::string &iri);
std::string ancestors_query(const std::string &iri);
std::string branch_query(const std::string &iri);
std::string parents_query(const std::string &iri);
std::string label_query(const std::string &iri);
std::string concepts_by_label_query(std::string_view label);
std::string resources_by_title_query(std::string_view title);

// Parses an application/sparql-results+json document into one map per
// binding (variable -> lexical value). Throws RemoteError on malformed input.
std::vector<Row> parse_results(std::string_view body);

}  // namespace sparql

// Knowledge base backed by a remote SPARQL endpoint (DBpedia layout:
// rdfs:label titles, dct:subject categories, skos:broader hierarchy).
// Concept and resource ids are IRIs.
class SparqlKnowledgeBase final : public KnowledgeBase {
 public:
  // endpoint_url like "http://host:8890/sparql".
  explicit SparqlKnowledgeBase(std::string endpoint_url, int lookup_limit = 100);
  ~SparqlKnowledgeBase() override;
  SparqlKnowledgeBase(SparqlKnowledgeBase &&) noexcept;
  SparqlKnowledgeBase &operator=(SparqlKnowledgeBase &&) noexcept;

  // Endpoint from TAXSAN_KB_ENDPOINT, or nullopt when unset.
  static std::optional<SparqlKnowledgeBase> from_environment();

  std::vector<Resource> lookup_resources(std::string_view phrase) const override;
  std::optional<Resource> resource(const ResourceId &id) const override;
  ConceptSet ancestors(const ConceptId &c, bool strict = false) const override;
  ConceptSet branch(const ConceptId &root) const override;
  std::vector<ConceptId> parents(const ConceptId &c) const override;
  std::string label(const ConceptId &c) const override;
  bool contains(const ConceptId &c) const override;
  std::vector<ConceptId> find_concepts_by_label(std::string_view label) const override;
  std::vector<Resource> find_resources_by_title(std::string_view title) const override;

  std::vector<sparql::Row> select(const std::string &query) const;

 private:
  Resource fill(ResourceId id, std::string title) const;

  struct Transport;
  std::unique_ptr<Transport> transport_;
  int lookup_limit_;
};

}  // namespace taxsan::kb

#endif  // TAXSAN_KB_SPARQL_CLIENT_H_
