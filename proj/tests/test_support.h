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

#ifndef TAXSAN_TESTS_TEST_SUPPORT_H_
#define TAXSAN_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "taxsan/kb/taxonomy_store.h"
#include "taxsan/nlp/lexicon.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::testing {

inline std::filesystem::path fixture(const std::string &name) {
  return std::filesystem::path(TAXSAN_FIXTURE_DIR) / name;
}

inline std::filesystem::path data_file(const std::string &name) {
  return std::filesystem::path(TAXSAN_DATA_DIR) / name;
}

inline std::string read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline kb::TaxonomyStore load_fixture(const std::string &name) { return kb::load_snapshot(fixture(name)); }

inline kb::TaxonomyStore load_text(const std::string &snapshot) {
  std::istringstream in(snapshot);
  return kb::TaxonomyStore::load(in);
}

inline const nlp::RuleBasedAnalyzer &default_analyzer() {
  static const nlp::RuleBasedAnalyzer analyzer(nlp::Lexicon::load(data_file("lexicon.tsv")),
                                               nlp::Gazetteer::load(data_file("gazetteer.tsv")));
  return analyzer;
}

// Random rooted DAG of n concepts n0..n{n-1}; concept i > 0 gets one to
// three parents among lower indices. parents[i] lists them.
struct RandomDag {
  std::vector<std::vector<int>> parents;
  std::string snapshot;
};

inline std::string node_name(int i) {
  std::string s = "n";
  if (i < 10) s += '0';
  return s + std::to_string(i);
}

inline RandomDag random_dag(std::mt19937 &rng, int n) {
  RandomDag dag;
  dag.parents.resize(n);
  std::ostringstream out;
  out << kb::TaxonomyStore::kHeader << "\n";
  for (int i = 0; i < n; ++i) {
    std::set<int> ps;
    if (i > 0) {
      int k = std::uniform_int_distribution<int>(1, std::min(3, i))(rng);
      while (static_cast<int>(ps.size()) < k) ps.insert(std::uniform_int_distribution<int>(0, i - 1)(rng));
    }
    dag.parents[i].assign(ps.begin(), ps.end());
    out << "C\t" << node_name(i) << "\tlabel " << node_name(i) << "\t";
    bool first = true;
    for (int p : ps) {
      out << (first ? "" : ",") << node_name(p);
      first = false;
    }
    out << "\n";
  }
  dag.snapshot = out.str();
  return dag;
}

// Reachability by repeated relaxation; deliberately not a graph search.
inline std::vector<std::set<int>> closure_oracle(const std::vector<std::vector<int>> &parents) {
  const std::size_t n = parents.size();
  std::vector<std::set<int>> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].insert(static_cast<int>(i));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (int p : parents[i]) {
        for (int a : std::set<int>(up[p])) changed |= up[i].insert(a).second;
      }
    }
  }
  return up;
}

}  // namespace taxsan::testing

#endif  // TAXSAN_TESTS_TEST_SUPPORT_H_
