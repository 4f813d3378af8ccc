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

#ifndef TAXSAN_ANNOTATE_DISTANCE_H_
#define TAXSAN_ANNOTATE_DISTANCE_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "taxsan/common/errors.h"
#include "taxsan/kb/knowledge_base.h"

namespace taxsan::annotate {

struct SenseCandidate {
  std::size_t phrase = 0;
  ConceptId concept_id;
  // kb.ancestors(concept_id, /*strict=*/false)
  kb::ConceptSet ancestors;
};

// log2(1 + |A xor B| / |A u B|) over two sorted ranges. Works for any pair of
// sorted containers with the same value type.
template <typename SetA, typename SetB>
double semantic_distance(const SetA &a, const SetB &b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t na = static_cast<std::size_t>(std::distance(a.begin(), a.end()));
  const std::size_t nb = static_cast<std::size_t>(std::distance(b.begin(), b.end()));
  const std::size_t uni = na + nb - common;
  if (uni == 0) throw Error("semantic_distance: both ancestor sets are empty");
  const double ratio = static_cast<double>(uni - common) / static_cast<double>(uni);
  return std::log2(1.0 + ratio);
}

inline double semantic_distance(const SenseCandidate &a, const SenseCandidate &b) {
  return semantic_distance(a.ancestors, b.ancestors);
}

// Symmetric matrix of pairwise distances, zero diagonal.
Eigen::MatrixXd distance_matrix(std::span<const SenseCandidate> senses);

// Builds a candidate with its ancestor closure taken from the knowledge base.
SenseCandidate make_candidate(const kb::KnowledgeBase &kb, std::size_t phrase, const ConceptId &c);

}  // namespace taxsan::annotate

#endif  // TAXSAN_ANNOTATE_DISTANCE_H_
