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

#include "taxsan/annotate/distance.h"

namespace taxsan::annotate {

Eigen::MatrixXd distance_matrix(std::span<const SenseCandidate> senses) {
  const auto n = static_cast<Eigen::Index>(senses.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = semantic_distance(senses[static_cast<std::size_t>(i)], senses[static_cast<std::size_t>(j)]);
    }
  }
  d.triangularView<Eigen::StrictlyLower>() = d.transpose();
  return d;
}

SenseCandidate make_candidate(const kb::KnowledgeBase &kb, std::size_t phrase, const ConceptId &c) {
  return SenseCandidate{phrase, c, kb.ancestors(c, false)};
}

}  // namespace taxsan::annotate
