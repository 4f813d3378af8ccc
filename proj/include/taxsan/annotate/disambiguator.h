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

#ifndef TAXSAN_ANNOTATE_DISAMBIGUATOR_H_
#define TAXSAN_ANNOTATE_DISAMBIGUATOR_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "taxsan/annotate/distance.h"

namespace taxsan::annotate {

enum class SearchStrategy { kAuto, kExhaustive, kBeam };

struct DisambiguationOptions {
  // Exhaustive search is used while the number of combinations stays at or
  // below this bound.
  std::size_t exhaustive_bound = 10'000;
  std::size_t beam_width = 32;
  SearchStrategy strategy = SearchStrategy::kAuto;
};

struct Disambiguation {
  // One entry per input group; nullopt for groups without candidates.
  std::vector<std::optional<ConceptId>> chosen;
  // Sum of pairwise distances of the chosen senses.
  double cost = 0.0;
  bool exhaustive = true;
  // Set when no group had a candidate.
  bool empty = false;
};

// Picks one sense per group minimizing the sum of semantic distances over all
// unordered pairs of chosen senses. Ties go to the lexicographically smallest
// tuple of concept ids (groups in input order). The result does not depend
// on the order of candidates within a group.
Disambiguation disambiguate(const std::vector<std::vector<SenseCandidate>> &groups,
                            const DisambiguationOptions &options = {});

}  // namespace taxsan::annotate

#endif  // TAXSAN_ANNOTATE_DISAMBIGUATOR_H_
