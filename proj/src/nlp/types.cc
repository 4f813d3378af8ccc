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

#include "taxsan/nlp/types.h"

namespace taxsan::nlp {

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNN: return "NN";
    case PosTag::kNNS: return "NNS";
    case PosTag::kNNP: return "NNP";
    case PosTag::kOther: return "other";
  }
  return "other";
}

std::optional<PosTag> parse_pos_tag(std::string_view s) {
  if (s == "NN") return PosTag::kNN;
  if (s == "NNS") return PosTag::kNNS;
  if (s == "NNP") return PosTag::kNNP;
  if (s == "other") return PosTag::kOther;
  return std::nullopt;
}

std::string_view to_string(EntityCategory c) {
  switch (c) {
    case EntityCategory::kTime: return "Time";
    case EntityCategory::kLocation: return "Location";
    case EntityCategory::kOrganization: return "Organization";
    case EntityCategory::kPerson: return "Person";
    case EntityCategory::kMoney: return "Money";
    case EntityCategory::kPercent: return "Percent";
    case EntityCategory::kDate: return "Date";
  }
  return "Person";
}

std::optional<EntityCategory> parse_entity_category(std::string_view s) {
  for (EntityCategory c : kAllEntityCategories) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

}  // namespace taxsan::nlp
