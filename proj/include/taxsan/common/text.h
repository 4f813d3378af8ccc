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
#ifndef TAXSAN_COMMON_TEXT_H_
#define TAXSAN_COMMON_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace taxsan::text {

// ASCII lowercase; bytes >= 0x80 are left untouched.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Lowercases, maps '_' to ' ' and collapses runs of whitespace. Used for
// title and label matching.
std::string normalize_label(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

bool starts_with_upper(std::string_view s);

}  // namespace taxsan::text

#endif  // TAXSAN_COMMON_TEXT_H_
