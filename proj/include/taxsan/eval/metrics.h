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

#ifndef TAXSAN_EVAL_METRICS_H_
#define TAXSAN_EVAL_METRICS_H_

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>

namespace taxsan::eval {

// Percentages in [0, 100]; nullopt where the ratio is undefined.

template <typename Set>
std::size_t intersection_size(const Set &s, const Set &h) {
  std::size_t n = 0;
  for (const auto &x : s) n += static_cast<std::size_t>(h.count(x));
  return n;
}

// |S n H| / |S|. An empty S scores 100 against an empty H and is undefined
// otherwise.
inline std::optional<double> precision(std::size_t hits, std::size_t s_size, std::size_t h_size) {
  if (s_size == 0) return h_size == 0 ? std::optional<double>(100.0) : std::nullopt;
  return 100.0 * static_cast<double>(hits) / static_cast<double>(s_size);
}

// |S n H| / |H|; undefined for an empty H.
inline std::optional<double> recall(std::size_t hits, std::size_t h_size) {
  if (h_size == 0) return std::nullopt;
  return 100.0 * static_cast<double>(hits) / static_cast<double>(h_size);
}

template <typename Set>
  requires requires(const Set &x) { x.size(); }
std::optional<double> precision(const Set &s, const Set &h) {
  return precision(intersection_size(s, h), s.size(), h.size());
}

template <typename Set>
  requires requires(const Set &x) { x.size(); }
std::optional<double> recall(const Set &s, const Set &h) {
  return recall(intersection_size(s, h), h.size());
}

// Harmonic mean; 0 when p + r = 0.
inline double f_measure(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

inline std::optional<double> f_measure(std::optional<double> p, std::optional<double> r) {
  if (!p || !r) return std::nullopt;
  return f_measure(*p, *r);
}

}  // namespace taxsan::eval

#endif  // TAXSAN_EVAL_METRICS_H_
