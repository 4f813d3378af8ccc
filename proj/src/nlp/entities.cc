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

#include <algorithm>
#include <array>
#include <optional>
#include <regex>

#include "taxsan/common/text.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::nlp {
namespace {

using Texts = std::vector<std::string_view>;

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};
constexpr std::array<std::string_view, 11> kMonthAbbrevs = {"Jan", "Feb", "Mar", "Apr", "Jun", "Jul",
                                                            "Aug", "Sep", "Sept", "Oct", "Nov"};
constexpr std::array<std::string_view, 7> kWeekdays = {"Monday", "Tuesday",  "Wednesday", "Thursday",
                                                       "Friday", "Saturday", "Sunday"};
constexpr std::array<std::string_view, 9> kHonorifics = {"Mr", "Mrs", "Ms", "Miss", "Dr",
                                                         "Prof", "Sir", "Madam", "Lady"};
constexpr std::array<std::string_view, 9> kCompanySuffixes = {"Inc", "Corp", "Corporation", "Ltd",
                                                              "LLC", "GmbH", "Co", "PLC", "AG"};
constexpr std::array<std::string_view, 3> kCurrencySymbols = {"$", "€", "£"};
constexpr std::array<std::string_view, 9> kCurrencyWords = {"dollars", "dollar", "euros", "euro", "pounds",
                                                            "USD",     "EUR",    "GBP",   "cents"};
constexpr std::array<std::string_view, 4> kMagnitudes = {"thousand", "million", "billion", "trillion"};

template <std::size_t N>
bool one_of(const std::array<std::string_view, N> &set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

bool is_number(std::string_view s) {
  static const std::regex re(R"(\d+([.,]\d+)*)");
  return std::regex_match(s.begin(), s.end(), re);
}

bool is_small_int(std::string_view s, int lo, int hi) {
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  int v = std::stoi(std::string(s));
  return v >= lo && v <= hi;
}

bool is_year(std::string_view s) {
  return s.size() == 4 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_day(std::string_view s) {
  static const std::regex re(R"((\d{1,2})(st|nd|rd|th)?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(s.begin(), s.end(), m, re)) return false;
  int v = std::stoi(m[1].str());
  return v >= 1 && v <= 31;
}

bool is_month(std::string_view s) { return one_of(kMonths, s) || one_of(kMonthAbbrevs, s); }

bool is_capitalized(std::string_view s) { return text::starts_with_upper(s); }

std::string_view at(const Texts &t, std::size_t i) { return i < t.size() ? t[i] : std::string_view{}; }

// Each matcher returns the number of tokens consumed starting at i, or 0.

std::size_t match_date(const Texts &t, std::size_t i) {
  static const std::regex iso(R"(\d{4}-\d{2}-\d{2})");
  static const std::regex slashed(R"(\d{1,2}/\d{1,2}/\d{2,4})");
  std::string_view w = at(t, i);
  if (std::regex_match(w.begin(), w.end(), iso) || std::regex_match(w.begin(), w.end(), slashed)) return 1;
  // DAY [of] MONTH [YEAR]
  if (is_day(w)) {
    std::size_t j = i + 1;
    if (at(t, j) == "of") ++j;
    if (is_month(at(t, j))) {
      return is_year(at(t, j + 1)) ? j + 2 - i : j + 1 - i;
    }
  }
  if (is_month(w)) {
    // MONTH DAY [,] YEAR, MONTH DAY
    if (is_day(at(t, i + 1))) {
      if (is_year(at(t, i + 2))) return 3;
      if (at(t, i + 2) == "," && is_year(at(t, i + 3))) return 4;
      return w == "May" && !is_small_int(at(t, i + 1), 1, 31) ? 0 : 2;
    }
    if (is_year(at(t, i + 1))) return 2;
    return 0;
  }
  if (one_of(kWeekdays, w)) return 1;
  return 0;
}

std::size_t match_time(const Texts &t, std::size_t i) {
  static const std::regex clock(R"(([01]?\d|2[0-3]):[0-5]\d)");
  std::string_view w = at(t, i);
  auto is_meridiem = [](std::string_view s) {
    std::string l = text::to_lower(s);
    return l == "am" || l == "pm";
  };
  if (std::regex_match(w.begin(), w.end(), clock)) return is_meridiem(at(t, i + 1)) ? 2 : 1;
  if (is_small_int(w, 1, 12) && is_meridiem(at(t, i + 1))) return 2;
  return 0;
}

std::size_t match_money(const Texts &t, std::size_t i) {
  std::string_view w = at(t, i);
  std::size_t n = 0;
  if (one_of(kCurrencySymbols, w) || w == "USD" || w == "EUR" || w == "GBP") {
    if (!is_number(at(t, i + 1))) return 0;
    n = 2;
  } else if (is_number(w)) {
    std::size_t j = i + 1;
    if (one_of(kMagnitudes, at(t, j))) ++j;
    if (!one_of(kCurrencyWords, at(t, j))) return 0;
    return j + 1 - i;
  } else {
    return 0;
  }
  if (one_of(kMagnitudes, at(t, i + n))) ++n;
  return n;
}

std::size_t match_percent(const Texts &t, std::size_t i) {
  if (!is_number(at(t, i))) return 0;
  std::string_view next = at(t, i + 1);
  if (next == "%" || next == "percent") return 2;
  if (next == "per" && at(t, i + 2) == "cent") return 3;
  return 0;
}

// Run of capitalized word tokens starting at i.
std::size_t capitalized_run(const Texts &t, std::size_t i) {
  std::size_t j = i;
  while (j < t.size() && is_capitalized(t[j])) ++j;
  return j - i;
}

std::size_t match_honorific(const Texts &t, std::size_t i) {
  if (!one_of(kHonorifics, at(t, i))) return 0;
  std::size_t j = i + 1;
  if (at(t, j) == ".") ++j;
  std::size_t run = capitalized_run(t, j);
  return run == 0 ? 0 : j + run - i;
}

std::size_t match_company(const Texts &t, std::size_t i) {
  std::size_t run = capitalized_run(t, i);
  for (std::size_t k = 1; k < run; ++k) {
    if (one_of(kCompanySuffixes, t[i + k])) {
      std::size_t n = k + 1;
      if (at(t, i + n) == ".") ++n;
      return n;
    }
  }
  return 0;
}

struct Candidate {
  std::size_t length = 0;
  EntityCategory category = EntityCategory::kPerson;
};

Candidate best_at(const Texts &t, std::size_t i, const Gazetteer &gazetteer) {
  Candidate best;
  auto offer = [&](std::size_t len, EntityCategory c) {
    if (len > best.length) best = {len, c};
  };
  if (const Gazetteer::Entry *e = gazetteer.longest_match(t, i)) {
    std::size_t len = e->tokens.size();
    // A known person followed by capitalized tokens is taken as a full name.
    if (e->category == EntityCategory::kPerson) len += capitalized_run(t, i + len);
    offer(len, e->category);
  }
  offer(match_date(t, i), EntityCategory::kDate);
  offer(match_time(t, i), EntityCategory::kTime);
  offer(match_money(t, i), EntityCategory::kMoney);
  offer(match_percent(t, i), EntityCategory::kPercent);
  offer(match_honorific(t, i), EntityCategory::kPerson);
  offer(match_company(t, i), EntityCategory::kOrganization);
  return best;
}

}  // namespace

std::vector<NamedEntity> recognize_entities(std::span<const Token> tokens, const Gazetteer &gazetteer,
                                            std::string_view text) {
  Texts texts;
  texts.reserve(tokens.size());
  for (const Token &t : tokens) texts.emplace_back(t.text);

  std::vector<NamedEntity> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    Candidate c = best_at(texts, i, gazetteer);
    if (c.length == 0) {
      ++i;
      continue;
    }
    std::size_t last = i + c.length;
    // Entities do not cross sentence boundaries.
    for (std::size_t k = i + 1; k < last; ++k) {
      if (tokens[k].sentence != tokens[i].sentence) {
        last = k;
        break;
      }
    }
    NamedEntity e;
    e.tokens = {i, last};
    e.span = {tokens[i].span.start, tokens[last - 1].span.end};
    e.category = c.category;
    e.surface = std::string(text.substr(e.span.start, e.span.size()));
    out.push_back(std::move(e));
    i = last;
  }
  return out;
}

void mask_entities(std::span<Token> tokens, std::span<const NamedEntity> entities) {
  for (const NamedEntity &e : entities) {
    for (std::size_t k = e.tokens.first; k < e.tokens.last && k < tokens.size(); ++k) tokens[k].masked = true;
  }
}

}  // namespace taxsan::nlp
