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

#include <cstdint>

#include "taxsan/nlp/pipeline.h"

namespace taxsan::nlp {
namespace {

// A period after these does not end the sentence.
bool is_title_abbreviation(std::string_view w) {
  for (std::string_view a : {"Mr", "Mrs", "Ms", "Dr", "Prof", "St", "Jr", "Sr"}) {
    if (w == a) return true;
  }
  return false;
}

enum class CharClass { kSpace, kDigit, kLetter, kPunct };

struct Decoded {
  char32_t cp;
  std::size_t len;
};

// Lenient UTF-8 decoding; invalid bytes decode as themselves, length 1.
Decoded decode(std::string_view s, std::size_t i) {
  auto b = static_cast<unsigned char>(s[i]);
  if (b < 0x80) return {b, 1};
  std::size_t len = (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : (b >> 3) == 0x1E ? 4 : 1;
  if (len == 1 || i + len > s.size()) return {b, 1};
  char32_t cp = len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    auto c = static_cast<unsigned char>(s[i + k]);
    if ((c >> 6) != 0x2) return {b, 1};
    cp = (cp << 6) | (c & 0x3F);
  }
  return {cp, len};
}

CharClass classify(char32_t cp) {
  if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
      cp == 0xA0 || cp == 0x2009 || cp == 0x202F) {
    return CharClass::kSpace;
  }
  if (cp >= '0' && cp <= '9') return CharClass::kDigit;
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return CharClass::kLetter;
  if (cp < 0x80) return CharClass::kPunct;
  switch (cp) {
    case 0x00A3:  // pound sign
    case 0x00A7: case 0x00AB: case 0x00BB: case 0x00BF: case 0x00A1:
    case 0x2013: case 0x2014: case 0x2018: case 0x2019: case 0x201C: case 0x201D:
    case 0x2026: case 0x20AC:  // euro sign
      return CharClass::kPunct;
    default:
      return CharClass::kLetter;
  }
}

bool is_word(CharClass c) { return c == CharClass::kDigit || c == CharClass::kLetter; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t sentence = 0;
  std::size_t i = 0;
  auto cls_at = [&](std::size_t pos) {
    return pos < text.size() ? classify(decode(text, pos).cp) : CharClass::kSpace;
  };
  while (i < text.size()) {
    Decoded d = decode(text, i);
    CharClass c = classify(d.cp);
    if (c == CharClass::kSpace) {
      i += d.len;
      continue;
    }
    std::size_t start = i;
    if (c == CharClass::kPunct) {
      i += d.len;
    } else {
      i += d.len;
      CharClass prev = c;
      while (i < text.size()) {
        Decoded n = decode(text, i);
        CharClass nc = classify(n.cp);
        if (is_word(nc)) {
          prev = nc;
          i += n.len;
          continue;
        }
        // Connectors stay inside a word when followed by a word character:
        // hyphen, apostrophe and slash anywhere, '.', ',' and ':' between
        // digits only.
        char ch = n.cp < 0x80 ? static_cast<char>(n.cp) : '\0';
        CharClass after = cls_at(i + n.len);
        bool joins = false;
        if (ch == '-' || ch == '\'' || ch == '/') {
          joins = is_word(after);
        } else if (ch == '.' || ch == ',' || ch == ':') {
          joins = prev == CharClass::kDigit && after == CharClass::kDigit;
        }
        if (!joins) break;
        i += n.len;
      }
    }
    Token t;
    t.text = std::string(text.substr(start, i - start));
    t.span = {start, i};
    t.sentence = sentence;
    bool abbreviation = t.text == "." && !tokens.empty() && is_title_abbreviation(tokens.back().text);
    if ((t.text == "." && !abbreviation) || t.text == "!" || t.text == "?") ++sentence;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

}  // namespace taxsan::nlp
