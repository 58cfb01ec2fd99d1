// Copyright 2026 The polex Authors.
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

#include "polex/text.h"

#include <algorithm>
#include <optional>

#include "polex/errors.h"
#include "text/unicode_tables.h"

namespace polex::text {
namespace {

// Decodes one codepoint at `pos`, advancing it. Returns nullopt on any
// malformed sequence.
std::optional<char32_t> next_codepoint(std::string_view s, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(s[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
    min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
    min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
    min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + extra >= s.size()) return std::nullopt;
  for (int i = 1; i <= extra; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  pos += extra + 1;
  return cp;
}

bool in_ranges(std::span<const tables::CodepointRange> ranges, char32_t cp) {
  auto it = std::upper_bound(
      ranges.begin(), ranges.end(), cp,
      [](char32_t v, const tables::CodepointRange& r) { return v < r.first; });
  if (it == ranges.begin()) return false;
  --it;
  return cp <= it->last;
}

bool is_open_quote(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U'“': case U'‘': case U'«':
    case U'„': case U'‹':
      return true;
    default:
      return false;
  }
}

bool is_close_quote(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U'”': case U'’': case U'»':
    case U'“': case U'›':
      return true;
    default:
      return false;
  }
}

// Removes a trailing "(... digits ...)" group, optionally followed by
// sentence punctuation.
void strip_trailing_citation(std::u32string& s) {
  std::size_t end = s.size();
  while (end > 0 && (s[end - 1] == U'.' || s[end - 1] == U';' ||
                     s[end - 1] == U',' || is_space(s[end - 1]))) {
    --end;
  }
  if (end == 0 || s[end - 1] != U')') return;
  int depth = 0;
  std::size_t open = std::u32string::npos;
  for (std::size_t i = end; i-- > 0;) {
    if (s[i] == U')') ++depth;
    if (s[i] == U'(' && --depth == 0) {
      open = i;
      break;
    }
  }
  if (open == std::u32string::npos || open == 0) return;
  const bool has_digit = std::any_of(s.begin() + open, s.begin() + end,
                                     [](char32_t c) { return is_decimal_digit(c); });
  if (!has_digit) return;
  s.erase(open);
  while (!s.empty() && is_space(s.back())) s.pop_back();
}

}  // namespace

bool is_valid_utf8(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (!next_codepoint(bytes, pos)) return false;
  }
  return true;
}

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::size_t at = pos;
    auto cp = next_codepoint(bytes, pos);
    if (!cp) {
      throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(at));
    }
    out.push_back(*cp);
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

std::size_t codepoint_length(std::string_view bytes) {
  return static_cast<std::size_t>(std::count_if(
      bytes.begin(), bytes.end(),
      [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'0' && cp <= U'9') || cp == U'_';
  }
  return in_ranges(tables::word_ranges(), cp);
}

bool is_decimal_digit(char32_t cp) {
  if (cp < 0x80) return cp >= U'0' && cp <= U'9';
  return in_ranges(tables::digit_ranges(), cp);
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x1C: case 0x1D: case 0x1E: case 0x1F: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  const auto maps = tables::lower_mappings();
  auto it = std::lower_bound(
      maps.begin(), maps.end(), cp,
      [](const tables::CaseMapping& m, char32_t v) { return m.from < v; });
  return (it != maps.end() && it->from == cp) ? it->to : cp;
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) c = to_lower(c);
  return out;
}

std::string trim(std::string_view text) {
  const std::u32string cps = decode_utf8(text);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && is_space(cps[b])) ++b;
  while (e > b && is_space(cps[e - 1])) --e;
  return encode_utf8(std::u32string_view(cps).substr(b, e - b));
}

bool is_blank(std::string_view text) {
  for (char32_t cp : decode_utf8(text)) {
    if (!is_space(cp)) return false;
  }
  return true;
}

std::string normalize_for_match(std::string_view text) {
  const std::u32string folded = to_lower(decode_utf8(text));
  std::u32string s;
  s.reserve(folded.size());
  bool pending_space = false;
  for (char32_t cp : folded) {
    if (is_space(cp)) {
      pending_space = !s.empty();
      continue;
    }
    if (pending_space) s.push_back(U' ');
    pending_space = false;
    s.push_back(cp);
  }
  strip_trailing_citation(s);
  if (s.size() >= 2 && is_open_quote(s.front()) && is_close_quote(s.back())) {
    s = s.substr(1, s.size() - 2);
  }
  return encode_utf8(s);
}

std::vector<std::string> match_tokens(std::string_view text) {
  const std::u32string s = decode_utf8(normalize_for_match(text));
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : s) {
    if (is_word_char(cp)) {
      append_utf8(current, cp);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t edit_distance(std::span<const std::string> a,
                          std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

bool contains_run(std::span<const std::string> haystack,
                  std::span<const std::string> needle) {
  if (needle.empty()) return true;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

}  // namespace polex::text
