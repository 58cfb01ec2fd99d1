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

#include "polex/patterns.h"

#include <stdexcept>

#include "polex/text.h"

namespace polex {
namespace {

// Published character classes, in source order.
constexpr std::u32string_view kOpenQuotes = U"“\"«‘\"";
constexpr std::u32string_view kCloseQuotes = U"”\"»’\"";

const std::vector<std::string>& published_lexicon() {
  static const std::vector<std::string> kLexicon = {
      "CORTE", "TRIBUNALE", "TRIB.", "GIURISPRUDENZA",
      "COLLEGIO", "CONSESSO", "CASS.", "CASSAZIONE"};
  return kLexicon;
}

// Simple case folding as applied by Python's sre engine under IGNORECASE
// (simple lowercase plus its dotless-i and long-s equivalences).
char32_t ignorecase_key(char32_t cp) {
  switch (cp) {
    case 0x130:  // LATIN CAPITAL LETTER I WITH DOT ABOVE
    case 0x131:  // LATIN SMALL LETTER DOTLESS I
      return U'i';
    case 0x17F:  // LATIN SMALL LETTER LONG S
      return U's';
    default:
      return text::to_lower(cp);
  }
}

bool word_at(const std::u32string& s, std::size_t i) {
  return i < s.size() && text::is_word_char(s[i]);
}

// Python \b at position `pos` (between s[pos-1] and s[pos]).
bool boundary_at(const std::u32string& s, std::size_t pos) {
  const bool left = pos > 0 && text::is_word_char(s[pos - 1]);
  return left != word_at(s, pos);
}

std::string slice(const std::u32string& s, std::size_t b, std::size_t e) {
  return text::encode_utf8(std::u32string_view(s).substr(b, e - b));
}

bool closes(const RuleProfile& p, char32_t open, char32_t candidate) {
  if (!p.paired_quotes) return p.quote_close_set.find(candidate) != std::u32string::npos;
  for (std::size_t i = 0; i < p.quote_open_set.size() && i < p.quote_close_set.size(); ++i) {
    if (p.quote_open_set[i] == open && p.quote_close_set[i] == candidate) return true;
  }
  return false;
}

bool all_digits(const std::u32string& s, std::size_t b, std::size_t e) {
  for (std::size_t i = b; i < e; ++i) {
    if (!text::is_decimal_digit(s[i])) return false;
  }
  return true;
}

// True when `s[j]` is ')' preceded by four digits that start after `open`.
bool closes_citation(const std::u32string& s, std::size_t open, std::size_t j) {
  return s[j] == U')' && j >= open + 5 && all_digits(s, j - 4, j);
}

// Leftmost '(' on the line of `close` whose group can end at `close`.
std::optional<std::size_t> leftmost_open_for(const std::u32string& s, std::size_t close) {
  std::size_t line_start = close;
  while (line_start > 0 && s[line_start - 1] != U'\n') --line_start;
  for (std::size_t i = line_start; i + 5 <= close; ++i) {
    if (s[i] == U'(') return i;
  }
  return std::nullopt;
}

// Position of the final ')' allowed by the profile's anchoring, if any.
std::optional<std::size_t> anchored_close(const std::u32string& s, const RuleProfile& p) {
  std::size_t end = s.size();
  if (p.allow_trailing_punct_after_citation) {
    while (end > 0 && (s[end - 1] == U'.' || s[end - 1] == U';' || text::is_space(s[end - 1]))) {
      --end;
    }
  } else if (end > 0 && s[end - 1] == U'\n') {
    --end;  // `$` also matches before a single trailing newline
  }
  if (end == 0 || s[end - 1] != U')') return std::nullopt;
  return end - 1;
}

}  // namespace

std::string to_string(ProfileName name) {
  switch (name) {
    case ProfileName::kV1Broad: return "v1_broad";
    case ProfileName::kV2Refined: return "v2_refined";
    case ProfileName::kExtended: return "extended";
  }
  return "unknown";
}

std::optional<ProfileName> parse_profile_name(std::string_view name) {
  if (name == "v1_broad") return ProfileName::kV1Broad;
  if (name == "v2_refined") return ProfileName::kV2Refined;
  if (name == "extended") return ProfileName::kExtended;
  return std::nullopt;
}

RuleProfile RuleProfile::v1_broad() {
  RuleProfile p = v2_refined();
  p.name = ProfileName::kV1Broad;
  p.citation_anchored = false;
  return p;
}

RuleProfile RuleProfile::v2_refined() {
  RuleProfile p;
  p.name = ProfileName::kV2Refined;
  p.quote_open_set = std::u32string(kOpenQuotes);
  p.quote_close_set = std::u32string(kCloseQuotes);
  p.keyword_lexicon = published_lexicon();
  p.citation_anchored = true;
  return p;
}

RuleProfile RuleProfile::extended() {
  RuleProfile p = v2_refined();
  p.name = ProfileName::kExtended;
  p.fix_abbrev_boundaries = true;
  p.allow_trailing_punct_after_citation = true;
  p.paired_quotes = true;
  return p;
}

RuleProfile RuleProfile::named(std::string_view name) {
  const auto parsed = parse_profile_name(name);
  if (!parsed) throw std::invalid_argument("unknown rule profile: " + std::string(name));
  switch (*parsed) {
    case ProfileName::kV1Broad: return v1_broad();
    case ProfileName::kV2Refined: return v2_refined();
    case ProfileName::kExtended: return extended();
  }
  return v2_refined();
}

std::vector<QuoteSpan> find_quotes(std::string_view paragraph, const RuleProfile& profile) {
  const std::u32string s = text::decode_utf8(paragraph);
  std::vector<QuoteSpan> spans;
  std::size_t i = 0;
  while (i < s.size()) {
    if (profile.quote_open_set.find(s[i]) == std::u32string::npos) {
      ++i;
      continue;
    }
    // `.` never crosses a newline; the first admissible closer wins.
    std::optional<std::size_t> close;
    for (std::size_t j = i + 1; j < s.size() && s[j] != U'\n'; ++j) {
      if (closes(profile, s[i], s[j])) {
        close = j;
        break;
      }
    }
    if (!close) {
      ++i;
      continue;
    }
    spans.push_back({i, *close + 1, slice(s, i, *close + 1), s[i], s[*close]});
    i = *close + 1;
  }
  return spans;
}

std::vector<KeywordHit> match_keywords(std::string_view paragraph, const RuleProfile& profile) {
  const std::u32string s = text::decode_utf8(paragraph);
  std::vector<std::u32string> alternatives;
  alternatives.reserve(profile.keyword_lexicon.size());
  for (const auto& kw : profile.keyword_lexicon) alternatives.push_back(text::decode_utf8(kw));

  std::vector<KeywordHit> hits;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::optional<std::size_t> matched;
    if (boundary_at(s, pos)) {
      for (std::size_t a = 0; a < alternatives.size() && !matched; ++a) {
        const std::u32string& alt = alternatives[a];
        if (alt.empty() || pos + alt.size() > s.size()) continue;
        bool equal = true;
        for (std::size_t k = 0; k < alt.size() && equal; ++k) {
          equal = ignorecase_key(s[pos + k]) == ignorecase_key(alt[k]);
        }
        if (!equal) continue;
        const std::size_t end = pos + alt.size();
        const bool abbreviation = alt.back() == U'.';
        if (boundary_at(s, end) || (abbreviation && profile.fix_abbrev_boundaries)) {
          hits.push_back({profile.keyword_lexicon[a], pos, slice(s, pos, end)});
          matched = end;
        }
      }
    }
    pos = matched ? *matched : pos + 1;
  }
  return hits;
}

std::optional<TextMatch> citation_at_end(std::string_view paragraph, const RuleProfile& profile) {
  const std::u32string s = text::decode_utf8(paragraph);

  if (!profile.citation_anchored) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != U'(') continue;
      for (std::size_t j = i + 1; j < s.size() && s[j] != U'\n'; ++j) {
        if (closes_citation(s, i, j)) return TextMatch{i, j + 1, slice(s, i, j + 1)};
      }
    }
    return std::nullopt;
  }

  const auto close = anchored_close(s, profile);
  if (!close || *close < 5 || !all_digits(s, *close - 4, *close)) {
    return std::nullopt;
  }

  if (profile.allow_trailing_punct_after_citation) {
    // Prefer the balanced group that ends at the final parenthesis.
    int depth = 0;
    for (std::size_t i = *close + 1; i-- > 0;) {
      if (s[i] == U'\n') break;
      if (s[i] == U')') ++depth;
      if (s[i] == U'(' && --depth == 0) {
        if (closes_citation(s, i, *close)) return TextMatch{i, *close + 1, slice(s, i, *close + 1)};
        break;
      }
    }
  }
  const auto open = leftmost_open_for(s, *close);
  if (!open) return std::nullopt;
  return TextMatch{*open, *close + 1, slice(s, *open, *close + 1)};
}

}  // namespace polex
