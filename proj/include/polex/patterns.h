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

// Quote, keyword and end-citation matchers.
//
// The two published profiles behave exactly like these Python patterns
// (str patterns, default flags unless noted):
//
//   quote     ([“"«‘"].*?[”"»’"])
//   citation  \(.*?\d{4}\)        (v1_broad, unanchored)
//             \(.*?\d{4}\)$       (v2_refined)
//   keyword   \b(CORTE|TRIBUNALE|TRIB\.|GIURISPRUDENZA|COLLEGIO|CONSESSO|
//               CASS\.|CASSAZIONE)\b  with re.IGNORECASE
//
// including the quirk that "Cass. " never matches: the closing \b after
// the period needs a word character on the right. The `extended` profile
// lifts that quirk, tolerates ". ; or whitespace" after an end citation,
// and requires quotes to close with the partner of their opening mark.

#ifndef POLEX_PATTERNS_H_
#define POLEX_PATTERNS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace polex {

enum class ProfileName { kV1Broad, kV2Refined, kExtended };

std::string to_string(ProfileName name);
std::optional<ProfileName> parse_profile_name(std::string_view name);

struct RuleProfile {
  ProfileName name = ProfileName::kV2Refined;
  // Position-aligned: quote_open_set[i] pairs with quote_close_set[i] when
  // paired_quotes is set. Duplicates are allowed.
  std::u32string quote_open_set;
  std::u32string quote_close_set;
  // Alternatives in match order. Entries ending in '.' are abbreviations.
  std::vector<std::string> keyword_lexicon;
  bool citation_anchored = true;
  bool fix_abbrev_boundaries = false;
  bool allow_trailing_punct_after_citation = false;
  bool paired_quotes = false;
  // Emit one candidate per quote span instead of only the first one.
  bool one_candidate_per_quote = false;

  static RuleProfile v1_broad();
  static RuleProfile v2_refined();
  static RuleProfile extended();
  // Throws std::invalid_argument for unknown names.
  static RuleProfile named(std::string_view name);

  bool operator==(const RuleProfile&) const = default;
};

struct QuoteSpan {
  std::size_t start = 0;  // codepoint offsets within the paragraph
  std::size_t end = 0;    // exclusive
  std::string text;       // includes both delimiters
  char32_t open_char = 0;
  char32_t close_char = 0;

  bool operator==(const QuoteSpan&) const = default;
};

struct KeywordHit {
  std::string token;       // lexicon entry, e.g. "TRIB."
  std::size_t offset = 0;  // codepoint offset of the match
  std::string matched;     // text as it appears in the paragraph

  bool operator==(const KeywordHit&) const = default;
};

struct TextMatch {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;

  bool operator==(const TextMatch&) const = default;
};

// Non-overlapping quote spans, leftmost first.
std::vector<QuoteSpan> find_quotes(std::string_view paragraph, const RuleProfile& profile);

// Non-overlapping keyword hits, leftmost first.
std::vector<KeywordHit> match_keywords(std::string_view paragraph, const RuleProfile& profile);

// The parenthesized citation group matched by the profile's citation
// pattern (anchored at the paragraph end unless citation_anchored is off).
std::optional<TextMatch> citation_at_end(std::string_view paragraph, const RuleProfile& profile);

nlohmann::json profile_to_json(const RuleProfile& profile);
// Throws SchemaError.
RuleProfile profile_from_json(const nlohmann::json& json);

RuleProfile load_profile(const std::filesystem::path& path);
void save_profile(const RuleProfile& profile, const std::filesystem::path& path);

}  // namespace polex

#endif  // POLEX_PATTERNS_H_
