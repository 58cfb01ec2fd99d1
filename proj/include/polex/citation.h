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

// Structured parsing of Italian court citations, e.g.
//
//   Cass. n. 26972/2008
//   Civ. Cass., UU. SS., n. 26972/2008
//   Corte di Cassazione, Sezioni Unite, n. 26972 dell'11 novembre 2008
//   Cass., sez. I, 22/06/2016 n. 12962
//   sent. 22.06.2016 n. 12962
//   Corte Cost. 217/2019
//   cfr. Cass. S.U. Civili n. 12193/19
//
// The grammar is a hand-written tokenizer plus a recursive-descent parser
// over clauses (marker, court, division, section, document kind, number,
// date). Two-digit years map to 20yy when yy <= 30, else 19yy.

#ifndef POLEX_CITATION_H_
#define POLEX_CITATION_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polex {

enum class Court { kCassazione, kCorteCostituzionale, kCorteAppello, kTribunale, kOther };

std::string to_string(Court court);
std::optional<Court> parse_court(std::string_view name);

inline constexpr int kTwoDigitYearPivot = 30;

struct CitationRef {
  std::string raw;
  Court court = Court::kOther;
  // Name as written for Court::kOther; empty when no court is named
  // ("sent. 22.06.2016 n. 12962").
  std::string other_court;
  std::optional<std::string> section;   // "sez. I", "U.S."
  std::optional<std::string> division;  // "civ." or "pen."
  std::optional<std::string> place;     // "Milano" in "Trib. Milano"
  std::optional<std::string> marker;    // leading "cfr." / "v."
  std::optional<long> number;
  std::optional<int> year;
  std::optional<std::chrono::year_month_day> date;

  bool operator==(const CitationRef&) const = default;
};

// Throws UnparseableCitation naming the first unconsumed token.
CitationRef parse_citation(std::string_view raw);

// Every parseable citation in a paragraph, in order of appearance:
// parenthesized groups (split on ';') and bare citations that start at a
// court name.
std::vector<CitationRef> find_citations(std::string_view paragraph);

// Maps a two-digit year using kTwoDigitYearPivot.
int normalize_year(int year, int digits);

}  // namespace polex

#endif  // POLEX_CITATION_H_
