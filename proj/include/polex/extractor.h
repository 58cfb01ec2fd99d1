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


// PoL candidates, the rule-based extractor and its CSV / JSONL outputs.

#ifndef POLEX_EXTRACTOR_H_
#define POLEX_EXTRACTOR_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polex/citation.h"
#include "polex/corpus.h"
#include "polex/patterns.h"

namespace polex {

enum class PoLType { kImplicit, kExplicitDirect, kExplicitIndirect };

inline constexpr PoLType kAllPoLTypes[] = {PoLType::kImplicit, PoLType::kExplicitDirect,
                                           PoLType::kExplicitIndirect};

// kExternal marks candidates that did not come from a rule profile
// (LLM output, human lists).
enum class Trigger {
  kQuoteAndKeyword,
  kCitationAtEnd,
  kQuoteOnly,
  kKeywordOnly,
  kCitationAnywhere,
  kExternal
};

enum class Source { kRules, kLlm, kHuman };

std::string to_string(PoLType type);
std::string to_string(Trigger trigger);
std::string to_string(Source source);
std::optional<PoLType> parse_pol_type(std::string_view name);
std::optional<Trigger> parse_trigger(std::string_view name);
std::optional<Source> parse_source(std::string_view name);

inline constexpr long kUnresolvedParagraph = -1;

struct PoLCandidate {
  std::string doc_id;
  long paragraph_index = 0;  // kUnresolvedParagraph when not found in the document
  std::string text;          // whole paragraph for rule output, passage for LLM output
  std::string quote;         // empty when no quote was captured
  Trigger trigger = Trigger::kExternal;
  PoLType pol_type = PoLType::kImplicit;
  std::vector<CitationRef> citations;
  Source source = Source::kRules;

  bool operator==(const PoLCandidate&) const = default;
};

// Applies the profile paragraph by paragraph. Candidates come out in
// paragraph order, typed by classify_candidate.
std::vector<PoLCandidate> extract_candidates(const Document& document, const RuleProfile& profile);

// Per-document extraction, parallel over documents. Output order follows
// `documents`.
std::vector<std::vector<PoLCandidate>> extract_corpus(const std::vector<Document>& documents,
                                                      const RuleProfile& profile,
                                                      unsigned jobs = 0);

// ExplicitDirect: quote and citation. ExplicitIndirect: citation only.
// Implicit: no citation.
PoLType classify_candidate(const PoLCandidate& candidate);

struct PassageLocation {
  std::size_t paragraph_index = 0;
  double score = 0.0;  // LCS(passage, paragraph) / |passage| over match tokens
};

// Paragraph that best contains `passage`; the lowest index wins ties.
// nullopt when the passage has no match tokens or the document is empty.
std::optional<PassageLocation> locate_passage(std::string_view passage, const Document& document);

inline constexpr std::string_view kDefaultOutputDirectory = "Principi";

// Writes `<output_directory>/<stem of input_filename>.csv` (UTF-8, LF,
// header "Paragraph,Quote") and returns its path. Throws IoError.
std::filesystem::path emit_csv(const std::vector<PoLCandidate>& candidates,
                               std::string_view input_filename,
                               const std::filesystem::path& output_directory);

// One CSV field, quoted only when it contains ',', '"', CR or LF.
std::string csv_field(std::string_view value);

nlohmann::json candidate_to_json(const PoLCandidate& candidate);
// Throws SchemaError.
PoLCandidate candidate_from_json(const nlohmann::json& json);

nlohmann::json citation_to_json(const CitationRef& citation);
CitationRef citation_from_json(const nlohmann::json& json);

// JSON lines, one candidate object per line.
void write_jsonl(const std::vector<PoLCandidate>& candidates, const std::filesystem::path& path);
// Throws FileNotFound, SchemaError (pointer prefixed with "/<line>").
std::vector<PoLCandidate> read_jsonl(const std::filesystem::path& path);

}  // namespace polex

#endif  // POLEX_EXTRACTOR_H_
