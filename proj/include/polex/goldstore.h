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


// Gold PoL annotations: docx highlight import, JSON persistence and
// augmentation with tool-found passages confirmed by a reviewer.
//
// Gold file layout (keys sorted, two-space indent, trailing newline):
//
//   {
//     "annotations": [
//       {
//         "annotator_id": "A1",          (optional)
//         "doc_id": "s01",
//         "origin": "Human",             (Human | ToolConfirmed)
//         "paragraph_index": 4,
//         "pol_type": "ExplicitDirect",  (Implicit | ExplicitDirect | ExplicitIndirect)
//         "span_text": "..."
//       }
//     ],
//     "version": 1
//   }

#ifndef POLEX_GOLDSTORE_H_
#define POLEX_GOLDSTORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polex/corpus.h"
#include "polex/extractor.h"

namespace polex {

enum class Origin { kHuman, kToolConfirmed };

std::string to_string(Origin origin);
std::optional<Origin> parse_origin(std::string_view name);

struct GoldAnnotation {
  std::string doc_id;
  long paragraph_index = 0;
  std::string span_text;
  PoLType pol_type = PoLType::kImplicit;
  std::optional<std::string> annotator_id;
  Origin origin = Origin::kHuman;

  bool operator==(const GoldAnnotation&) const = default;
};

// Whitespace-collapsed, trimmed span text. Two annotations with the same
// doc_id, paragraph_index and normalized span are duplicates.
std::string normalize_span(std::string_view span);

class GoldSet {
 public:
  GoldSet() = default;
  // Throws DuplicateAnnotation.
  explicit GoldSet(std::vector<GoldAnnotation> annotations);

  const std::vector<GoldAnnotation>& annotations() const { return annotations_; }
  std::size_t size() const { return annotations_.size(); }
  bool empty() const { return annotations_.empty(); }

  // Recomputed on every call; every type is present, possibly with 0.
  std::map<PoLType, std::size_t> counts_by_type() const;

  // Annotations of one document, in stored order.
  std::vector<GoldAnnotation> for_document(std::string_view doc_id) const;
  // Distinct doc_ids in first-appearance order.
  std::vector<std::string> doc_ids() const;

  bool operator==(const GoldSet&) const = default;

 private:
  std::vector<GoldAnnotation> annotations_;
};

struct HighlightImport {
  std::vector<GoldAnnotation> annotations;
  std::vector<std::string> warnings;  // unknown colours
};

// yellow -> ExplicitDirect, blue or cyan -> ExplicitIndirect,
// lightGray or darkGray -> Implicit. Adjacent runs with the same colour
// merge; runs without text do not break a group. Paragraph indices follow
// Document numbering (blank paragraphs skipped). Throws MalformedArchive.
HighlightImport import_docx_highlights(const std::filesystem::path& path,
                                       std::optional<std::string> annotator_id = std::nullopt);

std::optional<PoLType> pol_type_for_highlight(std::string_view colour);

nlohmann::json gold_to_json(const GoldSet& gold);
// Throws SchemaError with a JSON pointer to the offending field.
GoldSet gold_from_json(const nlohmann::json& json);

GoldSet load_gold(const std::filesystem::path& path);
std::filesystem::path save_gold(const GoldSet& gold, const std::filesystem::path& path);

// New set with one ToolConfirmed annotation per candidate (span_text is the
// candidate text). Throws DuplicateAnnotation, std::invalid_argument for
// unresolved paragraph indices.
GoldSet augment_gold(const GoldSet& gold, const std::vector<PoLCandidate>& confirmed);

// Annotations whose doc_id or paragraph is missing, or whose span cannot be
// found in the paragraph after whitespace normalization. One message each.
std::vector<std::string> validate_gold(const GoldSet& gold, const std::vector<Document>& documents);

}  // namespace polex

#endif  // POLEX_GOLDSTORE_H_
