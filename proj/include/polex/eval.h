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


// Alignment of extractor output with gold annotations, confusion counts,
// metrics and the tracking / comparison tables.
//
// Text comparison works on match tokens (maximal \w runs after case
// folding, whitespace collapsing and stripping outer quotes and a trailing
// parenthesized citation). The containment score of a candidate c against
// a gold span g is LCS(c, g) / min(|c|, |g|).

#ifndef POLEX_EVAL_H_
#define POLEX_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polex/corpus.h"
#include "polex/extractor.h"
#include "polex/goldstore.h"

namespace polex {

enum class Completeness { kFull, kPartial, kPartialEllipsis };
enum class Similarity { kSameText, kSummary, kWordExchange, kDivergent };
enum class FpKind { kNotPoL, kHallucination };
enum class MetricsMode { kPaper, kStandard };

std::string to_string(Completeness value);
std::string to_string(Similarity value);
std::string to_string(FpKind value);
std::string to_string(MetricsMode value);
// Accepts "PaperMode"/"paper" and "StandardMode"/"standard".
std::optional<MetricsMode> parse_metrics_mode(std::string_view name);

struct Match {
  GoldAnnotation gold;
  PoLCandidate candidate;
  Completeness completeness = Completeness::kFull;
  Similarity similarity = Similarity::kSameText;
  double score = 0.0;
};

struct FalsePositive {
  PoLCandidate candidate;
  FpKind kind = FpKind::kNotPoL;
  double best_paragraph_score = 0.0;  // LCS / |candidate| against the best paragraph
};

struct AlignmentResult {
  std::string doc_id;
  std::vector<Match> matches;
  std::vector<FalsePositive> false_positives;
  std::vector<GoldAnnotation> false_negatives;
};

struct AlignOptions {
  double overlap_threshold = 0.8;
  double hallucination_threshold = 0.6;
};

// Greedy best-first one-to-one matching. Ties go to the lower gold
// paragraph_index, then the lower candidate paragraph_index, then input
// order. Throws DocMismatch when a doc_id differs from the document's and
// std::invalid_argument for thresholds outside (0, 1].
AlignmentResult align(const std::vector<PoLCandidate>& candidates,
                      const std::vector<GoldAnnotation>& gold, const Document& document,
                      const AlignOptions& options = {});

// One alignment per document, in `documents` order, run in parallel.
// Throws DocMismatch when a candidate or annotation names a document that
// is not in `documents`.
std::vector<AlignmentResult> align_corpus(const std::vector<PoLCandidate>& candidates, const GoldSet& gold,
                                          const std::vector<Document>& documents,
                                          const AlignOptions& options = {}, unsigned jobs = 0);

// Building blocks of align, exposed for reuse and testing.
double containment_score(std::string_view candidate, std::string_view gold);
Completeness completeness_of(std::string_view candidate, std::string_view gold);
Similarity similarity_of(std::string_view candidate, std::string_view gold, double overlap_threshold);
// Best LCS(candidate, paragraph) / |candidate| over the document.
double best_paragraph_score(std::string_view candidate, const Document& document);

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& other);
  friend ConfusionCounts operator+(ConfusionCounts a, const ConfusionCounts& b) { return a += b; }
  bool operator==(const ConfusionCounts&) const = default;
};

ConfusionCounts confusion(const AlignmentResult& alignment);
ConfusionCounts merge(const std::vector<ConfusionCounts>& parts);

// An exact non-negative fraction; 0/0 reads as 0.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  // Decimal string rounded half-up, computed exactly from num/den.
  std::string rounded(int decimals) const;
  bool operator==(const Ratio&) const = default;
};

// Rounds x half-up to `decimals` places for presentation.
std::string format_fixed(double x, int decimals);

struct MetricsReport {
  MetricsMode mode = MetricsMode::kPaper;
  ConfusionCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double accuracy = 0.0;
  double f1 = 0.0;

  // The same metrics as exact fractions.
  Ratio precision_ratio() const;
  Ratio recall_ratio() const;
  Ratio accuracy_ratio() const;
  Ratio f1_ratio() const;
};

// PaperMode: precision = tp/(tp+fn), recall = tp/(tp+fp).
// StandardMode: precision = tp/(tp+fp), recall = tp/(tp+fn).
// accuracy = tp/(tp+fp+fn), f1 = harmonic mean. 0/0 is 0.
MetricsReport metrics(const ConfusionCounts& counts, MetricsMode mode = MetricsMode::kPaper);

using TypeCounts = std::map<PoLType, std::uint64_t>;
TypeCounts zero_type_counts();

// One row of the per-judgment tracking table. Type columns count the gold
// type of each matched annotation.
struct TrackingRow {
  std::string doc_id;
  TypeCounts ann;
  std::uint64_t tool_full = 0;
  std::uint64_t tool_partial = 0;
  std::uint64_t tool_partial_ellipsis = 0;
  TypeCounts tool;
  std::uint64_t same_text = 0;
  std::uint64_t summary = 0;
  std::uint64_t word_exchange = 0;
  std::uint64_t divergent = 0;
  std::uint64_t hallucination = 0;
  std::uint64_t not_pol = 0;
  std::string note;
  std::optional<int> pages;

  std::uint64_t ann_total() const;
  std::uint64_t tool_total() const { return tool_full + tool_partial + tool_partial_ellipsis; }
};

struct TrackingTable {
  std::vector<TrackingRow> rows;
  TrackingRow totals;  // doc_id "TOTAL"
  // Matches whose candidate type equals the gold type, keyed by gold type.
  TypeCounts type_agreement;
};

TrackingTable tracking_table(const std::vector<AlignmentResult>& alignments,
                             const std::map<std::string, int>& pages = {});

// Reduced view of one method's results over a gold set.
struct MethodCounts {
  std::string name;
  TypeCounts found;  // matched gold annotations by gold type
  std::uint64_t not_pol = 0;
  std::uint64_t hallucination = 0;

  std::uint64_t tp() const;
  std::uint64_t errors() const { return not_pol + hallucination; }
};

MethodCounts method_counts(std::string name, const std::vector<AlignmentResult>& alignments);

struct Share {
  std::uint64_t count = 0;
  Ratio percent;  // count * 100 / base
};

struct ComparisonRow {
  std::string method;
  Share total;
  std::map<PoLType, Share> by_type;
};

struct ErrorShareRow {
  std::string method;
  std::uint64_t extracted = 0;  // tp + fp
  Share errors;
  Share not_pol;
  Share hallucination;
};

struct ComparisonTable {
  TypeCounts whole;
  std::uint64_t whole_total = 0;
  std::vector<ComparisonRow> rows;
  std::vector<ErrorShareRow> errors;
  std::vector<std::string> footer;
};

// Percentages of the whole gold by type, plus error shares over tp + fp.
// Throws std::invalid_argument when fewer than two methods are given.
ComparisonTable comparison_from_counts(const TypeCounts& whole, const std::vector<MethodCounts>& methods);

struct NamedAlignments {
  std::string name;
  std::vector<AlignmentResult> alignments;
};

// Throws GoldMismatch when a method's matches and misses do not partition
// exactly the given gold set.
ComparisonTable comparison_table(const GoldSet& gold, const std::vector<NamedAlignments>& methods);

// Rendering. Markdown tables use aligned columns.
std::string tracking_csv(const TrackingTable& table);
std::string tracking_markdown(const TrackingTable& table);
std::string comparison_csv(const ComparisonTable& table);
std::string comparison_markdown(const ComparisonTable& table);
// Precision / Recall / Accuracy / F1-score rows, one column per method.
std::string metrics_markdown(const std::vector<std::pair<std::string, ConfusionCounts>>& methods,
                             MetricsMode mode);

nlohmann::json metrics_to_json(const MetricsReport& report);
nlohmann::json tracking_to_json(const TrackingTable& table);
nlohmann::json comparison_to_json(const ComparisonTable& table);
nlohmann::json alignment_to_json(const AlignmentResult& alignment);

}  // namespace polex

#endif  // POLEX_EVAL_H_
