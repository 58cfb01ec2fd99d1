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


#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "polex/errors.h"
#include "polex/eval.h"
#include "polex/parallel.h"
#include "polex/text.h"

namespace polex {
namespace {

using Tokens = std::vector<std::string>;

constexpr double kFullCoverage = 0.95;
constexpr double kWordExchangeEditRatio = 0.1;
constexpr double kWordExchangeLengthSlack = 0.1;
constexpr double kSummaryLengthRatio = 0.7;

double containment(const Tokens& c, const Tokens& g) {
  const std::size_t shorter = std::min(c.size(), g.size());
  if (shorter == 0) return 0.0;
  return static_cast<double>(text::lcs_length(c, g)) / static_cast<double>(shorter);
}

bool ends_with_ellipsis(std::string_view candidate) {
  const std::string t = text::trim(candidate);
  for (std::string_view tail : {"(...)", "(…)", "...", "…"}) {
    if (t.size() >= tail.size() && t.compare(t.size() - tail.size(), tail.size(), tail) == 0) return true;
  }
  return false;
}

Completeness completeness_tokens(std::string_view raw, const Tokens& c, const Tokens& g) {
  if (g.empty()) return Completeness::kFull;
  const double covered = static_cast<double>(text::lcs_length(c, g)) / static_cast<double>(g.size());
  if (covered >= kFullCoverage) return Completeness::kFull;
  return ends_with_ellipsis(raw) ? Completeness::kPartialEllipsis : Completeness::kPartial;
}

Similarity similarity_tokens(const Tokens& c, const Tokens& g, double overlap_threshold) {
  // One text is a contiguous run of the other: whole-paragraph candidates
  // around a sub-paragraph gold span count as the same text.
  if (text::contains_run(c, g) || text::contains_run(g, c)) return Similarity::kSameText;
  const double cs = static_cast<double>(c.size());
  const double gs = static_cast<double>(g.size());
  const double edit = static_cast<double>(text::edit_distance(c, g)) / std::max(cs, gs);
  if (edit <= kWordExchangeEditRatio && cs >= gs * (1.0 - kWordExchangeLengthSlack) &&
      cs <= gs * (1.0 + kWordExchangeLengthSlack)) {
    return Similarity::kWordExchange;
  }
  if (cs <= kSummaryLengthRatio * gs && containment(c, g) >= overlap_threshold) return Similarity::kSummary;
  return Similarity::kDivergent;
}

void check_threshold(double t, const char* name) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument(std::string(name) + " must be in (0, 1]");
}

}  // namespace

std::string to_string(Completeness value) {
  switch (value) {
    case Completeness::kFull: return "Full";
    case Completeness::kPartial: return "Partial";
    case Completeness::kPartialEllipsis: return "PartialEllipsis";
  }
  return "Full";
}

std::string to_string(Similarity value) {
  switch (value) {
    case Similarity::kSameText: return "SameText";
    case Similarity::kSummary: return "Summary";
    case Similarity::kWordExchange: return "WordExchange";
    case Similarity::kDivergent: return "Divergent";
  }
  return "Divergent";
}

std::string to_string(FpKind value) {
  return value == FpKind::kNotPoL ? "NotPoL" : "Hallucination";
}

double containment_score(std::string_view candidate, std::string_view gold) {
  return containment(text::match_tokens(candidate), text::match_tokens(gold));
}

Completeness completeness_of(std::string_view candidate, std::string_view gold) {
  return completeness_tokens(candidate, text::match_tokens(candidate), text::match_tokens(gold));
}

Similarity similarity_of(std::string_view candidate, std::string_view gold, double overlap_threshold) {
  return similarity_tokens(text::match_tokens(candidate), text::match_tokens(gold), overlap_threshold);
}

double best_paragraph_score(std::string_view candidate, const Document& document) {
  const auto where = locate_passage(candidate, document);
  return where ? where->score : 0.0;
}

AlignmentResult align(const std::vector<PoLCandidate>& candidates,
                      const std::vector<GoldAnnotation>& gold, const Document& document,
                      const AlignOptions& options) {
  check_threshold(options.overlap_threshold, "overlap threshold");
  check_threshold(options.hallucination_threshold, "hallucination threshold");
  for (const auto& c : candidates) {
    if (c.doc_id != document.doc_id()) {
      throw DocMismatch("candidate from '" + c.doc_id + "' aligned against '" + document.doc_id() + "'");
    }
  }
  for (const auto& g : gold) {
    if (g.doc_id != document.doc_id()) {
      throw DocMismatch("gold annotation from '" + g.doc_id + "' aligned against '" + document.doc_id() + "'");
    }
  }

  std::vector<Tokens> cand_tokens;
  std::vector<Tokens> gold_tokens;
  cand_tokens.reserve(candidates.size());
  gold_tokens.reserve(gold.size());
  for (const auto& c : candidates) cand_tokens.push_back(text::match_tokens(c.text));
  for (const auto& g : gold) gold_tokens.push_back(text::match_tokens(g.span_text));

  struct Edge {
    double score;
    std::size_t gi;
    std::size_t ci;
  };
  std::vector<Edge> edges;
  for (std::size_t gi = 0; gi < gold.size(); ++gi) {
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const double s = containment(cand_tokens[ci], gold_tokens[gi]);
      if (s >= options.overlap_threshold) edges.push_back({s, gi, ci});
    }
  }
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(gold[a.gi].paragraph_index, candidates[a.ci].paragraph_index, a.gi, a.ci) <
           std::tie(gold[b.gi].paragraph_index, candidates[b.ci].paragraph_index, b.gi, b.ci);
  });

  std::vector<std::optional<std::size_t>> gold_to_cand(gold.size());
  std::vector<double> gold_score(gold.size(), 0.0);
  std::vector<bool> cand_used(candidates.size(), false);
  for (const Edge& e : edges) {
    if (gold_to_cand[e.gi] || cand_used[e.ci]) continue;
    gold_to_cand[e.gi] = e.ci;
    gold_score[e.gi] = e.score;
    cand_used[e.ci] = true;
  }

  AlignmentResult result;
  result.doc_id = document.doc_id();
  for (std::size_t gi = 0; gi < gold.size(); ++gi) {
    if (!gold_to_cand[gi]) {
      result.false_negatives.push_back(gold[gi]);
      continue;
    }
    const std::size_t ci = *gold_to_cand[gi];
    const Tokens& c = cand_tokens[ci];
    const Tokens& g = gold_tokens[gi];
    result.matches.push_back({gold[gi], candidates[ci], completeness_tokens(candidates[ci].text, c, g),
                              similarity_tokens(c, g, options.overlap_threshold), gold_score[gi]});
  }
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    if (cand_used[ci]) continue;
    const double best = best_paragraph_score(candidates[ci].text, document);
    const FpKind kind = best < options.hallucination_threshold ? FpKind::kHallucination : FpKind::kNotPoL;
    result.false_positives.push_back({candidates[ci], kind, best});
  }
  return result;
}

std::vector<AlignmentResult> align_corpus(const std::vector<PoLCandidate>& candidates, const GoldSet& gold,
                                          const std::vector<Document>& documents, const AlignOptions& options,
                                          unsigned jobs) {
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < documents.size(); ++i) slot.emplace(documents[i].doc_id(), i);
  std::vector<std::vector<PoLCandidate>> cand_by_doc(documents.size());
  std::vector<std::vector<GoldAnnotation>> gold_by_doc(documents.size());
  for (const auto& c : candidates) {
    const auto it = slot.find(c.doc_id);
    if (it == slot.end()) throw DocMismatch("candidate names unknown document '" + c.doc_id + "'");
    cand_by_doc[it->second].push_back(c);
  }
  for (const auto& g : gold.annotations()) {
    const auto it = slot.find(g.doc_id);
    if (it == slot.end()) throw DocMismatch("gold annotation names unknown document '" + g.doc_id + "'");
    gold_by_doc[it->second].push_back(g);
  }
  std::vector<AlignmentResult> out(documents.size());
  parallel_for(documents.size(), jobs,
               [&](std::size_t i) { out[i] = align(cand_by_doc[i], gold_by_doc[i], documents[i], options); });
  return out;
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

ConfusionCounts confusion(const AlignmentResult& alignment) {
  return {alignment.matches.size(), alignment.false_positives.size(), alignment.false_negatives.size()};
}

ConfusionCounts merge(const std::vector<ConfusionCounts>& parts) {
  ConfusionCounts total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace polex
