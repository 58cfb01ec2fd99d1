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
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "polex/errors.h"
#include "polex/eval.h"
#include "polex/text.h"

namespace polex {
namespace {

using nlohmann::json;

std::string short_type(PoLType t) {
  switch (t) {
    case PoLType::kImplicit: return "Implicit";
    case PoLType::kExplicitDirect: return "Ex. Direct";
    case PoLType::kExplicitIndirect: return "Ex. Indirect";
  }
  return "";
}

std::uint64_t sum(const TypeCounts& c) {
  std::uint64_t s = 0;
  for (const auto& [_, n] : c) s += n;
  return s;
}

void add_row(TrackingRow& into, const TrackingRow& row) {
  for (PoLType t : kAllPoLTypes) {
    into.ann[t] += row.ann.at(t);
    into.tool[t] += row.tool.at(t);
  }
  into.tool_full += row.tool_full;
  into.tool_partial += row.tool_partial;
  into.tool_partial_ellipsis += row.tool_partial_ellipsis;
  into.same_text += row.same_text;
  into.summary += row.summary;
  into.word_exchange += row.word_exchange;
  into.divergent += row.divergent;
  into.hallucination += row.hallucination;
  into.not_pol += row.not_pol;
  if (row.pages) into.pages = into.pages.value_or(0) + *row.pages;
}

std::string note_for(const TrackingRow& row) {
  const std::uint64_t missed = row.ann_total() - row.tool_total();
  std::vector<std::string> parts;
  if (row.ann_total() > 0 && missed == 0 && row.tool_full == row.tool_total() &&
      row.same_text == row.tool_total() && row.hallucination + row.not_pol == 0) {
    parts.push_back("exact");
  }
  if (missed > 0) parts.push_back("missed " + std::to_string(missed));
  if (row.divergent > 0) parts.push_back(std::to_string(row.divergent) + " divergent");
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

Share share(std::uint64_t count, std::uint64_t base) { return {count, Ratio{count * 100, base}}; }

std::string show(const Share& s) { return std::to_string(s.count) + " (" + s.percent.rounded(1) + "%)"; }

// Renders a Markdown table with every column padded to its widest cell.
std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 3);
  auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], text::codepoint_length(r[i]));
    }
  };
  measure(header);
  for (const auto& r : rows) measure(r);

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& r) {
    out << '|';
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string cell = i < r.size() ? r[i] : "";
      out << ' ' << cell << std::string(width[i] - text::codepoint_length(cell), ' ') << " |";
    }
    out << '\n';
  };
  emit(header);
  out << '|';
  for (std::size_t w : width) out << std::string(w + 2, '-') << '|';
  out << '\n';
  for (const auto& r : rows) emit(r);
  return out.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out + '\n';
}

const std::vector<std::string>& tracking_header() {
  static const std::vector<std::string> kHeader = {
      "Judgment", "ANN", "ANN Implicit", "ANN Ex. Direct", "ANN Ex. Indirect",
      "Tool (full)", "Tool (partial)", "Tool (partial with (...))",
      "Tool Implicit", "Tool Ex. Direct", "Tool Ex. Indirect",
      "Same Text", "Summary", "Word Exchange", "Divergent",
      "Hallucination", "Not-PoL", "Note", "Pag."};
  return kHeader;
}

std::vector<std::string> tracking_cells(const TrackingRow& r) {
  auto n = [](std::uint64_t v) { return std::to_string(v); };
  return {r.doc_id, n(r.ann_total()),
          n(r.ann.at(PoLType::kImplicit)), n(r.ann.at(PoLType::kExplicitDirect)),
          n(r.ann.at(PoLType::kExplicitIndirect)),
          n(r.tool_full), n(r.tool_partial), n(r.tool_partial_ellipsis),
          n(r.tool.at(PoLType::kImplicit)), n(r.tool.at(PoLType::kExplicitDirect)),
          n(r.tool.at(PoLType::kExplicitIndirect)),
          n(r.same_text), n(r.summary), n(r.word_exchange), n(r.divergent),
          n(r.hallucination), n(r.not_pol), r.note,
          r.pages ? std::to_string(*r.pages) : ""};
}

json type_counts_json(const TypeCounts& c) {
  json j = json::object();
  for (const auto& [t, n] : c) j[to_string(t)] = n;
  return j;
}

json share_json(const Share& s) {
  return {{"count", s.count}, {"percent", s.percent.value() * 1.0}, {"percent_rounded", s.percent.rounded(1)}};
}

json tracking_row_json(const TrackingRow& r) {
  json j;
  j["doc_id"] = r.doc_id;
  j["ann"] = type_counts_json(r.ann);
  j["ann_total"] = r.ann_total();
  j["tool_full"] = r.tool_full;
  j["tool_partial"] = r.tool_partial;
  j["tool_partial_ellipsis"] = r.tool_partial_ellipsis;
  j["tool"] = type_counts_json(r.tool);
  j["tool_total"] = r.tool_total();
  j["same_text"] = r.same_text;
  j["summary"] = r.summary;
  j["word_exchange"] = r.word_exchange;
  j["divergent"] = r.divergent;
  j["hallucination"] = r.hallucination;
  j["not_pol"] = r.not_pol;
  j["note"] = r.note;
  j["pages"] = r.pages ? json(*r.pages) : json(nullptr);
  return j;
}

using GoldKey = std::tuple<std::string, long, std::string>;

GoldKey gold_key(const GoldAnnotation& a) { return {a.doc_id, a.paragraph_index, normalize_span(a.span_text)}; }

}  // namespace

TypeCounts zero_type_counts() {
  TypeCounts c;
  for (PoLType t : kAllPoLTypes) c[t] = 0;
  return c;
}

std::uint64_t TrackingRow::ann_total() const { return sum(ann); }

std::uint64_t MethodCounts::tp() const { return sum(found); }

TrackingTable tracking_table(const std::vector<AlignmentResult>& alignments,
                             const std::map<std::string, int>& pages) {
  TrackingTable table;
  table.totals.doc_id = "TOTAL";
  table.totals.ann = zero_type_counts();
  table.totals.tool = zero_type_counts();
  table.type_agreement = zero_type_counts();

  for (const auto& a : alignments) {
    TrackingRow row;
    row.doc_id = a.doc_id;
    row.ann = zero_type_counts();
    row.tool = zero_type_counts();
    for (const auto& m : a.matches) {
      ++row.ann[m.gold.pol_type];
      ++row.tool[m.gold.pol_type];
      if (m.candidate.pol_type == m.gold.pol_type) ++table.type_agreement[m.gold.pol_type];
      switch (m.completeness) {
        case Completeness::kFull: ++row.tool_full; break;
        case Completeness::kPartial: ++row.tool_partial; break;
        case Completeness::kPartialEllipsis: ++row.tool_partial_ellipsis; break;
      }
      switch (m.similarity) {
        case Similarity::kSameText: ++row.same_text; break;
        case Similarity::kSummary: ++row.summary; break;
        case Similarity::kWordExchange: ++row.word_exchange; break;
        case Similarity::kDivergent: ++row.divergent; break;
      }
    }
    for (const auto& g : a.false_negatives) ++row.ann[g.pol_type];
    for (const auto& fp : a.false_positives) {
      ++(fp.kind == FpKind::kHallucination ? row.hallucination : row.not_pol);
    }
    if (const auto it = pages.find(a.doc_id); it != pages.end()) row.pages = it->second;
    row.note = note_for(row);
    add_row(table.totals, row);
    table.rows.push_back(std::move(row));
  }
  table.totals.note = note_for(table.totals);
  return table;
}

MethodCounts method_counts(std::string name, const std::vector<AlignmentResult>& alignments) {
  MethodCounts m;
  m.name = std::move(name);
  m.found = zero_type_counts();
  for (const auto& a : alignments) {
    for (const auto& match : a.matches) ++m.found[match.gold.pol_type];
    for (const auto& fp : a.false_positives) ++(fp.kind == FpKind::kHallucination ? m.hallucination : m.not_pol);
  }
  return m;
}

ComparisonTable comparison_from_counts(const TypeCounts& whole, const std::vector<MethodCounts>& methods) {
  if (methods.size() < 2) throw std::invalid_argument("comparison needs at least two methods");
  ComparisonTable table;
  table.whole = zero_type_counts();
  for (const auto& [t, n] : whole) table.whole[t] = n;
  table.whole_total = sum(table.whole);

  for (const auto& m : methods) {
    ComparisonRow row;
    row.method = m.name;
    row.total = share(m.tp(), table.whole_total);
    for (PoLType t : kAllPoLTypes) {
      const auto it = m.found.find(t);
      row.by_type[t] = share(it == m.found.end() ? 0 : it->second, table.whole.at(t));
    }
    table.rows.push_back(std::move(row));

    ErrorShareRow err;
    err.method = m.name;
    err.extracted = m.tp() + m.errors();
    err.errors = share(m.errors(), err.extracted);
    err.not_pol = share(m.not_pol, err.extracted);
    err.hallucination = share(m.hallucination, err.extracted);
    table.errors.push_back(std::move(err));
  }

  table.footer.push_back(
      "Percentages: found / whole PoLs of the same type x 100; error shares: count / (tp + fp) x 100; "
      "both rounded half-up to one decimal.");
  for (const auto& m : methods) {
    if (m.not_pol != m.hallucination && m.not_pol > 0 && m.hallucination > 0) {
      table.footer.push_back(
          m.name + ": Not-PoL = " + std::to_string(m.not_pol) + " (passages present in the source), "
          "Hallucination = " + std::to_string(m.hallucination) + " (passages absent from it). "
          "Tables that list these two columns transposed (" + std::to_string(m.hallucination) + " / " +
          std::to_string(m.not_pol) + ") disagree with the per-candidate triage.");
    }
  }
  return table;
}

ComparisonTable comparison_table(const GoldSet& gold, const std::vector<NamedAlignments>& methods) {
  std::vector<GoldKey> expected;
  for (const auto& a : gold.annotations()) expected.push_back(gold_key(a));
  std::sort(expected.begin(), expected.end());

  std::vector<MethodCounts> counts;
  for (const auto& method : methods) {
    std::vector<GoldKey> seen;
    for (const auto& a : method.alignments) {
      for (const auto& m : a.matches) seen.push_back(gold_key(m.gold));
      for (const auto& g : a.false_negatives) seen.push_back(gold_key(g));
    }
    std::sort(seen.begin(), seen.end());
    if (seen != expected) {
      throw GoldMismatch("method '" + method.name + "' was aligned against " + std::to_string(seen.size()) +
                         " gold annotations that differ from the " + std::to_string(expected.size()) +
                         " in the gold set");
    }
    counts.push_back(method_counts(method.name, method.alignments));
  }
  TypeCounts whole;
  for (const auto& [t, n] : gold.counts_by_type()) whole[t] = n;
  return comparison_from_counts(whole, counts);
}

std::string tracking_csv(const TrackingTable& table) {
  std::string out = csv_line(tracking_header());
  for (const auto& r : table.rows) out += csv_line(tracking_cells(r));
  out += csv_line(tracking_cells(table.totals));
  return out;
}

std::string tracking_markdown(const TrackingTable& table) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) rows.push_back(tracking_cells(r));
  rows.push_back(tracking_cells(table.totals));
  std::string out = markdown_table(tracking_header(), rows);
  out += "\nType agreement (candidate type = gold type):";
  for (PoLType t : kAllPoLTypes) {
    out += " " + short_type(t) + " " + std::to_string(table.type_agreement.at(t)) + "/" +
           std::to_string(table.totals.tool.at(t)) + ";";
  }
  out.back() = '\n';
  return out;
}

std::string comparison_csv(const ComparisonTable& table) {
  std::string out = csv_line({"Method", "PoLs", "PoLs %", "Implicit", "Implicit %", "Explicit", "Explicit %",
                              "Indirect", "Indirect %"});
  out += csv_line({"Whole PoLs", std::to_string(table.whole_total), "",
                   std::to_string(table.whole.at(PoLType::kImplicit)), "",
                   std::to_string(table.whole.at(PoLType::kExplicitDirect)), "",
                   std::to_string(table.whole.at(PoLType::kExplicitIndirect)), ""});
  for (const auto& r : table.rows) {
    std::vector<std::string> cells = {r.method, std::to_string(r.total.count), r.total.percent.rounded(1)};
    for (PoLType t : kAllPoLTypes) {
      cells.push_back(std::to_string(r.by_type.at(t).count));
      cells.push_back(r.by_type.at(t).percent.rounded(1));
    }
    out += csv_line(cells);
  }
  out += '\n';
  out += csv_line({"Method", "PoLs", "Errors", "Errors %", "Not-PoLs", "Not-PoLs %", "Hallucinations",
                   "Hallucinations %"});
  for (const auto& e : table.errors) {
    out += csv_line({e.method, std::to_string(e.extracted), std::to_string(e.errors.count),
                     e.errors.percent.rounded(1), std::to_string(e.not_pol.count), e.not_pol.percent.rounded(1),
                     std::to_string(e.hallucination.count), e.hallucination.percent.rounded(1)});
  }
  for (const auto& f : table.footer) out += csv_line({"# " + f});
  return out;
}

std::string comparison_markdown(const ComparisonTable& table) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Whole PoLs", std::to_string(table.whole_total),
                  std::to_string(table.whole.at(PoLType::kImplicit)),
                  std::to_string(table.whole.at(PoLType::kExplicitDirect)),
                  std::to_string(table.whole.at(PoLType::kExplicitIndirect))});
  for (const auto& r : table.rows) {
    rows.push_back({r.method, show(r.total), show(r.by_type.at(PoLType::kImplicit)),
                    show(r.by_type.at(PoLType::kExplicitDirect)), show(r.by_type.at(PoLType::kExplicitIndirect))});
  }
  std::string out = markdown_table({"", "PoLs", "Implicit", "Explicit", "Indirect"}, rows);

  std::vector<std::vector<std::string>> err_rows;
  for (const auto& e : table.errors) {
    err_rows.push_back({e.method, std::to_string(e.extracted), show(e.errors), show(e.not_pol), show(e.hallucination)});
  }
  out += '\n' + markdown_table({"", "PoLs", "Errors", "Not-PoLs", "Hallucinations"}, err_rows);
  out += '\n';
  for (const auto& f : table.footer) out += "Note: " + f + '\n';
  return out;
}

std::string metrics_markdown(const std::vector<std::pair<std::string, ConfusionCounts>>& methods,
                             MetricsMode mode) {
  std::vector<std::string> header = {to_string(mode)};
  std::vector<std::vector<std::string>> rows = {{"Precision"}, {"Recall"}, {"Accuracy"}, {"F1-score"}};
  for (const auto& [name, counts] : methods) {
    header.push_back(name);
    const MetricsReport r = metrics(counts, mode);
    rows[0].push_back(r.precision_ratio().rounded(3));
    rows[1].push_back(r.recall_ratio().rounded(3));
    rows[2].push_back(r.accuracy_ratio().rounded(3));
    rows[3].push_back(r.f1_ratio().rounded(3));
  }
  return markdown_table(header, rows);
}

json metrics_to_json(const MetricsReport& r) {
  json j;
  j["mode"] = to_string(r.mode);
  j["tp"] = r.counts.tp;
  j["fp"] = r.counts.fp;
  j["fn"] = r.counts.fn;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["accuracy"] = r.accuracy;
  j["f1"] = r.f1;
  j["rounded"] = {{"precision", r.precision_ratio().rounded(3)},
                  {"recall", r.recall_ratio().rounded(3)},
                  {"accuracy", r.accuracy_ratio().rounded(3)},
                  {"f1", r.f1_ratio().rounded(3)}};
  return j;
}

json tracking_to_json(const TrackingTable& table) {
  json j;
  j["rows"] = json::array();
  for (const auto& r : table.rows) j["rows"].push_back(tracking_row_json(r));
  j["totals"] = tracking_row_json(table.totals);
  j["type_agreement"] = type_counts_json(table.type_agreement);
  return j;
}

json comparison_to_json(const ComparisonTable& table) {
  json j;
  j["whole"] = type_counts_json(table.whole);
  j["whole_total"] = table.whole_total;
  j["rows"] = json::array();
  for (const auto& r : table.rows) {
    json row;
    row["method"] = r.method;
    row["total"] = share_json(r.total);
    for (const auto& [t, s] : r.by_type) row["by_type"][to_string(t)] = share_json(s);
    j["rows"].push_back(row);
  }
  j["errors"] = json::array();
  for (const auto& e : table.errors) {
    j["errors"].push_back({{"method", e.method},
                           {"extracted", e.extracted},
                           {"errors", share_json(e.errors)},
                           {"not_pol", share_json(e.not_pol)},
                           {"hallucination", share_json(e.hallucination)}});
  }
  j["footer"] = table.footer;
  return j;
}

json alignment_to_json(const AlignmentResult& a) {
  json j;
  j["doc_id"] = a.doc_id;
  j["matches"] = json::array();
  for (const auto& m : a.matches) {
    j["matches"].push_back({{"gold_paragraph_index", m.gold.paragraph_index},
                            {"gold_type", to_string(m.gold.pol_type)},
                            {"candidate_paragraph_index", m.candidate.paragraph_index},
                            {"candidate_type", to_string(m.candidate.pol_type)},
                            {"completeness", to_string(m.completeness)},
                            {"similarity", to_string(m.similarity)},
                            {"score", m.score}});
  }
  j["false_positives"] = json::array();
  for (const auto& fp : a.false_positives) {
    j["false_positives"].push_back({{"paragraph_index", fp.candidate.paragraph_index},
                                    {"kind", to_string(fp.kind)},
                                    {"best_paragraph_score", fp.best_paragraph_score},
                                    {"text", fp.candidate.text}});
  }
  j["false_negatives"] = json::array();
  for (const auto& g : a.false_negatives) {
    j["false_negatives"].push_back({{"paragraph_index", g.paragraph_index},
                                    {"pol_type", to_string(g.pol_type)},
                                    {"span_text", g.span_text}});
  }
  return j;
}

}  // namespace polex
