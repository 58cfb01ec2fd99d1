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


// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and
// exits nonzero when any selected criterion fails. Published figures are
// compared verbatim; a mismatch is reported, never adjusted.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paper_scale.h"
#include "polex/citation.h"
#include "polex/errors.h"
#include "polex/eval.h"
#include "polex/extractor.h"
#include "polex/goldstore.h"
#include "polex/llm.h"
#include "polex/patterns.h"
#include "test_util.h"

namespace polex {
namespace {

using nlohmann::json;
using testing::fixture;
namespace fs = std::filesystem;

// Collects failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
  void note(const std::string& line) { notes_.push_back(line); }

  bool passed() const { return failures_.empty(); }
  std::size_t total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Metric values at three decimals.
void metric_reproduction(Check& c) {
  struct Row {
    ConfusionCounts counts;
    std::vector<std::string> published;  // precision, recall, accuracy, f1
  };
  const std::vector<Row> rows = {
      {{161, 45, 525}, {"0.235", "0.781", "0.220", "0.361"}},
      {{365, 87, 321}, {"0.532", "0.807", "0.472", "0.641"}},
      {{682, 0, 4}, {"0.994", "1.000", "0.994", "0.997"}},
  };
  const auto start = std::chrono::steady_clock::now();
  for (const auto& r : rows) {
    const MetricsReport m = metrics(r.counts, MetricsMode::kPaper);
    const std::vector<Ratio> got = {m.precision_ratio(), m.recall_ratio(), m.accuracy_ratio(), m.f1_ratio()};
    const char* names[] = {"precision", "recall", "accuracy", "f1"};
    const std::string label = "(" + std::to_string(r.counts.tp) + "," + std::to_string(r.counts.fp) + "," +
                              std::to_string(r.counts.fn) + ") ";
    for (int i = 0; i < 4; ++i) {
      c.equal(got[i].rounded(3), r.published[i],
              label + names[i] + " = " + std::to_string(got[i].num) + "/" + std::to_string(got[i].den));
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
}

TypeCounts type_counts(std::uint64_t implicit, std::uint64_t direct, std::uint64_t indirect) {
  return {{PoLType::kImplicit, implicit}, {PoLType::kExplicitDirect, direct}, {PoLType::kExplicitIndirect, indirect}};
}

// Published per-method counts. Error splits follow the per-candidate triage.
std::vector<MethodCounts> published_methods() {
  return {{"ChatGPT", type_counts(6, 91, 64), 16, 29},
          {"Regex", type_counts(22, 232, 111), 87, 0},
          {"Annotators", type_counts(87, 293, 302), 0, 0}};
}

ComparisonTable published_table() { return comparison_from_counts(type_counts(91, 293, 302), published_methods()); }

// Numeric equality of a one-decimal figure with a published figure that
// may omit trailing zeros ("31", "100").
bool same_figure(const std::string& ours, const std::string& published) {
  return std::llround(std::stod(ours) * 10) == std::llround(std::stod(published) * 10);
}

// The synthetic corpus aligned end to end gives the same method counts.
void check_fixture_counts(Check& c) {
  const auto& f = testing::paper_scale();
  const AlignOptions opts;
  std::map<std::string, std::vector<AlignmentResult>> by_method;
  for (const auto& [name, cands] : {std::pair{"ChatGPT", &f.llm}, std::pair{"Regex", &f.rules},
                                     std::pair{"Annotators", &f.annotators}}) {
    by_method[name] = align_corpus(*cands, f.gold, f.documents, opts);
  }
  for (const auto& want : published_methods()) {
    const MethodCounts got = method_counts(want.name, by_method[want.name]);
    for (PoLType t : kAllPoLTypes) {
      c.equal(got.found.at(t), want.found.at(t), "fixture " + want.name + " " + to_string(t));
    }
    c.equal(got.not_pol, want.not_pol, "fixture " + want.name + " not_pol");
    c.equal(got.hallucination, want.hallucination, "fixture " + want.name + " hallucination");
  }
}

// 2. Comparison percentages at one decimal.
void percentage_reproduction(Check& c) {
  const std::vector<std::string> published = {"23.5", "6.6",  "31",   "21.2", "53.2", "24.2",
                                              "79.2", "36.7", "99.4", "95.6", "100",  "100"};
  const auto start = std::chrono::steady_clock::now();
  const ComparisonTable table = published_table();
  std::vector<std::pair<std::string, Ratio>> ours;
  for (const auto& row : table.rows) {
    ours.emplace_back(row.method + " total", row.total.percent);
    for (PoLType t : kAllPoLTypes) ours.emplace_back(row.method + " " + to_string(t), row.by_type.at(t).percent);
  }
  const double t = seconds_since(start);
  c.equal(ours.size(), published.size(), "figure count");
  for (std::size_t i = 0; i < std::min(ours.size(), published.size()); ++i) {
    const std::string got = ours[i].second.rounded(1);
    c.expect(same_figure(got, published[i]), ours[i].first + " = " + std::to_string(ours[i].second.num) + "/" +
                                                 std::to_string(ours[i].second.den) + ": got " + got + ", want " +
                                                 published[i]);
  }
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
  check_fixture_counts(c);
}

// 3. Error shares at one decimal, with the transposition note.
void error_share_reproduction(Check& c) {
  const ComparisonTable table = published_table();
  const std::map<std::string, std::string> published = {{"ChatGPT", "21.8"}, {"Regex", "19.0"}};
  for (const auto& e : table.errors) {
    const auto it = published.find(e.method);
    if (it == published.end()) continue;
    c.expect(same_figure(e.errors.percent.rounded(1), it->second),
             e.method + " errors " + std::to_string(e.errors.count) + "/" + std::to_string(e.extracted) +
                 ": got " + e.errors.percent.rounded(1) + ", want " + it->second);
  }
  const bool noted = std::any_of(table.footer.begin(), table.footer.end(), [](const std::string& f) {
    return f.find("ChatGPT") != std::string::npos && f.find("transposed") != std::string::npos;
  });
  c.expect(noted, "footer notes the Not-PoL / Hallucination transposition");
  const std::string md = comparison_markdown(table);
  c.expect(md.find("transposed (29 / 16)") != std::string::npos, "rendered report carries the note");
}

// 4. Rule engine against the reference-engine replay.
void oracle_equivalence(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  std::ifstream in(fixture("oracle/rule_cases.jsonl"));
  const RuleProfile v1 = RuleProfile::v1_broad();
  const RuleProfile v2 = RuleProfile::v2_refined();
  std::size_t n = 0, disagreements = 0;
  std::set<int> combos;
  bool cass_quirk = false, trib_quirk = false, trailing_period = false;
  for (std::string line; std::getline(in, line); ++n) {
    const json k = json::parse(line);
    const std::string text = k["text"];
    const bool has_quote = !k["quotes"].empty();
    const bool has_keyword = !k["keywords"].empty();
    const bool has_end = !k["citation_v2"].is_null();
    combos.insert(has_quote * 4 + has_keyword * 2 + has_end);
    cass_quirk = cass_quirk || text.find("Cass. ") != std::string::npos;
    trib_quirk = trib_quirk || text.find("Trib. ") != std::string::npos;
    trailing_period = trailing_period || (text.size() > 1 && text.substr(text.size() - 2) == ").");

    const Document d("d", {text});
    for (const auto& [key, profile] : {std::pair{"v1", &v1}, std::pair{"v2", &v2}}) {
      const auto got = extract_candidates(d, *profile);
      const bool want = k[key]["selected"].get<bool>() && d.size() == 1;
      bool agree = got.size() == (want ? 1u : 0u);
      if (agree && want) {
        agree = to_string(got[0].trigger) == k[key]["trigger"].get<std::string>() &&
                got[0].quote == k[key]["quote"].get<std::string>();
      }
      if (!agree) {
        ++disagreements;
        if (disagreements <= 3) c.expect(false, std::string(key) + " disagrees on: " + text);
      }
    }
  }
  const double t = seconds_since(start);
  c.equal(disagreements, 0u, "disagreements");
  c.expect(n >= 1000, "corpus size " + std::to_string(n));
  c.equal(combos.size(), 8u, "feature combinations covered");
  c.expect(cass_quirk && trib_quirk && trailing_period, "boundary quirk cases present");
  c.expect(t < 10.0, "runtime " + std::to_string(t) + " s");
  c.note(std::to_string(n) + " paragraphs, " + std::to_string(t).substr(0, 5) + " s");
}

// 5. CSV output against golden files and an independent reader.
void csv_bit_exactness(Check& c) {
  testing::ScratchDir dir;
  const CorpusLoad load = load_corpus(fixture("corpus"));
  c.equal(load.documents.size(), 3u, "documents loaded");
  bool empty_quote = false;
  for (const auto& doc : load.documents) {
    const auto cands = extract_candidates(doc, RuleProfile::v2_refined());
    const fs::path out = emit_csv(cands, doc.doc_id() + ".docx", dir.path());
    const std::string bytes = testing::read_file(out);
    c.expect(bytes == testing::read_file(fixture("golden/" + doc.doc_id() + ".csv")), doc.doc_id() + " golden bytes");
    c.expect(bytes.rfind("Paragraph,Quote\n", 0) == 0, doc.doc_id() + " header");
    const auto rows = testing::parse_csv(bytes);
    c.equal(rows.size(), cands.size() + 1, doc.doc_id() + " row count");
    for (std::size_t i = 0; i < cands.size() && i + 1 < rows.size(); ++i) {
      const std::vector<std::string> want = {cands[i].text, cands[i].quote};
      c.expect(rows[i + 1] == want, doc.doc_id() + " row " + std::to_string(i + 1) + " round-trip");
      empty_quote = empty_quote || (cands[i].trigger == Trigger::kCitationAtEnd && rows[i + 1][1].empty());
    }
  }
  c.expect(empty_quote, "citation-only row with empty Quote");
}

// 6. The six citation formats.
void citation_coverage(Check& c) {
  using std::chrono::day;
  using std::chrono::month;
  using std::chrono::year;
  using std::chrono::year_month_day;
  struct Case {
    std::string raw;
    std::function<bool(const CitationRef&)> ok;
  };
  const std::vector<Case> cases = {
      {"Cass. n. 26972/2008",
       [](const CitationRef& r) { return r.court == Court::kCassazione && r.number == 26972 && r.year == 2008; }},
      {"Civ. Cass., UU. SS., n. 26972/2008",
       [](const CitationRef& r) {
         return r.court == Court::kCassazione && r.section == "U.S." && r.division == "civ." && r.number == 26972 &&
                r.year == 2008;
       }},
      {"Corte di Cassazione, Sezioni Unite, n. 26972 dell'11 novembre 2008",
       [](const CitationRef& r) {
         return r.court == Court::kCassazione && r.section == "U.S." && r.number == 26972 && r.year == 2008 &&
                r.date == year_month_day(year(2008), month(11), day(11));
       }},
      {"Cass., sez. I, 22/06/2016 n. 12962",
       [](const CitationRef& r) {
         return r.court == Court::kCassazione && r.section == "sez. I" && r.number == 12962 && r.year == 2016 &&
                r.date == year_month_day(year(2016), month(6), day(22));
       }},
      {"sent. 22.06.2016 n. 12962",
       [](const CitationRef& r) {
         return r.number == 12962 && r.year == 2016 && r.date == year_month_day(year(2016), month(6), day(22));
       }},
      {"Corte Cost. 217/2019",
       [](const CitationRef& r) {
         return r.court == Court::kCorteCostituzionale && r.number == 217 && r.year == 2019;
       }},
  };
  for (const auto& k : cases) {
    try {
      const CitationRef r = parse_citation(k.raw);
      c.expect(k.ok(r) && r.raw == k.raw, "fields of " + k.raw + ": " + citation_to_json(r).dump());
    } catch (const UnparseableCitation& e) {
      c.expect(false, k.raw + ": " + e.what());
    }
  }
  for (const std::string raw : {"cfr. Cass. n. 26972/2008", "v. Corte Cost. 217/2019"}) {
    const CitationRef r = parse_citation(raw);
    c.expect(r.marker && raw.rfind(*r.marker, 0) == 0 && r.raw == raw, "marker recorded for " + raw);
  }
}

// 7. Highlight import.
void gold_import(Check& c) {
  const HighlightImport imp = import_docx_highlights(fixture("highlights/three_colours.docx"));
  c.equal(imp.annotations.size(), 3u, "annotations");
  if (imp.annotations.size() != 3) return;
  c.equal(to_string(imp.annotations[0].pol_type), to_string(PoLType::kExplicitDirect), "yellow type");
  c.equal(to_string(imp.annotations[1].pol_type), to_string(PoLType::kExplicitIndirect), "blue type");
  c.equal(to_string(imp.annotations[2].pol_type), to_string(PoLType::kImplicit), "gray type");
  c.equal(imp.annotations[0].span_text, std::string("“ab” (Cass. 1/2019)"), "split yellow runs merged");
}

std::vector<ConfusionCounts> per_document_counts() {
  const auto& f = testing::paper_scale();
  std::vector<ConfusionCounts> out;
  for (const auto* cands : {&f.llm, &f.rules}) {
    for (const auto& a : align_corpus(*cands, f.gold, f.documents)) out.push_back(confusion(a));
  }
  return out;
}

bool same_metrics(const ConfusionCounts& a, const ConfusionCounts& b) {
  for (MetricsMode mode : {MetricsMode::kPaper, MetricsMode::kStandard}) {
    const MetricsReport x = metrics(a, mode);
    const MetricsReport y = metrics(b, mode);
    if (!(x.precision_ratio() == y.precision_ratio() && x.recall_ratio() == y.recall_ratio() &&
          x.accuracy_ratio() == y.accuracy_ratio() && x.f1_ratio() == y.f1_ratio())) {
      return false;
    }
  }
  return true;
}

// 8. Merging any partition of per-document counts gives corpus metrics.
void monoid_law(Check& c) {
  const std::vector<ConfusionCounts> docs = per_document_counts();
  const ConfusionCounts whole = merge(docs);
  std::mt19937_64 rng(0x5eed);
  constexpr int kPartitions = 200;
  int bad = 0;
  for (int p = 0; p < kPartitions; ++p) {
    std::vector<ConfusionCounts> shuffled = docs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const std::size_t parts = std::uniform_int_distribution<std::size_t>(1, shuffled.size())(rng);
    std::vector<std::vector<ConfusionCounts>> groups(parts);
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
      groups[i < parts ? i : std::uniform_int_distribution<std::size_t>(0, parts - 1)(rng)].push_back(shuffled[i]);
    }
    std::vector<ConfusionCounts> partials;
    for (const auto& g : groups) partials.push_back(merge(g));
    const ConfusionCounts merged = merge(partials);
    if (!(merged == whole) || !same_metrics(merged, whole)) ++bad;
  }
  c.equal(bad, 0, "partitions disagreeing with the corpus total");
  c.note(std::to_string(kPartitions) + " partitions of " + std::to_string(docs.size()) + " per-document counts");
}

// 9. PaperMode and StandardMode are exact mirror images.
void mode_duality(Check& c) {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<std::uint64_t> count(0, 5000);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const ConfusionCounts k{count(rng), count(rng), count(rng)};
    const MetricsReport p = metrics(k, MetricsMode::kPaper);
    const MetricsReport s = metrics(k, MetricsMode::kStandard);
    const bool ok = p.precision_ratio() == s.recall_ratio() && p.recall_ratio() == s.precision_ratio() &&
                    p.f1_ratio() == s.f1_ratio() && p.precision == s.recall && p.recall == s.precision &&
                    p.f1 == s.f1;
    if (!ok) ++bad;
  }
  c.equal(bad, 0, "triples violating duality");
}

// 10. LLM adapter against the offline mocks.
void llm_offline(Check& c) {
  const Document doc = load_document(fixture("llm/corpus/sentenza_a.txt"), DocumentFormat::kPlaintext);
  const GoldSet gold = load_gold(fixture("llm/gold.json"));
  llm::LlmSession session{"mock://", "mock", std::nullopt, 5, 0};

  llm::MockTransport echo = llm::MockTransport::from_directory(fixture("llm/echo"));
  const auto echoed = llm::run_extraction(doc, session, echo);
  const ConfusionCounts e = confusion(align(echoed, gold.for_document(doc.doc_id()), doc));
  c.equal(e.fp, 0u, "echo fp");
  c.equal(e.tp, echoed.size(), "echo tp equals echoed passages");
  c.expect(!echoed.empty(), "echo produced passages");

  llm::MockTransport fab = llm::MockTransport::from_directory(fixture("llm/fabrication"));
  const AlignmentResult f = align(llm::run_extraction(doc, session, fab), gold.for_document(doc.doc_id()), doc);
  const auto kinds = [&](FpKind k) {
    return std::count_if(f.false_positives.begin(), f.false_positives.end(),
                         [k](const FalsePositive& fp) { return fp.kind == k; });
  };
  c.equal(kinds(FpKind::kHallucination), 1, "fabrication hallucinations");
  c.equal(kinds(FpKind::kNotPoL), 0, "fabrication not-PoL");

  llm::LlmSession budget{"mock://", "mock", std::nullopt, 5, 0};
  bool raised = false;
  int sent = 0;
  try {
    for (int i = 0; i < 6; ++i) {
      llm::run_extraction(doc, budget, echo);
      ++sent;
    }
  } catch (const BudgetExceeded&) {
    raised = true;
  }
  c.expect(raised && sent == 5, "sixth query on a budget-5 session raises BudgetExceeded (sent " +
                                    std::to_string(sent) + ")");
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Check&);
};

const Criterion kCriteria[] = {
    {1, "metric reproduction", metric_reproduction},
    {2, "percentage reproduction", percentage_reproduction},
    {3, "error-share reproduction", error_share_reproduction},
    {4, "rule engine oracle equivalence", oracle_equivalence},
    {5, "CSV bit-exactness", csv_bit_exactness},
    {6, "citation parser coverage", citation_coverage},
    {7, "gold import", gold_import},
    {8, "monoid law", monoid_law},
    {9, "mode duality", mode_duality},
    {10, "LLM adapter offline", llm_offline},
};

}  // namespace
}  // namespace polex

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::cerr << "criterion must be between 1 and 10\n";
    return 2;
  }
  int failed = 0;
  for (const auto& crit : polex::kCriteria) {
    if (only != 0 && crit.id != only) continue;
    polex::Check check;
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << crit.id << " (" << crit.name << "): " << (check.passed() ? "PASS" : "FAIL") << " ["
              << check.total() - check.failures().size() << "/" << check.total() << " checks]\n";
    for (const auto& f : check.failures()) std::cout << "    mismatch: " << f << '\n';
    for (const auto& n : check.notes()) std::cout << "    " << n << '\n';
    if (!check.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
