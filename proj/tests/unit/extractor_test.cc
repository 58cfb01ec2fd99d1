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


#include "polex/extractor.h"

#include <fstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "polex/errors.h"
#include "polex/patterns.h"
#include "test_util.h"

namespace polex {
namespace {

using nlohmann::json;
using testing::fixture;
using testing::parse_csv;
using testing::read_file;
using testing::ScratchDir;

Document one(std::string text) { return Document("d", {std::move(text)}); }

TEST(Extract, QuoteAndKeyword) {
  const auto c = extract_candidates(one("La Corte ha affermato “x” (Cass. 217/2019)"), RuleProfile::v2_refined());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].trigger, Trigger::kQuoteAndKeyword);
  EXPECT_EQ(c[0].quote, "“x”");
  EXPECT_EQ(c[0].pol_type, PoLType::kExplicitDirect);
  EXPECT_EQ(c[0].source, Source::kRules);
  ASSERT_EQ(c[0].citations.size(), 1u);
  EXPECT_EQ(c[0].citations[0].number, 217);
}

TEST(Extract, CitationAtEnd) {
  const auto c = extract_candidates(one("…carico dell'Erario (Corte Cost. 217/2019)"), RuleProfile::v2_refined());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].trigger, Trigger::kCitationAtEnd);
  EXPECT_EQ(c[0].quote, "");
  EXPECT_EQ(c[0].pol_type, PoLType::kExplicitIndirect);
}

TEST(Extract, QuoteWithoutKeywordOrCitation) {
  EXPECT_TRUE(extract_candidates(one("Egli disse “x” e poi tacque."), RuleProfile::v2_refined()).empty());
  const auto v1 = extract_candidates(one("Egli disse “x” e poi tacque."), RuleProfile::v1_broad());
  ASSERT_EQ(v1.size(), 1u);
  EXPECT_EQ(v1[0].trigger, Trigger::kQuoteOnly);
}

TEST(Extract, BroadProfileBranchOrder) {
  const auto p = RuleProfile::v1_broad();
  EXPECT_EQ(extract_candidates(one("vedi (Cass. 1/2019) e oltre"), p).at(0).trigger, Trigger::kCitationAnywhere);
  EXPECT_EQ(extract_candidates(one("la giurisprudenza ha sostenuto che"), p).at(0).trigger, Trigger::kKeywordOnly);
  EXPECT_EQ(extract_candidates(one("la corte “x” (Cass. 1/2019)"), p).at(0).trigger, Trigger::kQuoteOnly);
}

TEST(Extract, FirstQuoteOrOnePerQuote) {
  const Document d = one("Il collegio richiama «uno» e «due».");
  const auto first = extract_candidates(d, RuleProfile::v2_refined());
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].quote, "«uno»");
  RuleProfile each = RuleProfile::extended();
  each.one_candidate_per_quote = true;
  const auto all = extract_candidates(d, each);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].quote, "«due»");
}

// Selection set and captured quote against the reference-engine replay of
// both published scripts.
TEST(Extract, AgreesWithPublishedScripts) {
  std::ifstream in(fixture("oracle/rule_cases.jsonl"));
  std::size_t n = 0;
  for (std::string line; std::getline(in, line); ++n) {
    const json c = json::parse(line);
    const Document d("d", {c["text"].get<std::string>()});
    SCOPED_TRACE(c["text"].get<std::string>());
    for (const auto& [key, profile] : {std::pair{"v1", RuleProfile::v1_broad()},
                                       std::pair{"v2", RuleProfile::v2_refined()}}) {
      const auto got = extract_candidates(d, profile);
      // Blank paragraphs never reach the rule engine.
      const bool selected = c[key]["selected"].get<bool>() && d.size() == 1;
      ASSERT_EQ(got.size(), selected ? 1u : 0u) << key;
      if (selected) {
        EXPECT_EQ(to_string(got[0].trigger), c[key]["trigger"].get<std::string>()) << key;
        EXPECT_EQ(got[0].quote, c[key]["quote"].get<std::string>()) << key;
      }
    }
  }
  EXPECT_GE(n, 1000u);
}

TEST(Extract, DeterministicAndOrdered) {
  const Document d = load_document(fixture("corpus/s01.docx"), DocumentFormat::kDocx);
  const auto a = extract_candidates(d, RuleProfile::v2_refined());
  EXPECT_EQ(a, extract_candidates(d, RuleProfile::v2_refined()));
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].paragraph_index, a[i].paragraph_index);
}

TEST(Extract, CorpusParallelMatchesSequential) {
  const auto docs = load_corpus(fixture("corpus")).documents;
  EXPECT_EQ(extract_corpus(docs, RuleProfile::v2_refined(), 1), extract_corpus(docs, RuleProfile::v2_refined(), 8));
}

TEST(Classify, Definitions) {
  PoLCandidate c;
  c.quote = "“x”";
  c.citations = {parse_citation("Cass. 217/2019")};
  EXPECT_EQ(classify_candidate(c), PoLType::kExplicitDirect);
  c.quote.clear();
  EXPECT_EQ(classify_candidate(c), PoLType::kExplicitIndirect);
  c.citations.clear();
  c.text = "la giurisprudenza ha sostenuto che il termine decorre";
  EXPECT_EQ(classify_candidate(c), PoLType::kImplicit);
}

TEST(Classify, StableUnderCitationOrder) {
  PoLCandidate c;
  c.citations = {parse_citation("Cass. 1/2019"), parse_citation("Corte Cost. 217/2019")};
  const PoLType t = classify_candidate(c);
  std::swap(c.citations[0], c.citations[1]);
  EXPECT_EQ(classify_candidate(c), t);
}

TEST(EmitCsv, HeaderAndRows) {
  ScratchDir dir;
  PoLCandidate quoted;
  quoted.text = "La Corte “x”";
  quoted.quote = "“x”";
  PoLCandidate cited;
  cited.text = "testo (Cass. 1/2019)";
  const auto path = emit_csv({quoted, cited}, "s01.docx", dir / std::string(kDefaultOutputDirectory));
  EXPECT_EQ(path, dir / "Principi" / "s01.csv");
  EXPECT_EQ(read_file(path), "Paragraph,Quote\nLa Corte “x”,“x”\ntesto (Cass. 1/2019),\n");
}

TEST(EmitCsv, EmptyCandidateList) {
  ScratchDir dir;
  EXPECT_EQ(read_file(emit_csv({}, "vuoto.docx", dir.path())), "Paragraph,Quote\n");
}

TEST(EmitCsv, EscapingRoundTrips) {
  ScratchDir dir;
  PoLCandidate c;
  c.text = "a, \"b\"\nc";
  c.quote = "\"b\"";
  const auto rows = parse_csv(read_file(emit_csv({c}, "x.docx", dir.path())));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{c.text, c.quote}));
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(csv_field("cr\r"), "\"cr\r\"");
}

TEST(EmitCsv, UnwritableDestination) {
  ScratchDir dir;
  testing::write_file(dir / "file", "x");
  EXPECT_THROW(emit_csv({}, "s.docx", dir / "file"), IoError);
}

TEST(Jsonl, RoundTrip) {
  ScratchDir dir;
  const auto docs = load_corpus(fixture("corpus")).documents;
  std::vector<PoLCandidate> all;
  for (const auto& d : docs) {
    for (auto& c : extract_candidates(d, RuleProfile::v2_refined())) all.push_back(c);
  }
  PoLCandidate llm;
  llm.doc_id = "s01";
  llm.paragraph_index = kUnresolvedParagraph;
  llm.text = "passaggio inventato";
  llm.source = Source::kLlm;
  all.push_back(llm);
  write_jsonl(all, dir / "c.jsonl");
  EXPECT_EQ(read_jsonl(dir / "c.jsonl"), all);
}

TEST(Jsonl, SchemaErrorsNameLineAndField) {
  ScratchDir dir;
  testing::write_file(dir / "bad.jsonl",
                      "{\"doc_id\":\"a\",\"paragraph_index\":0,\"text\":\"t\",\"quote\":\"\","
                      "\"trigger\":\"External\",\"pol_type\":\"Implicit\",\"citations\":[],\"source\":\"LLM\"}\n"
                      "{\"doc_id\":\"a\",\"paragraph_index\":0,\"text\":\"t\",\"quote\":\"\","
                      "\"trigger\":\"QuoteAndKeyword\",\"pol_type\":\"Implicit\",\"citations\":[],\"source\":\"Rules\"}\n");
  try {
    read_jsonl(dir / "bad.jsonl");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer().rfind("/2", 0), 0u) << e.pointer();
  }
}

TEST(LocatePassage, BestParagraph) {
  const Document d("d", {"primo paragrafo qualsiasi", "il nome costituisce un diritto inviolabile della persona"});
  const auto loc = locate_passage("il nome costituisce un diritto", d);
  ASSERT_TRUE(loc);
  EXPECT_EQ(loc->paragraph_index, 1u);
  EXPECT_DOUBLE_EQ(loc->score, 1.0);
  EXPECT_LT(locate_passage("parole del tutto assenti", d)->score, 0.6);
  EXPECT_FALSE(locate_passage("x", Document("e", {})));
}

TEST(Enums, NamesRoundTrip) {
  for (PoLType t : kAllPoLTypes) EXPECT_EQ(parse_pol_type(to_string(t)), t);
  for (Trigger t : {Trigger::kQuoteAndKeyword, Trigger::kCitationAtEnd, Trigger::kQuoteOnly,
                    Trigger::kKeywordOnly, Trigger::kCitationAnywhere, Trigger::kExternal}) {
    EXPECT_EQ(parse_trigger(to_string(t)), t);
  }
  for (Source s : {Source::kRules, Source::kLlm, Source::kHuman}) EXPECT_EQ(parse_source(to_string(s)), s);
}

}  // namespace
}  // namespace polex
