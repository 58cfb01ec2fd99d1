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


#include "polex/goldstore.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "paper_scale.h"
#include "polex/errors.h"
#include "test_util.h"

namespace polex {
namespace {

using nlohmann::json;
using testing::fixture;
using testing::ScratchDir;

GoldAnnotation ann(std::string doc, long para, std::string span, PoLType type) {
  GoldAnnotation a;
  a.doc_id = std::move(doc);
  a.paragraph_index = para;
  a.span_text = std::move(span);
  a.pol_type = type;
  return a;
}

TEST(ImportHighlights, ThreeColoursSplitRunMerged) {
  const auto imp = import_docx_highlights(fixture("highlights/three_colours.docx"), "A1");
  ASSERT_EQ(imp.annotations.size(), 3u);
  EXPECT_TRUE(imp.warnings.empty());
  EXPECT_EQ(imp.annotations[0].span_text, "“ab” (Cass. 1/2019)");
  EXPECT_EQ(imp.annotations[0].pol_type, PoLType::kExplicitDirect);
  EXPECT_EQ(imp.annotations[0].paragraph_index, 1);
  EXPECT_EQ(imp.annotations[1].pol_type, PoLType::kExplicitIndirect);
  EXPECT_EQ(imp.annotations[1].paragraph_index, 2);  // the blank paragraph is not counted
  EXPECT_EQ(imp.annotations[2].pol_type, PoLType::kImplicit);
  EXPECT_EQ(imp.annotations[2].span_text, "la buona fede integra il contratto");
  for (const auto& a : imp.annotations) {
    EXPECT_EQ(a.doc_id, "three_colours");
    EXPECT_EQ(a.annotator_id, "A1");
    EXPECT_EQ(a.origin, Origin::kHuman);
  }
}

TEST(ImportHighlights, CyanIsBlueAndUnknownColoursWarn) {
  const auto imp = import_docx_highlights(fixture("highlights/cyan_and_green.docx"));
  ASSERT_EQ(imp.annotations.size(), 1u);
  EXPECT_EQ(imp.annotations[0].pol_type, PoLType::kExplicitIndirect);
  ASSERT_EQ(imp.warnings.size(), 1u);
  EXPECT_NE(imp.warnings[0].find("green"), std::string::npos);
}

TEST(ImportHighlights, AdjacentColoursAndEmptyRuns) {
  const auto imp = import_docx_highlights(fixture("highlights/adjacent.docx"));
  ASSERT_EQ(imp.annotations.size(), 2u);
  EXPECT_EQ(imp.annotations[0].span_text, "prima parte seconda parte");
  EXPECT_EQ(imp.annotations[1].span_text, "terza");
  EXPECT_EQ(imp.annotations[1].pol_type, PoLType::kImplicit);
}

TEST(ImportHighlights, NoHighlightsAndCorruptPackage) {
  EXPECT_TRUE(import_docx_highlights(fixture("highlights/none.docx")).annotations.empty());
  EXPECT_THROW(import_docx_highlights(fixture("corrupt/b.docx")), MalformedArchive);
}

TEST(HighlightColours, Mapping) {
  EXPECT_EQ(pol_type_for_highlight("yellow"), PoLType::kExplicitDirect);
  EXPECT_EQ(pol_type_for_highlight("blue"), PoLType::kExplicitIndirect);
  EXPECT_EQ(pol_type_for_highlight("cyan"), PoLType::kExplicitIndirect);
  EXPECT_EQ(pol_type_for_highlight("lightGray"), PoLType::kImplicit);
  EXPECT_EQ(pol_type_for_highlight("darkGray"), PoLType::kImplicit);
  EXPECT_FALSE(pol_type_for_highlight("green"));
}

TEST(GoldSet, CountsByType) {
  const GoldSet g({ann("a", 0, "x", PoLType::kImplicit), ann("a", 1, "y", PoLType::kExplicitDirect),
                   ann("b", 0, "z", PoLType::kExplicitIndirect)});
  const std::map<PoLType, std::size_t> expected = {
      {PoLType::kImplicit, 1}, {PoLType::kExplicitDirect, 1}, {PoLType::kExplicitIndirect, 1}};
  EXPECT_EQ(g.counts_by_type(), expected);
  EXPECT_EQ(g.doc_ids(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(g.for_document("a").size(), 2u);
  EXPECT_EQ(GoldSet().counts_by_type().at(PoLType::kImplicit), 0u);
}

TEST(GoldSet, DuplicatesAfterWhitespaceNormalization) {
  EXPECT_THROW(GoldSet({ann("a", 0, "x  y", PoLType::kImplicit), ann("a", 0, " x y ", PoLType::kExplicitDirect)}),
               DuplicateAnnotation);
  EXPECT_EQ(normalize_span("  a \n b\t"), "a b");
}

TEST(GoldJson, RoundTripIsByteStable) {
  ScratchDir dir;
  const auto& g = testing::paper_scale().gold;
  save_gold(g, dir / "g.json");
  const GoldSet loaded = load_gold(dir / "g.json");
  EXPECT_EQ(loaded, g);
  save_gold(loaded, dir / "g2.json");
  EXPECT_EQ(testing::read_file(dir / "g.json"), testing::read_file(dir / "g2.json"));
}

TEST(GoldJson, PublishedAnnotationCounts) {
  const auto counts = testing::paper_scale().human_gold.counts_by_type();
  EXPECT_EQ(testing::paper_scale().human_gold.size(), 682u);
  EXPECT_EQ(counts.at(PoLType::kImplicit), 87u);
  EXPECT_EQ(counts.at(PoLType::kExplicitDirect), 293u);
  EXPECT_EQ(counts.at(PoLType::kExplicitIndirect), 302u);
}

TEST(GoldJson, ImportSaveLoadPreservesTypesAndSpans) {
  ScratchDir dir;
  const GoldSet g(import_docx_highlights(fixture("highlights/three_colours.docx")).annotations);
  save_gold(g, dir / "g.json");
  EXPECT_EQ(load_gold(dir / "g.json"), g);
}

TEST(GoldJson, SchemaErrorsCarryPointers) {
  const json base = json::parse(R"({"version":1,"annotations":[
      {"doc_id":"a","paragraph_index":0,"span_text":"x","pol_type":"Implicit","origin":"Human"},
      {"doc_id":"a","paragraph_index":0,"span_text":"x","pol_type":"Implicit","origin":"Human"}]})");
  try {
    gold_from_json(base);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/annotations/1");
  }
  json bad = base;
  bad["annotations"].erase(1);
  bad["annotations"][0]["pol_type"] = "Yellow";
  try {
    gold_from_json(bad);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/annotations/0/pol_type");
  }
  bad["annotations"][0]["pol_type"] = "Implicit";
  bad["annotations"][0]["span_text"] = "";
  EXPECT_THROW(gold_from_json(bad), SchemaError);
}

TEST(Augment, FootnoteArithmetic) {
  const auto& f = testing::paper_scale();
  const GoldSet before = f.human_gold;
  const GoldSet after = augment_gold(f.human_gold, f.confirmed);
  EXPECT_EQ(f.confirmed.size(), 4u);
  EXPECT_EQ(after.size(), 686u);
  EXPECT_EQ(f.human_gold, before);  // input untouched
  EXPECT_EQ(after.annotations().back().origin, Origin::kToolConfirmed);
  const auto counts = after.counts_by_type();
  EXPECT_EQ(counts.at(PoLType::kImplicit), 91u);
  EXPECT_EQ(counts.at(PoLType::kExplicitDirect), 293u);
  EXPECT_EQ(counts.at(PoLType::kExplicitIndirect), 302u);
}

TEST(Augment, DuplicateAndEmpty) {
  PoLCandidate c;
  c.doc_id = "a";
  c.paragraph_index = 0;
  c.text = "x";
  const GoldSet one = augment_gold(GoldSet(), {c});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.annotations()[0].origin, Origin::kToolConfirmed);
  EXPECT_THROW(augment_gold(one, {c}), DuplicateAnnotation);
}

TEST(Validate, SpansMustBeFindable) {
  const Document d("a", {"il nome costituisce un diritto"});
  EXPECT_TRUE(validate_gold(GoldSet({ann("a", 0, "nome  costituisce", PoLType::kImplicit)}), {d}).empty());
  EXPECT_EQ(validate_gold(GoldSet({ann("a", 0, "assente", PoLType::kImplicit)}), {d}).size(), 1u);
  EXPECT_EQ(validate_gold(GoldSet({ann("a", 5, "nome", PoLType::kImplicit)}), {d}).size(), 1u);
  EXPECT_EQ(validate_gold(GoldSet({ann("b", 0, "nome", PoLType::kImplicit)}), {d}).size(), 1u);
}

}  // namespace
}  // namespace polex
