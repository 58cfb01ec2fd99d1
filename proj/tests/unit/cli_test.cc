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


#include "cli/commands.h"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "paper_scale.h"
#include "polex/errors.h"
#include "polex/goldstore.h"
#include "test_util.h"

namespace polex::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::fixture;
using testing::read_file;
using testing::ScratchDir;

RunConfig config_for(const fs::path& input, const fs::path& output) {
  RunConfig c;
  c.input_dir = input;
  c.output_dir = output;
  c.jobs = 2;
  return c;
}

// Materialising the synthetic corpus is slow enough to share.
const fs::path& paper_dir() {
  static ScratchDir dir;
  static const bool written = (testing::write_paper_scale(dir.path()), true);
  (void)written;
  return dir.path();
}

TEST(Extract, MatchesGoldenCsvs) {
  ScratchDir dir;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_extract(config_for(fixture("corpus"), dir / "Principi"), dir / "c.jsonl", out, err), kOk) << err.str();
  for (const char* doc : {"s01", "s02", "s03"}) {
    EXPECT_EQ(read_file(dir / "Principi" / (std::string(doc) + ".csv")),
              read_file(fixture("golden/" + std::string(doc) + ".csv")))
        << doc;
  }
  EXPECT_NE(err.str().find("3 ok, 0 failed"), std::string::npos);
}

TEST(Extract, DefaultOutputIsPrincipiUnderInput) {
  RunConfig c;
  c.input_dir = "/data/sentenze";
  EXPECT_EQ(c.resolved_output_dir(), fs::path("/data/sentenze/Principi"));
}

TEST(Extract, CorruptFileIsPartial) {
  ScratchDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_extract(config_for(fixture("corrupt"), dir / "o"), std::nullopt, out, err), kPartial);
  EXPECT_NE(err.str().find("2 ok, 1 failed"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "o" / "a.csv"));
  EXPECT_TRUE(fs::exists(dir / "o" / "c.csv"));
  EXPECT_FALSE(fs::exists(dir / "o" / "b.csv"));
}

TEST(Extract, MissingInputIsFatal) {
  ScratchDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_extract(config_for(dir / "absent", dir / "o"), std::nullopt, out, err), kFatal);
}

TEST(Extract, RerunIsByteIdentical) {
  ScratchDir a, b;
  std::ostringstream out, err;
  RunConfig ca = config_for(fixture("corpus"), a / "o");
  RunConfig cb = config_for(fixture("corpus"), b / "o");
  cb.jobs = 1;
  ASSERT_EQ(cmd_extract(ca, a / "c.jsonl", out, err), kOk);
  ASSERT_EQ(cmd_extract(cb, b / "c.jsonl", out, err), kOk);
  EXPECT_EQ(read_file(a / "c.jsonl"), read_file(b / "c.jsonl"));
}

TEST(Config, FileValuesThenOverrides) {
  RunConfig c;
  apply_config_json(c, json::parse(R"({"input_dir": "in", "profile": "v1_broad", "metrics_mode": "StandardMode",
      "thresholds": {"overlap": 0.9}, "report_formats": ["csv"], "jobs": 3, "language": "en"})"));
  EXPECT_EQ(c.input_dir, fs::path("in"));
  EXPECT_EQ(c.profile, "v1_broad");
  EXPECT_EQ(c.metrics_mode, MetricsMode::kStandard);
  EXPECT_DOUBLE_EQ(c.overlap_threshold, 0.9);
  EXPECT_DOUBLE_EQ(c.hallucination_threshold, 0.6);
  EXPECT_EQ(c.report_formats, (std::set<std::string>{"csv"}));
  EXPECT_EQ(c.jobs, 3u);
  EXPECT_EQ(c.language, llm::Language::kEnglish);
  EXPECT_NO_THROW(c.validate());

  EXPECT_THROW(apply_config_json(c, json::parse(R"({"jobs": -1})")), SchemaError);
  EXPECT_THROW(apply_config_json(c, json::parse(R"({"metrics_mode": "Other"})")), SchemaError);
  EXPECT_THROW(apply_config_json(c, json::array()), SchemaError);
  EXPECT_THROW(apply_config_file(c, "/nonexistent/config.json"), FileNotFound);
}

TEST(Config, ValidateRejectsBadValues) {
  RunConfig c;
  c.overlap_threshold = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.overlap_threshold = 0.8;
  c.hallucination_threshold = 1.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.hallucination_threshold = 0.6;
  c.profile = "v3";
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.profile = "extended";
  c.report_formats = {"pdf"};
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(MethodInput, NamedAndBare) {
  const MethodInput a = parse_method_input("Regex=/tmp/rules.jsonl");
  EXPECT_EQ(a.name, "Regex");
  EXPECT_EQ(a.candidates, fs::path("/tmp/rules.jsonl"));
  const MethodInput b = parse_method_input("/tmp/llm.jsonl");
  EXPECT_EQ(b.name, "llm");
}

TEST(Evaluate, PaperScaleLlm) {
  ScratchDir dir;
  std::ostringstream out, err;
  const fs::path& p = paper_dir();
  ASSERT_EQ(cmd_evaluate(config_for(p / "corpus", dir / "r"), p / "gold.json", p / "llm.jsonl", out, err), kOk)
      << err.str();
  EXPECT_NE(out.str().find("tp=161 fp=45 fn=525"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("PaperMode: precision 0.235 recall 0.782 accuracy 0.220 f1 0.361"), std::string::npos)
      << out.str();
  EXPECT_TRUE(fs::exists(dir / "r" / "tracking.csv"));
  const json report = json::parse(read_file(dir / "r" / "report.json"));
  EXPECT_EQ(report["counts"]["tp"], 161);
  EXPECT_EQ(report["alignments"].size(), 60u);
}

TEST(Evaluate, PaperScaleRulesStandardMode) {
  ScratchDir dir;
  std::ostringstream out, err;
  const fs::path& p = paper_dir();
  RunConfig c = config_for(p / "corpus", dir / "r");
  c.metrics_mode = MetricsMode::kStandard;
  c.report_formats = {"md"};
  ASSERT_EQ(cmd_evaluate(c, p / "gold.json", p / "rules.jsonl", out, err), kOk) << err.str();
  const std::string s = out.str();
  EXPECT_NE(s.find("StandardMode: precision 0.808 recall 0.532"), std::string::npos) << s;
  EXPECT_LT(s.find("StandardMode"), s.find("PaperMode"));
  EXPECT_TRUE(fs::exists(dir / "r" / "tracking.md"));
  EXPECT_FALSE(fs::exists(dir / "r" / "tracking.csv"));
}

TEST(Evaluate, EmptyCandidatesGiveZeroTp) {
  ScratchDir dir;
  testing::write_file(dir / "none.jsonl", "");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_evaluate(config_for(fixture("corpus"), dir / "r"), fixture("gold/corpus_gold.json"),
                         dir / "none.jsonl", out, err),
            kOk)
      << err.str();
  EXPECT_NE(out.str().find("tp=0 fp=0 fn=4"), std::string::npos) << out.str();
}

TEST(Compare, NeedsTwoMethods) {
  ScratchDir dir;
  std::ostringstream out, err;
  const fs::path& p = paper_dir();
  EXPECT_EQ(cmd_compare(config_for(p / "corpus", dir / "r"), p / "gold.json", {{"LLM", p / "llm.jsonl"}}, out, err),
            kFatal);
}

TEST(Compare, ThreeMethodsThreeRows) {
  ScratchDir dir;
  std::ostringstream out, err;
  const fs::path& p = paper_dir();
  const std::vector<MethodInput> methods = {
      {"LLM", p / "llm.jsonl"}, {"Regex", p / "rules.jsonl"}, {"Annotators", p / "annotators.jsonl"}};
  ASSERT_EQ(cmd_compare(config_for(p / "corpus", dir / "r"), p / "gold.json", methods, out, err), kOk) << err.str();
  const json j = json::parse(read_file(dir / "r" / "comparison.json"));
  ASSERT_EQ(j["comparison"]["rows"].size(), 3u) << j.dump(1);
  const auto csv = testing::parse_csv(read_file(dir / "r" / "comparison.csv"));
  for (const char* name : {"LLM", "Regex", "Annotators"}) {
    bool seen = false;
    for (const auto& row : csv) seen = seen || (!row.empty() && row[0] == name);
    EXPECT_TRUE(seen) << name;
  }
}

TEST(Report, WritesPerMethodTracking) {
  ScratchDir dir;
  std::ostringstream out, err;
  const fs::path& p = paper_dir();
  const std::vector<MethodInput> methods = {{"LLM", p / "llm.jsonl"}, {"Regex", p / "rules.jsonl"}};
  ASSERT_EQ(cmd_report(config_for(p / "corpus", dir / "r"), p / "gold.json", methods, out, err), kOk) << err.str();
  EXPECT_TRUE(fs::exists(dir / "r" / "tracking_LLM.csv"));
  EXPECT_TRUE(fs::exists(dir / "r" / "tracking_Regex.md"));
  EXPECT_TRUE(fs::exists(dir / "r" / "comparison.csv"));
  const json j = json::parse(read_file(dir / "r" / "report.json"));
  EXPECT_EQ(j["methods"]["Regex"]["metrics"]["PaperMode"]["tp"], 365);
  EXPECT_EQ(cmd_report(config_for(p / "corpus", dir / "r"), p / "gold.json", {}, out, err), kFatal);
}

TEST(ImportGold, HighlightsBecomeAnnotations) {
  ScratchDir dir;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_import_gold(config_for(fixture("highlights"), dir / "o"), dir / "gold.json", "A1", out, err), kOk)
      << err.str();
  const GoldSet gold = load_gold(dir / "gold.json");
  EXPECT_EQ(gold.for_document("three_colours").size(), 3u);
  EXPECT_TRUE(gold.for_document("none").empty());
  for (const auto& a : gold.annotations()) EXPECT_EQ(a.annotator_id, std::optional<std::string>("A1"));
}

TEST(LlmExtract, MockDirAndAudit) {
  ScratchDir dir;
  std::ostringstream out, err;
  RunConfig c = config_for(fixture("llm/corpus"), dir / "o");
  c.model = "mock-model";
  ASSERT_EQ(cmd_llm_extract(c, dir / "llm.jsonl", fixture("llm/echo"), dir / "audit.jsonl", out, err), kOk)
      << err.str();
  const auto candidates = read_jsonl(dir / "llm.jsonl");
  ASSERT_EQ(candidates.size(), 2u);
  EXPECT_EQ(candidates[0].source, Source::kLlm);
  const json audit = json::parse(read_file(dir / "audit.jsonl"));
  EXPECT_EQ(audit["request"]["model"], "mock-model");
  EXPECT_EQ(audit["request"]["doc_id"], "sentenza_a");

  std::ostringstream out2, err2;
  ASSERT_EQ(cmd_evaluate(config_for(fixture("llm/corpus"), dir / "e"), fixture("llm/gold.json"), dir / "llm.jsonl",
                         out2, err2),
            kOk);
  EXPECT_NE(out2.str().find("tp=2 fp=0 fn=0"), std::string::npos) << out2.str();
}

TEST(LlmExtract, NeedsEndpointWithoutMock) {
  ScratchDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_llm_extract(config_for(fixture("llm/corpus"), dir / "o"), dir / "x.jsonl", std::nullopt,
                            std::nullopt, out, err),
            kFatal);
}

}  // namespace
}  // namespace polex::cli
