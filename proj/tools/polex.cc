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


// polex: rule-based and LLM-based extraction of principles of law from
// court judgments, gold import, and evaluation.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.h"
#include "polex/errors.h"

namespace {

using polex::cli::RunConfig;

// Options shared by every subcommand. A flag given on the command line
// overrides the same field from --config.
struct CommonFlags {
  std::string config_path;
  std::string input;
  std::string out;
  std::string profile;
  std::string profile_file;
  std::string mode;
  std::vector<std::string> formats;
  unsigned jobs = 0;
  double overlap = 0.8;
  double hallucination = 0.6;

  CLI::Option* config_opt = nullptr;
  CLI::Option* input_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* profile_opt = nullptr;
  CLI::Option* profile_file_opt = nullptr;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* overlap_opt = nullptr;
  CLI::Option* hallucination_opt = nullptr;

  void attach(CLI::App* sub) {
    config_opt = sub->add_option("--config", config_path, "JSON run configuration");
    input_opt = sub->add_option("--input,-i", input, "Directory of judgments (.docx, .txt)");
    out_opt = sub->add_option("--out,-o", out, "Output directory (default <input>/Principi)");
    profile_opt = sub->add_option("--profile", profile, "Rule profile: v1_broad, v2_refined, extended");
    profile_file_opt = sub->add_option("--profile-file", profile_file, "Rule profile JSON file");
    mode_opt = sub->add_option("--mode", mode, "Metrics mode: paper or standard");
    format_opt = sub->add_option("--format", formats, "Report formats: csv, md, json")->delimiter(',');
    jobs_opt = sub->add_option("--jobs,-j", jobs, "Worker threads (0: all cores, 1: sequential)");
    overlap_opt = sub->add_option("--overlap", overlap, "Match threshold on containment score");
    hallucination_opt = sub->add_option("--hallucination-threshold", hallucination,
                                        "Below this best paragraph containment a false positive is a hallucination");
  }

  RunConfig resolve() const {
    RunConfig c;
    if (config_opt->count()) polex::cli::apply_config_file(c, config_path);
    if (input_opt->count()) c.input_dir = input;
    if (out_opt->count()) c.output_dir = std::filesystem::path(out);
    if (profile_opt->count()) c.profile = profile;
    if (profile_file_opt->count()) c.profile_file = std::filesystem::path(profile_file);
    if (mode_opt->count()) {
      const auto m = polex::parse_metrics_mode(mode);
      if (!m) throw std::invalid_argument("unknown metrics mode '" + mode + "'");
      c.metrics_mode = *m;
    }
    if (format_opt->count()) c.report_formats = {formats.begin(), formats.end()};
    if (jobs_opt->count()) c.jobs = jobs;
    if (overlap_opt->count()) c.overlap_threshold = overlap;
    if (hallucination_opt->count()) c.hallucination_threshold = hallucination;
    if (c.input_dir.empty()) throw std::invalid_argument("--input (or input_dir in --config) is required");
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract principle-of-law passages from court judgments and evaluate extractors."};
  app.require_subcommand(1);

  auto* extract = app.add_subcommand("extract", "Apply a rule profile; one CSV per judgment plus a JSONL dump");
  CommonFlags extract_flags;
  extract_flags.attach(extract);
  std::string extract_jsonl;
  auto* extract_jsonl_opt = extract->add_option("--jsonl", extract_jsonl, "Candidate dump (default <out>/candidates.jsonl)");

  auto* import_gold = app.add_subcommand("import-gold", "Read highlight colours from .docx files into a gold file");
  CommonFlags import_flags;
  import_flags.attach(import_gold);
  std::string gold_out;
  std::string annotator;
  import_gold->add_option("--gold", gold_out, "Gold JSON to write")->required();
  auto* annotator_opt = import_gold->add_option("--annotator", annotator, "Annotator id stored with each annotation");

  auto* evaluate = app.add_subcommand("evaluate", "Align candidates with gold and print confusion counts and metrics");
  CommonFlags evaluate_flags;
  evaluate_flags.attach(evaluate);
  std::string eval_gold;
  std::string eval_candidates;
  evaluate->add_option("--gold", eval_gold, "Gold JSON")->required();
  evaluate->add_option("--candidates", eval_candidates, "Candidate JSONL")->required();

  auto* compare = app.add_subcommand("compare", "Compare two or more extractors against the same gold");
  CommonFlags compare_flags;
  compare_flags.attach(compare);
  std::string compare_gold;
  std::vector<std::string> compare_methods;
  compare->add_option("--gold", compare_gold, "Gold JSON")->required();
  compare->add_option("--candidates", compare_methods, "NAME=PATH of a candidate JSONL (repeatable)")->required();

  auto* report = app.add_subcommand("report", "Tracking tables, metrics in both modes and the comparison tables");
  CommonFlags report_flags;
  report_flags.attach(report);
  std::string report_gold;
  std::vector<std::string> report_methods;
  report->add_option("--gold", report_gold, "Gold JSON")->required();
  report->add_option("--candidates", report_methods, "NAME=PATH of a candidate JSONL (repeatable)")->required();

  auto* llm_extract = app.add_subcommand("llm-extract", "Send each judgment to an LLM and collect passages");
  CommonFlags llm_flags;
  llm_flags.attach(llm_extract);
  std::string llm_jsonl;
  std::string endpoint;
  std::string model;
  double temperature = 0.0;
  std::size_t budget = polex::llm::kDefaultQueryBudget;
  std::string language;
  std::string mock_dir;
  std::string audit;
  llm_extract->add_option("--jsonl", llm_jsonl, "Candidate JSONL to write")->required();
  auto* endpoint_opt = llm_extract->add_option("--endpoint", endpoint, "Chat-completion URL");
  auto* model_opt = llm_extract->add_option("--model", model, "Model name");
  auto* temperature_opt = llm_extract->add_option("--temperature", temperature, "Sampling temperature");
  auto* budget_opt = llm_extract->add_option("--budget", budget, "Queries per session before a reset");
  auto* language_opt = llm_extract->add_option("--language", language, "Prompt language: it or en");
  auto* mock_opt = llm_extract->add_option("--mock-dir", mock_dir, "Offline responses, one <doc_id>.txt per judgment");
  auto* audit_opt = llm_extract->add_option("--audit-log", audit, "Append request/response records (JSONL)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? polex::cli::kOk : polex::cli::kFatal;
  }

  try {
    if (extract->parsed()) {
      std::optional<std::filesystem::path> jsonl;
      if (extract_jsonl_opt->count()) jsonl = extract_jsonl;
      return polex::cli::cmd_extract(extract_flags.resolve(), jsonl, std::cout, std::cerr);
    }
    if (import_gold->parsed()) {
      std::optional<std::string> who;
      if (annotator_opt->count()) who = annotator;
      return polex::cli::cmd_import_gold(import_flags.resolve(), gold_out, who, std::cout, std::cerr);
    }
    if (evaluate->parsed()) {
      return polex::cli::cmd_evaluate(evaluate_flags.resolve(), eval_gold, eval_candidates, std::cout, std::cerr);
    }
    if (compare->parsed() || report->parsed()) {
      const bool is_report = report->parsed();
      std::vector<polex::cli::MethodInput> methods;
      for (const auto& spec : is_report ? report_methods : compare_methods) {
        methods.push_back(polex::cli::parse_method_input(spec));
      }
      const RunConfig config = (is_report ? report_flags : compare_flags).resolve();
      return is_report ? polex::cli::cmd_report(config, report_gold, methods, std::cout, std::cerr)
                       : polex::cli::cmd_compare(config, compare_gold, methods, std::cout, std::cerr);
    }
    if (llm_extract->parsed()) {
      RunConfig config = llm_flags.resolve();
      if (endpoint_opt->count()) config.endpoint = endpoint;
      if (model_opt->count()) config.model = model;
      if (temperature_opt->count()) config.temperature = temperature;
      if (budget_opt->count()) config.query_budget = budget;
      if (language_opt->count()) {
        const auto lang = polex::llm::parse_language(language);
        if (!lang) throw std::invalid_argument("unknown language '" + language + "'");
        config.language = *lang;
      }
      std::optional<std::filesystem::path> mock;
      if (mock_opt->count()) mock = mock_dir;
      std::optional<std::filesystem::path> audit_path;
      if (audit_opt->count()) audit_path = audit;
      return polex::cli::cmd_llm_extract(config, llm_jsonl, mock, audit_path, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return polex::cli::kFatal;
  }
  return polex::cli::kFatal;
}
