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


// Subcommands of the polex tool. Each returns an exit code: 0 success,
// 1 fatal, 2 partial (some inputs failed).

#ifndef POLEX_TOOLS_CLI_COMMANDS_H_
#define POLEX_TOOLS_CLI_COMMANDS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polex/eval.h"
#include "polex/llm.h"

namespace polex::cli {

enum ExitCode : int { kOk = 0, kFatal = 1, kPartial = 2 };

struct RunConfig {
  std::filesystem::path input_dir;
  std::optional<std::filesystem::path> output_dir;  // default <input_dir>/Principi
  std::string profile = "v2_refined";
  std::optional<std::filesystem::path> profile_file;
  MetricsMode metrics_mode = MetricsMode::kPaper;
  double overlap_threshold = 0.8;
  double hallucination_threshold = 0.6;
  std::set<std::string> report_formats = {"csv", "md", "json"};
  unsigned jobs = 0;  // 0: one per hardware thread

  std::string endpoint;
  std::string model;
  std::optional<double> temperature;
  std::size_t query_budget = llm::kDefaultQueryBudget;
  llm::Language language = llm::Language::kItalian;

  std::filesystem::path resolved_output_dir() const;
  RuleProfile rule_profile() const;
  AlignOptions align_options() const { return {overlap_threshold, hallucination_threshold}; }
  // Throws std::invalid_argument.
  void validate() const;
};

// Reads a JSON config file into `config`; fields present in the file
// replace the current values. Throws SchemaError, FileNotFound.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);
void apply_config_json(RunConfig& config, const nlohmann::json& json);

struct MethodInput {
  std::string name;
  std::filesystem::path candidates;
};

// "NAME=PATH", or a bare PATH named after its stem.
MethodInput parse_method_input(const std::string& spec);

int cmd_extract(const RunConfig& config, const std::optional<std::filesystem::path>& jsonl_out,
                std::ostream& out, std::ostream& err);
int cmd_import_gold(const RunConfig& config, const std::filesystem::path& gold_out,
                    const std::optional<std::string>& annotator, std::ostream& out, std::ostream& err);
int cmd_evaluate(const RunConfig& config, const std::filesystem::path& gold,
                 const std::filesystem::path& candidates, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, const std::filesystem::path& gold,
                const std::vector<MethodInput>& methods, std::ostream& out, std::ostream& err);
// Tracking table per method, metrics in both modes and the comparison.
int cmd_report(const RunConfig& config, const std::filesystem::path& gold,
               const std::vector<MethodInput>& methods, std::ostream& out, std::ostream& err);
int cmd_llm_extract(const RunConfig& config, const std::filesystem::path& jsonl_out,
                    const std::optional<std::filesystem::path>& mock_dir,
                    const std::optional<std::filesystem::path>& audit_log, std::ostream& out,
                    std::ostream& err);

}  // namespace polex::cli

#endif  // POLEX_TOOLS_CLI_COMMANDS_H_
