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

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "polex/corpus.h"
#include "polex/errors.h"
#include "polex/extractor.h"
#include "polex/goldstore.h"

namespace polex::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

CorpusLoad load_inputs(const RunConfig& config, std::ostream& err) {
  CorpusLoad load = load_corpus(config.input_dir, config.jobs);
  for (const auto& w : load.warnings) err << "warning: " << w.path.string() << ": " << w.message << '\n';
  return load;
}

std::map<std::string, int> page_map(const std::vector<Document>& documents) {
  std::map<std::string, int> pages;
  for (const auto& d : documents) {
    if (d.page_count()) pages[d.doc_id()] = *d.page_count();
  }
  return pages;
}

bool wants(const RunConfig& config, const std::string& format) { return config.report_formats.count(format) > 0; }

json metrics_pair_json(const ConfusionCounts& counts) {
  return {{"PaperMode", metrics_to_json(metrics(counts, MetricsMode::kPaper))},
          {"StandardMode", metrics_to_json(metrics(counts, MetricsMode::kStandard))}};
}

void print_metrics(std::ostream& out, const ConfusionCounts& counts, MetricsMode first) {
  out << "tp=" << counts.tp << " fp=" << counts.fp << " fn=" << counts.fn << '\n';
  const MetricsMode second = first == MetricsMode::kPaper ? MetricsMode::kStandard : MetricsMode::kPaper;
  for (MetricsMode mode : {first, second}) {
    const MetricsReport r = metrics(counts, mode);
    out << to_string(mode) << ": precision " << r.precision_ratio().rounded(3) << " recall "
        << r.recall_ratio().rounded(3) << " accuracy " << r.accuracy_ratio().rounded(3) << " f1 "
        << r.f1_ratio().rounded(3) << '\n';
  }
}

struct MethodRun {
  std::string name;
  std::vector<AlignmentResult> alignments;
  ConfusionCounts counts;
};

MethodRun run_method(const RunConfig& config, const MethodInput& input, const GoldSet& gold,
                     const std::vector<Document>& documents) {
  MethodRun run;
  run.name = input.name;
  run.alignments = align_corpus(read_jsonl(input.candidates), gold, documents, config.align_options(), config.jobs);
  for (const auto& a : run.alignments) run.counts += confusion(a);
  return run;
}

std::string safe_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "method" : out;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const SchemaError& e) {
    err << "error: schema: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kFatal;
}

}  // namespace

fs::path RunConfig::resolved_output_dir() const {
  return output_dir ? *output_dir : input_dir / std::string(kDefaultOutputDirectory);
}

RuleProfile RunConfig::rule_profile() const {
  if (profile_file) return load_profile(*profile_file);
  return RuleProfile::named(profile);
}

void RunConfig::validate() const {
  if (!(overlap_threshold > 0.0 && overlap_threshold <= 1.0)) {
    throw std::invalid_argument("--overlap must be in (0, 1]");
  }
  if (!(hallucination_threshold > 0.0 && hallucination_threshold <= 1.0)) {
    throw std::invalid_argument("--hallucination-threshold must be in (0, 1]");
  }
  if (!profile_file && !parse_profile_name(profile)) throw std::invalid_argument("unknown profile '" + profile + "'");
  for (const auto& f : report_formats) {
    if (f != "csv" && f != "md" && f != "json") throw std::invalid_argument("unknown report format '" + f + "'");
  }
  if (query_budget == 0) throw std::invalid_argument("query budget must be positive");
}

void apply_config_json(RunConfig& c, const json& j) {
  if (!j.is_object()) throw SchemaError("", "config must be a JSON object");
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_string()) throw SchemaError(std::string("/") + key, "expected string");
    return j.at(key).get<std::string>();
  };
  auto num = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number()) throw SchemaError(std::string("/") + key, "expected number");
    return j.at(key).get<double>();
  };
  auto count = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number_unsigned()) throw SchemaError(std::string("/") + key, "expected non-negative integer");
    return j.at(key).get<std::size_t>();
  };

  if (auto v = str("input_dir")) c.input_dir = *v;
  if (auto v = str("output_dir")) c.output_dir = fs::path(*v);
  if (auto v = str("profile")) c.profile = *v;
  if (auto v = str("profile_file")) c.profile_file = fs::path(*v);
  if (auto v = str("metrics_mode")) {
    const auto mode = parse_metrics_mode(*v);
    if (!mode) throw SchemaError("/metrics_mode", "expected PaperMode or StandardMode");
    c.metrics_mode = *mode;
  }
  if (j.contains("thresholds")) {
    const json& t = j.at("thresholds");
    if (!t.is_object()) throw SchemaError("/thresholds", "expected object");
    for (const char* key : {"overlap", "hallucination"}) {
      if (!t.contains(key)) continue;
      if (!t.at(key).is_number()) throw SchemaError(std::string("/thresholds/") + key, "expected number");
      (std::string(key) == "overlap" ? c.overlap_threshold : c.hallucination_threshold) = t.at(key).get<double>();
    }
  }
  if (j.contains("report_formats")) {
    const json& f = j.at("report_formats");
    if (!f.is_array()) throw SchemaError("/report_formats", "expected array");
    c.report_formats.clear();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f[i].is_string()) throw SchemaError("/report_formats/" + std::to_string(i), "expected string");
      c.report_formats.insert(f[i].get<std::string>());
    }
  }
  if (auto v = count("jobs")) c.jobs = static_cast<unsigned>(*v);
  if (auto v = str("endpoint")) c.endpoint = *v;
  if (auto v = str("model")) c.model = *v;
  if (auto v = num("temperature")) c.temperature = *v;
  if (auto v = count("query_budget")) c.query_budget = *v;
  if (auto v = str("language")) {
    const auto lang = llm::parse_language(*v);
    if (!lang) throw SchemaError("/language", "expected \"it\" or \"en\"");
    c.language = *lang;
  }
}

void apply_config_file(RunConfig& config, const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  apply_config_json(config, j);
}

MethodInput parse_method_input(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq != std::string::npos && eq > 0) return {spec.substr(0, eq), spec.substr(eq + 1)};
  return {fs::path(spec).stem().string(), spec};
}

int cmd_extract(const RunConfig& config, const std::optional<fs::path>& jsonl_out, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const RuleProfile profile = config.rule_profile();
    const CorpusLoad load = load_inputs(config, err);
    const auto per_doc = extract_corpus(load.documents, profile, config.jobs);

    const fs::path out_dir = config.resolved_output_dir();
    std::vector<PoLCandidate> all;
    std::size_t failed = load.failed;
    std::size_t ok = 0;
    for (std::size_t i = 0; i < load.documents.size(); ++i) {
      const Document& doc = load.documents[i];
      try {
        emit_csv(per_doc[i], fs::path(doc.source_path()).filename().string(), out_dir);
        ++ok;
      } catch (const IoError& e) {
        err << "error: " << doc.doc_id() << ": " << e.what() << '\n';
        ++failed;
      }
      all.insert(all.end(), per_doc[i].begin(), per_doc[i].end());
    }
    write_jsonl(all, jsonl_out ? *jsonl_out : out_dir / "candidates.jsonl");
    out << "profile " << to_string(profile.name) << ": " << all.size() << " candidates\n";
    err << ok << " ok, " << failed << " failed\n";
    return failed > 0 ? kPartial : kOk;
  });
}

int cmd_import_gold(const RunConfig& config, const fs::path& gold_out, const std::optional<std::string>& annotator,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!fs::is_directory(config.input_dir)) {
      throw DirectoryNotFound("input directory not found: " + config.input_dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(config.input_dir)) {
      if (entry.is_regular_file() && format_for_path(entry.path()) == DocumentFormat::kDocx) {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());

    std::vector<GoldAnnotation> annotations;
    std::size_t failed = 0;
    for (const auto& f : files) {
      try {
        HighlightImport imported = import_docx_highlights(f, annotator);
        for (const auto& w : imported.warnings) err << "warning: " << w << '\n';
        annotations.insert(annotations.end(), imported.annotations.begin(), imported.annotations.end());
      } catch (const Error& e) {
        err << "error: " << f.filename().string() << ": " << e.what() << '\n';
        ++failed;
      }
    }
    const GoldSet gold(std::move(annotations));
    save_gold(gold, gold_out);
    const auto counts = gold.counts_by_type();
    out << gold.size() << " annotations (Implicit " << counts.at(PoLType::kImplicit) << ", ExplicitDirect "
        << counts.at(PoLType::kExplicitDirect) << ", ExplicitIndirect " << counts.at(PoLType::kExplicitIndirect)
        << ") -> " << gold_out.string() << '\n';
    err << files.size() - failed << " ok, " << failed << " failed\n";
    return failed > 0 ? kPartial : kOk;
  });
}

int cmd_evaluate(const RunConfig& config, const fs::path& gold_path, const fs::path& candidates, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const GoldSet gold = load_gold(gold_path);
    const CorpusLoad load = load_inputs(config, err);
    for (const auto& problem : validate_gold(gold, load.documents)) err << "warning: gold " << problem << '\n';
    const MethodRun run = run_method(config, {"candidates", candidates}, gold, load.documents);
    const TrackingTable tracking = tracking_table(run.alignments, page_map(load.documents));

    print_metrics(out, run.counts, config.metrics_mode);

    const fs::path dir = config.resolved_output_dir();
    if (wants(config, "csv")) write_text(dir / "tracking.csv", tracking_csv(tracking));
    if (wants(config, "md")) {
      write_text(dir / "tracking.md", tracking_markdown(tracking));
      write_text(dir / "metrics.md", metrics_markdown({{"candidates", run.counts}}, config.metrics_mode));
    }
    if (wants(config, "json")) {
      json report;
      report["counts"] = {{"tp", run.counts.tp}, {"fp", run.counts.fp}, {"fn", run.counts.fn}};
      report["metrics"] = metrics_pair_json(run.counts);
      report["tracking"] = tracking_to_json(tracking);
      report["alignments"] = json::array();
      for (const auto& a : run.alignments) report["alignments"].push_back(alignment_to_json(a));
      write_text(dir / "report.json", report.dump(2) + "\n");
    }
    return load.failed > 0 ? kPartial : kOk;
  });
}

namespace {

int compare_or_report(const RunConfig& config, const fs::path& gold_path, const std::vector<MethodInput>& methods,
                      bool full_report, std::ostream& out, std::ostream& err) {
  config.validate();
  const GoldSet gold = load_gold(gold_path);
  const CorpusLoad load = load_inputs(config, err);
  for (const auto& problem : validate_gold(gold, load.documents)) err << "warning: gold " << problem << '\n';

  std::vector<MethodRun> runs;
  for (const auto& m : methods) runs.push_back(run_method(config, m, gold, load.documents));

  const fs::path dir = config.resolved_output_dir();
  json report;
  std::vector<std::pair<std::string, ConfusionCounts>> counts;
  for (const auto& r : runs) counts.emplace_back(r.name, r.counts);

  if (full_report) {
    const auto pages = page_map(load.documents);
    for (const auto& r : runs) {
      const TrackingTable tracking = tracking_table(r.alignments, pages);
      const std::string stem = "tracking_" + safe_name(r.name);
      if (wants(config, "csv")) write_text(dir / (stem + ".csv"), tracking_csv(tracking));
      if (wants(config, "md")) write_text(dir / (stem + ".md"), tracking_markdown(tracking));
      report["methods"][r.name]["tracking"] = tracking_to_json(tracking);
      report["methods"][r.name]["metrics"] = metrics_pair_json(r.counts);
    }
    const MetricsMode other =
        config.metrics_mode == MetricsMode::kPaper ? MetricsMode::kStandard : MetricsMode::kPaper;
    const std::string metrics_md =
        metrics_markdown(counts, config.metrics_mode) + "\n" + metrics_markdown(counts, other);
    out << metrics_md << '\n';
    if (wants(config, "md")) write_text(dir / "metrics.md", metrics_md);
  }

  if (runs.size() >= 2) {
    std::vector<NamedAlignments> named;
    for (const auto& r : runs) named.push_back({r.name, r.alignments});
    const ComparisonTable table = comparison_table(gold, named);
    out << comparison_markdown(table);
    if (wants(config, "csv")) write_text(dir / "comparison.csv", comparison_csv(table));
    if (wants(config, "md")) write_text(dir / "comparison.md", comparison_markdown(table));
    report["comparison"] = comparison_to_json(table);
  }
  if (wants(config, "json")) write_text(dir / (full_report ? "report.json" : "comparison.json"), report.dump(2) + "\n");
  return load.failed > 0 ? kPartial : kOk;
}

}  // namespace

int cmd_compare(const RunConfig& config, const fs::path& gold, const std::vector<MethodInput>& methods,
                std::ostream& out, std::ostream& err) {
  if (methods.size() < 2) {
    err << "usage: compare needs at least two candidate files\n";
    return kFatal;
  }
  return guarded(err, [&] { return compare_or_report(config, gold, methods, false, out, err); });
}

int cmd_report(const RunConfig& config, const fs::path& gold, const std::vector<MethodInput>& methods,
               std::ostream& out, std::ostream& err) {
  if (methods.empty()) {
    err << "usage: report needs at least one candidate file\n";
    return kFatal;
  }
  return guarded(err, [&] { return compare_or_report(config, gold, methods, true, out, err); });
}

int cmd_llm_extract(const RunConfig& config, const fs::path& jsonl_out, const std::optional<fs::path>& mock_dir,
                    const std::optional<fs::path>& audit_log, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    std::unique_ptr<llm::Transport> transport;
    if (mock_dir) {
      transport = std::make_unique<llm::MockTransport>(llm::MockTransport::from_directory(*mock_dir));
    } else {
      if (config.endpoint.empty() || config.model.empty()) {
        throw std::invalid_argument("llm-extract needs --endpoint and --model (or --mock-dir)");
      }
      transport = std::make_unique<llm::HttpTransport>();
    }
    std::optional<llm::AuditLog> audit;
    if (audit_log) audit.emplace(*audit_log);

    llm::ExtractionOptions options;
    options.language = config.language;
    options.resolve_threshold = config.hallucination_threshold;
    options.audit = audit ? &*audit : nullptr;

    llm::LlmSession session{config.endpoint, config.model, config.temperature, config.query_budget, 0};
    const CorpusLoad load = load_inputs(config, err);
    std::size_t failed = load.failed;
    std::vector<PoLCandidate> all;
    for (const auto& doc : load.documents) {
      if (session.exhausted()) {
        err << "note: session budget of " << session.max_queries_per_session << " reached, starting a new session\n";
        session = llm::reset_session(session);
      }
      try {
        const auto found = llm::run_extraction(doc, session, *transport, options);
        all.insert(all.end(), found.begin(), found.end());
      } catch (const TransportError& e) {
        err << "error: " << doc.doc_id() << ": " << e.what() << '\n';
        ++failed;
      } catch (const EmptyResponse& e) {
        err << "warning: " << doc.doc_id() << ": " << e.what() << '\n';
        ++failed;
      }
    }
    write_jsonl(all, jsonl_out);
    out << all.size() << " passages from " << load.documents.size() << " documents -> " << jsonl_out.string() << '\n';
    err << load.documents.size() + load.failed - failed << " ok, " << failed << " failed\n";
    return failed > 0 ? kPartial : kOk;
  });
}

}  // namespace polex::cli
