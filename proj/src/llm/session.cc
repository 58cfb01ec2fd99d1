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


#include <chrono>
#include <ctime>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polex/errors.h"
#include "polex/llm.h"
#include "polex/text.h"

namespace polex::llm {
namespace {

using nlohmann::json;

// Lead-in lines such as "Ecco i paragrafi estratti:" are at most this long.
constexpr std::size_t kMaxPreambleWords = 12;

// Length in bytes of a leading list marker plus its trailing blanks, or 0.
std::size_t list_marker_length(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  std::size_t j = i;
  if (line.compare(j, 3, "•") == 0) {
    j += 3;
  } else if (line.compare(j, 3, "–") == 0) {
    j += 3;
  } else if (j < line.size() && (line[j] == '-' || line[j] == '*')) {
    ++j;
  } else {
    std::size_t digits = 0;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9' && digits < 3) {
      ++j;
      ++digits;
    }
    if (digits == 0 || j >= line.size() || (line[j] != '.' && line[j] != ')')) return 0;
    ++j;
  }
  if (j >= line.size() || (line[j] != ' ' && line[j] != '\t')) return 0;
  while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) ++j;
  return j;
}

bool is_preamble(const std::string& passage) {
  if (passage.empty() || passage.back() != ':') return false;
  std::istringstream words(passage);
  std::size_t n = 0;
  for (std::string w; words >> w;) ++n;
  return n <= kMaxPreambleWords;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json request_json(const LlmRequest& r) {
  json j;
  j["doc_id"] = r.doc_id;
  j["endpoint"] = r.endpoint;
  j["model"] = r.model;
  j["temperature"] = r.temperature ? json(*r.temperature) : json(nullptr);
  j["prompt"] = r.prompt;
  j["document_text"] = r.document_text;
  return j;
}

}  // namespace

LlmSession reset_session(const LlmSession& session) {
  LlmSession fresh = session;
  fresh.queries_sent = 0;
  return fresh;
}

MockTransport::MockTransport(std::map<std::string, std::string> responses_by_doc)
    : responses_(std::move(responses_by_doc)) {}

MockTransport MockTransport::from_directory(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) {
    throw DirectoryNotFound("mock response directory not found: " + directory.string());
  }
  std::map<std::string, std::string> responses;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    responses[entry.path().stem().string()] = body.str();
  }
  return MockTransport(std::move(responses));
}

LlmResponse MockTransport::send(const LlmRequest& request) {
  requests_.push_back(request);
  const auto it = responses_.find(request.doc_id);
  if (it == responses_.end()) throw TransportError("mock has no response for '" + request.doc_id + "'");
  return {it->second, it->second};
}

AuditLog::AuditLog(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::binary | std::ios::app);
  if (!out_) throw IoError("cannot open audit log " + path.string());
}

void AuditLog::record(const LlmRequest& request, const std::optional<LlmResponse>& response,
                      const std::string& error) {
  json j;
  j["timestamp"] = timestamp_utc();
  j["request"] = request_json(request);
  j["response"] = response ? json(response->raw_body.empty() ? response->text : response->raw_body)
                           : json(nullptr);
  if (!error.empty()) j["error"] = error;
  std::lock_guard lock(mu_);
  out_ << j.dump() << '\n';
  out_.flush();
}

std::vector<std::string> split_response(std::string_view response) {
  std::vector<std::string> passages;
  std::string current;
  auto flush = [&] {
    std::string t = text::trim(current);
    current.clear();
    if (!t.empty() && !is_preamble(t)) passages.push_back(std::move(t));
  };

  std::size_t pos = 0;
  while (pos <= response.size()) {
    const std::size_t nl = response.find('\n', pos);
    std::string_view line = response.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::is_blank(line)) {
      flush();
    } else if (const std::size_t m = list_marker_length(line); m > 0) {
      flush();
      current = std::string(line.substr(m));
    } else {
      if (!current.empty()) current += ' ';
      current += text::trim(line);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  return passages;
}

std::vector<PoLCandidate> run_extraction(const Document& document, LlmSession& session,
                                         Transport& transport, const ExtractionOptions& options) {
  if (session.exhausted()) {
    throw BudgetExceeded("session budget of " + std::to_string(session.max_queries_per_session) +
                         " queries used; reset the session");
  }
  LlmRequest request;
  request.doc_id = document.doc_id();
  request.endpoint = session.endpoint;
  request.model = session.model_name;
  request.temperature = session.temperature;
  request.prompt = build_prompt(options.prompt, options.language);
  request.document_text = document.full_text();

  LlmResponse response;
  try {
    response = transport.send(request);
  } catch (const TransportError& e) {
    if (options.audit) options.audit->record(request, std::nullopt, e.what());
    throw;
  }
  ++session.queries_sent;
  if (options.audit) options.audit->record(request, response);

  const auto passages = split_response(response.text);
  if (passages.empty()) throw EmptyResponse("no passages in the response for " + document.doc_id());

  const RuleProfile quotes = RuleProfile::v2_refined();
  std::vector<PoLCandidate> out;
  for (const auto& passage : passages) {
    PoLCandidate c;
    c.doc_id = document.doc_id();
    const auto where = locate_passage(passage, document);
    c.paragraph_index = where && where->score >= options.resolve_threshold
                            ? static_cast<long>(where->paragraph_index)
                            : kUnresolvedParagraph;
    c.text = passage;
    const auto spans = find_quotes(passage, quotes);
    if (!spans.empty()) c.quote = spans.front().text;
    c.trigger = Trigger::kExternal;
    c.citations = find_citations(passage);
    c.source = Source::kLlm;
    c.pol_type = classify_candidate(c);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace polex::llm
