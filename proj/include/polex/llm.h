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


// LLM-based extraction: prompt construction, query-budgeted sessions, a
// transport abstraction (HTTP chat-completion client or offline mock) and
// parsing of free-text responses into PoL candidates.

#ifndef POLEX_LLM_H_
#define POLEX_LLM_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polex/corpus.h"
#include "polex/extractor.h"

namespace polex::llm {

enum class Language { kItalian, kEnglish };

std::string to_string(Language language);
// Accepts "it" and "en".
std::optional<Language> parse_language(std::string_view code);

struct PromptText {
  std::string body;
  std::string examples_heading;  // e.g. "Esempi:"
  std::vector<std::string> few_shot_examples;
  std::string directives;        // fixed trailing block

  bool operator==(const PromptText&) const = default;
};

struct PromptTemplate {
  std::map<Language, PromptText> texts;

  // The final four-part extraction prompt in Italian and English.
  static PromptTemplate standard();

  bool operator==(const PromptTemplate&) const = default;
};

// body, then the example block (omitted when there are no examples), then
// the directives, separated by blank lines. Italian is the default.
// Throws std::invalid_argument when the template lacks the language.
std::string build_prompt(const PromptTemplate& prompt, Language language = Language::kItalian);

inline constexpr std::size_t kDefaultQueryBudget = 5;
inline constexpr std::string_view kApiKeyEnv = "POLEX_LLM_API_KEY";

struct LlmSession {
  std::string endpoint;
  std::string model_name;
  std::optional<double> temperature;
  std::size_t max_queries_per_session = kDefaultQueryBudget;
  std::size_t queries_sent = 0;

  bool exhausted() const { return queries_sent >= max_queries_per_session; }
  bool operator==(const LlmSession&) const = default;
};

// Same endpoint, model and budget with the counter back at zero.
LlmSession reset_session(const LlmSession& session);

struct LlmRequest {
  std::string doc_id;
  std::string endpoint;
  std::string model;
  std::optional<double> temperature;
  std::string prompt;
  std::string document_text;

  bool operator==(const LlmRequest&) const = default;
};

struct LlmResponse {
  std::string text;      // assistant message content
  std::string raw_body;  // full response body when available
};

class Transport {
 public:
  virtual ~Transport() = default;
  // Throws TransportError.
  virtual LlmResponse send(const LlmRequest& request) = 0;
};

// OpenAI-compatible chat-completion endpoint, e.g.
// https://api.example.com/v1/chat/completions. The bearer token is read
// from kApiKeyEnv when the request is sent.
class HttpTransport : public Transport {
 public:
  explicit HttpTransport(std::chrono::seconds timeout = std::chrono::seconds(120));
  LlmResponse send(const LlmRequest& request) override;

 private:
  std::chrono::seconds timeout_;
};

// Offline transport. Responses are keyed by doc_id; every request is kept.
class MockTransport : public Transport {
 public:
  explicit MockTransport(std::map<std::string, std::string> responses_by_doc);
  // Reads <doc_id>.txt files from a directory.
  static MockTransport from_directory(const std::filesystem::path& directory);

  LlmResponse send(const LlmRequest& request) override;
  const std::vector<LlmRequest>& requests() const { return requests_; }

 private:
  std::map<std::string, std::string> responses_;
  std::vector<LlmRequest> requests_;
};

// Appends one JSON object per exchange: request, response, model,
// temperature and a timestamp. Thread-safe.
class AuditLog {
 public:
  explicit AuditLog(const std::filesystem::path& path);
  void record(const LlmRequest& request, const std::optional<LlmResponse>& response,
              const std::string& error = {});

 private:
  std::mutex mu_;
  std::ofstream out_;
};

// Splits a response into passages: blank lines and list markers ("- ",
// "* ", "• ", "1. ", "1) ") delimit passages; a short lead-in line ending
// in ':' is dropped.
std::vector<std::string> split_response(std::string_view response);

struct ExtractionOptions {
  Language language = Language::kItalian;
  PromptTemplate prompt = PromptTemplate::standard();
  // Passages whose best paragraph containment is below this keep
  // kUnresolvedParagraph.
  double resolve_threshold = 0.6;
  AuditLog* audit = nullptr;
};

// One request per document. Throws BudgetExceeded before sending when the
// session is exhausted, TransportError, and EmptyResponse when no passage
// can be read from the answer.
std::vector<PoLCandidate> run_extraction(const Document& document, LlmSession& session,
                                         Transport& transport, const ExtractionOptions& options = {});

}  // namespace polex::llm

#endif  // POLEX_LLM_H_
