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
#include <system_error>

#include "polex/errors.h"
#include "polex/parallel.h"
#include "polex/text.h"

namespace polex {
namespace {

PoLCandidate make_candidate(const Document& doc, const Paragraph& p, Trigger trigger,
                            std::string quote) {
  PoLCandidate c;
  c.doc_id = doc.doc_id();
  c.paragraph_index = static_cast<long>(p.index);
  c.text = p.text;
  c.quote = std::move(quote);
  c.trigger = trigger;
  c.citations = find_citations(p.text);
  c.source = Source::kRules;
  c.pol_type = classify_candidate(c);
  return c;
}

// First script: quote or citation anywhere, else keyword.
void extract_disjunctive(const Document& doc, const Paragraph& p, const RuleProfile& profile,
                         std::vector<PoLCandidate>& out) {
  const auto quotes = find_quotes(p.text, profile);
  if (!quotes.empty()) {
    out.push_back(make_candidate(doc, p, Trigger::kQuoteOnly, quotes.front().text));
  } else if (citation_at_end(p.text, profile)) {
    out.push_back(make_candidate(doc, p, Trigger::kCitationAnywhere, {}));
  } else if (!match_keywords(p.text, profile).empty()) {
    out.push_back(make_candidate(doc, p, Trigger::kKeywordOnly, {}));
  }
}

// Second script: (quote and keyword) with the first quote, else a
// citation at the end with an empty quote.
void extract_conjunctive(const Document& doc, const Paragraph& p, const RuleProfile& profile,
                         std::vector<PoLCandidate>& out) {
  const auto quotes = find_quotes(p.text, profile);
  if (!quotes.empty() && !match_keywords(p.text, profile).empty()) {
    if (profile.one_candidate_per_quote) {
      for (const auto& q : quotes) out.push_back(make_candidate(doc, p, Trigger::kQuoteAndKeyword, q.text));
    } else {
      out.push_back(make_candidate(doc, p, Trigger::kQuoteAndKeyword, quotes.front().text));
    }
  } else if (citation_at_end(p.text, profile)) {
    out.push_back(make_candidate(doc, p, Trigger::kCitationAtEnd, {}));
  }
}

}  // namespace

std::string to_string(PoLType type) {
  switch (type) {
    case PoLType::kImplicit: return "Implicit";
    case PoLType::kExplicitDirect: return "ExplicitDirect";
    case PoLType::kExplicitIndirect: return "ExplicitIndirect";
  }
  return "Implicit";
}

std::string to_string(Trigger trigger) {
  switch (trigger) {
    case Trigger::kQuoteAndKeyword: return "QuoteAndKeyword";
    case Trigger::kCitationAtEnd: return "CitationAtEnd";
    case Trigger::kQuoteOnly: return "QuoteOnly";
    case Trigger::kKeywordOnly: return "KeywordOnly";
    case Trigger::kCitationAnywhere: return "CitationAnywhere";
    case Trigger::kExternal: return "External";
  }
  return "External";
}

std::string to_string(Source source) {
  switch (source) {
    case Source::kRules: return "Rules";
    case Source::kLlm: return "LLM";
    case Source::kHuman: return "Human";
  }
  return "Rules";
}

std::optional<PoLType> parse_pol_type(std::string_view name) {
  for (PoLType t : kAllPoLTypes) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<Trigger> parse_trigger(std::string_view name) {
  for (Trigger t : {Trigger::kQuoteAndKeyword, Trigger::kCitationAtEnd, Trigger::kQuoteOnly,
                    Trigger::kKeywordOnly, Trigger::kCitationAnywhere, Trigger::kExternal}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<Source> parse_source(std::string_view name) {
  for (Source s : {Source::kRules, Source::kLlm, Source::kHuman}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

PoLType classify_candidate(const PoLCandidate& candidate) {
  if (candidate.citations.empty()) return PoLType::kImplicit;
  return candidate.quote.empty() ? PoLType::kExplicitIndirect : PoLType::kExplicitDirect;
}

std::vector<PoLCandidate> extract_candidates(const Document& document, const RuleProfile& profile) {
  std::vector<PoLCandidate> out;
  const bool disjunctive = profile.name == ProfileName::kV1Broad;
  for (const Paragraph& p : document.paragraphs()) {
    if (disjunctive) {
      extract_disjunctive(document, p, profile, out);
    } else {
      extract_conjunctive(document, p, profile, out);
    }
  }
  return out;
}

std::vector<std::vector<PoLCandidate>> extract_corpus(const std::vector<Document>& documents,
                                                      const RuleProfile& profile, unsigned jobs) {
  std::vector<std::vector<PoLCandidate>> out(documents.size());
  parallel_for(documents.size(), jobs,
               [&](std::size_t i) { out[i] = extract_candidates(documents[i], profile); });
  return out;
}

std::optional<PassageLocation> locate_passage(std::string_view passage, const Document& document) {
  const auto tokens = text::match_tokens(passage);
  if (tokens.empty()) return std::nullopt;
  std::optional<PassageLocation> best;
  for (const Paragraph& p : document.paragraphs()) {
    const auto para = text::match_tokens(p.text);
    const double score = static_cast<double>(text::lcs_length(tokens, para)) / tokens.size();
    if (!best || score > best->score) best = PassageLocation{p.index, score};
    if (score >= 1.0) break;
  }
  return best;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out;
  out.reserve(value.size() + 2);
  out.push_back('"');
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::filesystem::path emit_csv(const std::vector<PoLCandidate>& candidates,
                               std::string_view input_filename,
                               const std::filesystem::path& output_directory) {
  std::error_code ec;
  std::filesystem::create_directories(output_directory, ec);
  if (ec) throw IoError("cannot create " + output_directory.string() + ": " + ec.message());

  const auto path = output_directory /
                    (std::filesystem::path(std::string(input_filename)).stem().string() + ".csv");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "Paragraph,Quote\n";
  for (const auto& c : candidates) out << csv_field(c.text) << ',' << csv_field(c.quote) << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
  return path;
}

}  // namespace polex
