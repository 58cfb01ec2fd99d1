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


#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "polex/errors.h"
#include "polex/extractor.h"

namespace polex {
namespace {

using nlohmann::json;

std::string format_date(const std::chrono::year_month_day& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

std::chrono::year_month_day parse_date(const std::string& s, const std::string& pointer) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    throw SchemaError(pointer, "expected YYYY-MM-DD");
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                        std::chrono::day{d}};
  if (!ymd.ok()) throw SchemaError(pointer, "invalid calendar date");
  return ymd;
}

const json& field(const json& j, const std::string& key, const std::string& prefix) {
  if (!j.contains(key)) throw SchemaError(prefix + "/" + key, "missing field");
  return j.at(key);
}

std::string string_field(const json& j, const std::string& key, const std::string& prefix) {
  const json& v = field(j, key, prefix);
  if (!v.is_string()) throw SchemaError(prefix + "/" + key, "expected string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& j, const std::string& key,
                                           const std::string& prefix) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return string_field(j, key, prefix);
}

CitationRef citation_from_json_at(const json& j, const std::string& prefix) {
  if (!j.is_object()) throw SchemaError(prefix, "expected object");
  CitationRef c;
  c.raw = string_field(j, "raw", prefix);
  const auto court = parse_court(string_field(j, "court", prefix));
  if (!court) throw SchemaError(prefix + "/court", "unknown court");
  c.court = *court;
  c.other_court = optional_string(j, "other_court", prefix).value_or("");
  c.section = optional_string(j, "section", prefix);
  c.division = optional_string(j, "division", prefix);
  c.place = optional_string(j, "place", prefix);
  c.marker = optional_string(j, "marker", prefix);
  if (j.contains("number") && !j.at("number").is_null()) {
    if (!j.at("number").is_number_integer() || j.at("number").get<long>() <= 0) {
      throw SchemaError(prefix + "/number", "expected positive integer");
    }
    c.number = j.at("number").get<long>();
  }
  if (j.contains("year") && !j.at("year").is_null()) {
    if (!j.at("year").is_number_integer()) throw SchemaError(prefix + "/year", "expected integer");
    c.year = j.at("year").get<int>();
    if (*c.year < 1900 || *c.year > 2099) throw SchemaError(prefix + "/year", "out of range");
  }
  if (const auto date = optional_string(j, "date", prefix)) c.date = parse_date(*date, prefix + "/date");
  return c;
}

PoLCandidate candidate_from_json_at(const json& j, const std::string& prefix) {
  if (!j.is_object()) throw SchemaError(prefix, "expected object");
  PoLCandidate c;
  c.doc_id = string_field(j, "doc_id", prefix);
  const json& index = field(j, "paragraph_index", prefix);
  if (!index.is_number_integer() || index.get<long>() < kUnresolvedParagraph) {
    throw SchemaError(prefix + "/paragraph_index", "expected integer >= -1");
  }
  c.paragraph_index = index.get<long>();
  c.text = string_field(j, "text", prefix);
  c.quote = optional_string(j, "quote", prefix).value_or("");

  const auto trigger = parse_trigger(string_field(j, "trigger", prefix));
  if (!trigger) throw SchemaError(prefix + "/trigger", "unknown trigger");
  c.trigger = *trigger;
  const auto type = parse_pol_type(string_field(j, "pol_type", prefix));
  if (!type) throw SchemaError(prefix + "/pol_type", "unknown PoL type");
  c.pol_type = *type;
  const auto source = parse_source(string_field(j, "source", prefix));
  if (!source) throw SchemaError(prefix + "/source", "unknown source");
  c.source = *source;

  if (j.contains("citations")) {
    const json& cits = j.at("citations");
    if (!cits.is_array()) throw SchemaError(prefix + "/citations", "expected array");
    for (std::size_t i = 0; i < cits.size(); ++i) {
      c.citations.push_back(citation_from_json_at(cits[i], prefix + "/citations/" + std::to_string(i)));
    }
  }
  if (c.trigger == Trigger::kQuoteAndKeyword && c.quote.empty()) {
    throw SchemaError(prefix + "/quote", "QuoteAndKeyword requires a quote");
  }
  if (c.trigger == Trigger::kCitationAtEnd && !c.quote.empty()) {
    throw SchemaError(prefix + "/quote", "CitationAtEnd requires an empty quote");
  }
  return c;
}

}  // namespace

json citation_to_json(const CitationRef& c) {
  json j;
  j["raw"] = c.raw;
  j["court"] = to_string(c.court);
  if (!c.other_court.empty()) j["other_court"] = c.other_court;
  if (c.section) j["section"] = *c.section;
  if (c.division) j["division"] = *c.division;
  if (c.place) j["place"] = *c.place;
  if (c.marker) j["marker"] = *c.marker;
  if (c.number) j["number"] = *c.number;
  if (c.year) j["year"] = *c.year;
  if (c.date) j["date"] = format_date(*c.date);
  return j;
}

CitationRef citation_from_json(const json& j) { return citation_from_json_at(j, ""); }

json candidate_to_json(const PoLCandidate& c) {
  json j;
  j["doc_id"] = c.doc_id;
  j["paragraph_index"] = c.paragraph_index;
  j["text"] = c.text;
  j["quote"] = c.quote;
  j["trigger"] = to_string(c.trigger);
  j["pol_type"] = to_string(c.pol_type);
  j["citations"] = json::array();
  for (const auto& cit : c.citations) j["citations"].push_back(citation_to_json(cit));
  j["source"] = to_string(c.source);
  return j;
}

PoLCandidate candidate_from_json(const json& j) { return candidate_from_json_at(j, ""); }

void write_jsonl(const std::vector<PoLCandidate>& candidates, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& c : candidates) out << candidate_to_json(c).dump() << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<PoLCandidate> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open candidates " + path.string());
  std::vector<PoLCandidate> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string prefix = "/" + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError(prefix, std::string("invalid JSON: ") + e.what());
    }
    out.push_back(candidate_from_json_at(j, prefix));
  }
  return out;
}

}  // namespace polex
