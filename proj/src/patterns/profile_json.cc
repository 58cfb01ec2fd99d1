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

#include <fstream>

#include <nlohmann/json.hpp>

#include "polex/errors.h"
#include "polex/patterns.h"
#include "polex/text.h"

namespace polex {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, json::value_t type) {
  if (!obj.contains(key)) throw SchemaError("/" + key, "missing field");
  const json& v = obj.at(key);
  if (v.type() != type) throw SchemaError("/" + key, std::string("expected ") + json(type).type_name());
  return v;
}

bool optional_bool(const json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) throw SchemaError("/" + key, "expected boolean");
  return obj.at(key).get<bool>();
}

}  // namespace

json profile_to_json(const RuleProfile& p) {
  json j;
  j["name"] = to_string(p.name);
  j["quote_open_set"] = text::encode_utf8(p.quote_open_set);
  j["quote_close_set"] = text::encode_utf8(p.quote_close_set);
  j["keyword_lexicon"] = p.keyword_lexicon;
  j["citation_anchored"] = p.citation_anchored;
  j["fix_abbrev_boundaries"] = p.fix_abbrev_boundaries;
  j["allow_trailing_punct_after_citation"] = p.allow_trailing_punct_after_citation;
  j["paired_quotes"] = p.paired_quotes;
  j["one_candidate_per_quote"] = p.one_candidate_per_quote;
  return j;
}

RuleProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "profile must be a JSON object");
  const auto& name = require(j, "name", json::value_t::string).get_ref<const std::string&>();
  const auto parsed = parse_profile_name(name);
  if (!parsed) throw SchemaError("/name", "unknown profile name '" + name + "'");

  // Missing fields default to the named built-in profile.
  RuleProfile p = RuleProfile::named(name);
  if (j.contains("quote_open_set")) {
    p.quote_open_set = text::decode_utf8(
        require(j, "quote_open_set", json::value_t::string).get<std::string>());
  }
  if (j.contains("quote_close_set")) {
    p.quote_close_set = text::decode_utf8(
        require(j, "quote_close_set", json::value_t::string).get<std::string>());
  }
  if (j.contains("keyword_lexicon")) {
    const json& lex = require(j, "keyword_lexicon", json::value_t::array);
    p.keyword_lexicon.clear();
    for (std::size_t i = 0; i < lex.size(); ++i) {
      if (!lex[i].is_string() || lex[i].get_ref<const std::string&>().empty()) {
        throw SchemaError("/keyword_lexicon/" + std::to_string(i), "expected non-empty string");
      }
      p.keyword_lexicon.push_back(lex[i].get<std::string>());
    }
  }
  p.citation_anchored = optional_bool(j, "citation_anchored", p.citation_anchored);
  p.fix_abbrev_boundaries = optional_bool(j, "fix_abbrev_boundaries", p.fix_abbrev_boundaries);
  p.allow_trailing_punct_after_citation = optional_bool(
      j, "allow_trailing_punct_after_citation", p.allow_trailing_punct_after_citation);
  p.paired_quotes = optional_bool(j, "paired_quotes", p.paired_quotes);
  p.one_candidate_per_quote = optional_bool(j, "one_candidate_per_quote", p.one_candidate_per_quote);
  return p;
}

RuleProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open profile " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return profile_from_json(j);
}

void save_profile(const RuleProfile& profile, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << profile_to_json(profile).dump(2) << '\n';
}

}  // namespace polex
