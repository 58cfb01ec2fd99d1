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

#include <fstream>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "polex/docx.h"
#include "polex/errors.h"
#include "polex/text.h"

namespace polex {
namespace {

using nlohmann::json;
using Key = std::tuple<std::string, long, std::string>;

Key key_of(const GoldAnnotation& a) { return {a.doc_id, a.paragraph_index, normalize_span(a.span_text)}; }

std::string describe(const GoldAnnotation& a) {
  return a.doc_id + "#" + std::to_string(a.paragraph_index) + " \"" + a.span_text + "\"";
}

const json& member(const json& obj, const std::string& key, const std::string& prefix) {
  if (!obj.contains(key)) throw SchemaError(prefix + "/" + key, "missing field");
  return obj.at(key);
}

std::string string_member(const json& obj, const std::string& key, const std::string& prefix) {
  const json& v = member(obj, key, prefix);
  if (!v.is_string()) throw SchemaError(prefix + "/" + key, "expected string");
  return v.get<std::string>();
}

GoldAnnotation annotation_from_json(const json& j, const std::string& prefix) {
  if (!j.is_object()) throw SchemaError(prefix, "expected object");
  GoldAnnotation a;
  a.doc_id = string_member(j, "doc_id", prefix);
  if (a.doc_id.empty()) throw SchemaError(prefix + "/doc_id", "must not be empty");
  const json& index = member(j, "paragraph_index", prefix);
  if (!index.is_number_integer() || index.get<long>() < 0) {
    throw SchemaError(prefix + "/paragraph_index", "expected non-negative integer");
  }
  a.paragraph_index = index.get<long>();
  a.span_text = string_member(j, "span_text", prefix);
  if (normalize_span(a.span_text).empty()) throw SchemaError(prefix + "/span_text", "must not be blank");
  const auto type = parse_pol_type(string_member(j, "pol_type", prefix));
  if (!type) throw SchemaError(prefix + "/pol_type", "unknown PoL type");
  a.pol_type = *type;
  if (j.contains("annotator_id") && !j.at("annotator_id").is_null()) {
    a.annotator_id = string_member(j, "annotator_id", prefix);
  }
  if (j.contains("origin")) {
    const auto origin = parse_origin(string_member(j, "origin", prefix));
    if (!origin) throw SchemaError(prefix + "/origin", "unknown origin");
    a.origin = *origin;
  }
  return a;
}

json annotation_to_json(const GoldAnnotation& a) {
  json j;
  j["doc_id"] = a.doc_id;
  j["paragraph_index"] = a.paragraph_index;
  j["span_text"] = a.span_text;
  j["pol_type"] = to_string(a.pol_type);
  j["origin"] = to_string(a.origin);
  if (a.annotator_id) j["annotator_id"] = *a.annotator_id;
  return j;
}

}  // namespace

std::string to_string(Origin origin) {
  return origin == Origin::kHuman ? "Human" : "ToolConfirmed";
}

std::optional<Origin> parse_origin(std::string_view name) {
  if (name == "Human") return Origin::kHuman;
  if (name == "ToolConfirmed") return Origin::kToolConfirmed;
  return std::nullopt;
}

std::string normalize_span(std::string_view span) {
  const std::u32string s = text::decode_utf8(span);
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : s) {
    if (text::is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return text::encode_utf8(out);
}

GoldSet::GoldSet(std::vector<GoldAnnotation> annotations) : annotations_(std::move(annotations)) {
  std::set<Key> seen;
  for (const auto& a : annotations_) {
    if (!seen.insert(key_of(a)).second) throw DuplicateAnnotation("duplicate annotation " + describe(a));
  }
}

std::map<PoLType, std::size_t> GoldSet::counts_by_type() const {
  std::map<PoLType, std::size_t> counts;
  for (PoLType t : kAllPoLTypes) counts[t] = 0;
  for (const auto& a : annotations_) ++counts[a.pol_type];
  return counts;
}

std::vector<GoldAnnotation> GoldSet::for_document(std::string_view doc_id) const {
  std::vector<GoldAnnotation> out;
  for (const auto& a : annotations_) {
    if (a.doc_id == doc_id) out.push_back(a);
  }
  return out;
}

std::vector<std::string> GoldSet::doc_ids() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& a : annotations_) {
    if (seen.insert(a.doc_id).second) out.push_back(a.doc_id);
  }
  return out;
}

std::optional<PoLType> pol_type_for_highlight(std::string_view colour) {
  if (colour == "yellow") return PoLType::kExplicitDirect;
  if (colour == "blue" || colour == "cyan") return PoLType::kExplicitIndirect;
  if (colour == "lightGray" || colour == "darkGray") return PoLType::kImplicit;
  return std::nullopt;
}

HighlightImport import_docx_highlights(const std::filesystem::path& path,
                                       std::optional<std::string> annotator_id) {
  const docx::Package package = docx::read_package(path);
  const std::string doc_id = doc_id_for_path(path);
  HighlightImport result;

  long index = -1;
  for (const auto& paragraph : package.paragraphs) {
    if (text::is_blank(paragraph.text())) continue;
    ++index;

    std::string colour;
    std::string span;
    auto flush = [&] {
      if (!colour.empty() && !text::is_blank(span)) {
        if (const auto type = pol_type_for_highlight(colour)) {
          result.annotations.push_back(
              {doc_id, index, text::trim(span), *type, annotator_id, Origin::kHuman});
        } else {
          result.warnings.push_back(path.filename().string() + ": paragraph " + std::to_string(index) +
                                    ": unknown highlight colour '" + colour + "' ignored");
        }
      }
      colour.clear();
      span.clear();
    };

    for (const auto& run : paragraph.runs) {
      if (run.text.empty()) continue;  // property-only runs keep the group open
      if (run.highlight != colour) flush();
      colour = run.highlight;
      if (!colour.empty()) span += run.text;
    }
    flush();
  }

  // A paragraph may repeat the same highlighted text; keep the first.
  std::set<Key> seen;
  std::erase_if(result.annotations, [&](const GoldAnnotation& a) { return !seen.insert(key_of(a)).second; });
  return result;
}

json gold_to_json(const GoldSet& gold) {
  json j;
  j["version"] = 1;
  j["annotations"] = json::array();
  for (const auto& a : gold.annotations()) j["annotations"].push_back(annotation_to_json(a));
  return j;
}

GoldSet gold_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "gold file must be a JSON object");
  if (j.contains("version") && (!j.at("version").is_number_integer() || j.at("version").get<int>() != 1)) {
    throw SchemaError("/version", "unsupported version");
  }
  const json& list = member(j, "annotations", "");
  if (!list.is_array()) throw SchemaError("/annotations", "expected array");

  std::vector<GoldAnnotation> annotations;
  std::set<Key> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string prefix = "/annotations/" + std::to_string(i);
    GoldAnnotation a = annotation_from_json(list[i], prefix);
    if (!seen.insert(key_of(a)).second) throw SchemaError(prefix, "duplicate annotation " + describe(a));
    annotations.push_back(std::move(a));
  }
  return GoldSet(std::move(annotations));
}

GoldSet load_gold(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open gold file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return gold_from_json(j);
}

std::filesystem::path save_gold(const GoldSet& gold, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << gold_to_json(gold).dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
  return path;
}

GoldSet augment_gold(const GoldSet& gold, const std::vector<PoLCandidate>& confirmed) {
  std::vector<GoldAnnotation> annotations = gold.annotations();
  std::set<Key> seen;
  for (const auto& a : annotations) seen.insert(key_of(a));
  for (const auto& c : confirmed) {
    if (c.paragraph_index < 0) {
      throw std::invalid_argument("confirmed candidate in " + c.doc_id + " has no paragraph index");
    }
    GoldAnnotation a{c.doc_id, c.paragraph_index, c.text, c.pol_type, std::nullopt, Origin::kToolConfirmed};
    if (!seen.insert(key_of(a)).second) throw DuplicateAnnotation("already in gold: " + describe(a));
    annotations.push_back(std::move(a));
  }
  return GoldSet(std::move(annotations));
}

std::vector<std::string> validate_gold(const GoldSet& gold, const std::vector<Document>& documents) {
  std::unordered_map<std::string, const Document*> by_id;
  for (const auto& d : documents) by_id.emplace(d.doc_id(), &d);
  std::vector<std::string> problems;
  for (const auto& a : gold.annotations()) {
    const auto it = by_id.find(a.doc_id);
    if (it == by_id.end()) {
      problems.push_back(describe(a) + ": unknown document");
      continue;
    }
    if (a.paragraph_index < 0 || static_cast<std::size_t>(a.paragraph_index) >= it->second->size()) {
      problems.push_back(describe(a) + ": paragraph out of range");
      continue;
    }
    const std::string para = normalize_span(it->second->paragraph(a.paragraph_index).text);
    if (para.find(normalize_span(a.span_text)) == std::string::npos) {
      problems.push_back(describe(a) + ": span not found in paragraph");
    }
  }
  return problems;
}

}  // namespace polex
