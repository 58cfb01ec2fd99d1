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

#include "polex/docx.h"

#include <expat.h>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string_view>

#include "corpus/zip_archive.h"
#include "polex/errors.h"

namespace polex::docx {
namespace {

constexpr std::string_view kMainPart = "word/document.xml";
constexpr std::string_view kAppPart = "docProps/app.xml";
constexpr std::string_view kWordNs =
    "http://schemas.openxmlformats.org/wordprocessingml/2006/main";
constexpr std::string_view kWordStrictNs =
    "http://purl.oclc.org/ooxml/wordprocessingml/main";
constexpr std::string_view kMarkupCompatNs =
    "http://schemas.openxmlformats.org/markup-compatibility/2006";
constexpr char kNsSep = '|';

struct QName {
  std::string_view ns;
  std::string_view local;
};

QName split_name(const XML_Char* name) {
  std::string_view s(name);
  const auto bar = s.find(kNsSep);
  if (bar == std::string_view::npos) return {{}, s};
  return {s.substr(0, bar), s.substr(bar + 1)};
}

bool is_word(const QName& q) { return q.ns == kWordNs || q.ns == kWordStrictNs; }

std::string_view attribute(const XML_Char** attrs, std::string_view local) {
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    const QName q = split_name(attrs[i]);
    if (q.local == local && (q.ns.empty() || is_word(q))) return attrs[i + 1];
  }
  return {};
}

using ParserPtr = std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)>;

// SAX state machine over word/document.xml.
class BodyReader {
 public:
  std::vector<BodyParagraph> paragraphs;

  void parse(const std::string& xml) {
    ParserPtr parser(XML_ParserCreateNS("UTF-8", kNsSep), &XML_ParserFree);
    XML_SetUserData(parser.get(), this);
    XML_SetElementHandler(parser.get(), &BodyReader::on_start, &BodyReader::on_end);
    XML_SetCharacterDataHandler(parser.get(), &BodyReader::on_text);
    if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), 1) ==
        XML_STATUS_ERROR) {
      std::ostringstream msg;
      msg << "malformed " << kMainPart << ": "
          << XML_ErrorString(XML_GetErrorCode(parser.get())) << " at line "
          << XML_GetCurrentLineNumber(parser.get());
      throw MalformedArchive(msg.str());
    }
    if (!saw_body_) throw MalformedArchive("document part has no w:body");
  }

 private:
  static void on_start(void* self, const XML_Char* name, const XML_Char** attrs) {
    static_cast<BodyReader*>(self)->start(split_name(name), attrs);
  }
  static void on_end(void* self, const XML_Char* name) {
    static_cast<BodyReader*>(self)->end(split_name(name));
  }
  static void on_text(void* self, const XML_Char* s, int len) {
    static_cast<BodyReader*>(self)->text(std::string_view(s, len));
  }

  void start(const QName& q, const XML_Char** attrs) {
    ++depth_;
    if (skip_depth_ != 0) return;
    if (q.ns == kMarkupCompatNs && q.local == "Fallback") {
      skip_depth_ = depth_;
      return;
    }
    if (!is_word(q)) return;

    if (q.local == "body") {
      saw_body_ = true;
      body_depth_ = depth_;
      return;
    }
    if (q.local == "p" && paragraph_depth_ == 0 && body_depth_ != 0 &&
        depth_ == body_depth_ + 1) {
      paragraph_depth_ = depth_;
      paragraphs.emplace_back();
      return;
    }
    if (paragraph_depth_ == 0) return;

    if (q.local == "del" || q.local == "moveFrom" || q.local == "txbxContent") {
      skip_depth_ = depth_;
    } else if (q.local == "r") {
      paragraphs.back().runs.emplace_back();
      in_run_ = true;
    } else if (!in_run_) {
      return;
    } else if (q.local == "rPr") {
      in_run_props_ = true;
    } else if (q.local == "highlight" && in_run_props_) {
      const std::string_view val = attribute(attrs, "val");
      current_run().highlight = val == "none" ? std::string() : std::string(val);
    } else if (q.local == "t") {
      in_text_ = true;
    } else if (q.local == "tab" || q.local == "ptab") {
      current_run().text += '\t';
    } else if (q.local == "br") {
      const std::string_view type = attribute(attrs, "type");
      if (type.empty() || type == "textWrapping") current_run().text += '\n';
    } else if (q.local == "cr") {
      current_run().text += '\n';
    } else if (q.local == "noBreakHyphen") {
      current_run().text += '-';
    }
  }

  void end(const QName& q) {
    const int closing = depth_--;
    if (skip_depth_ != 0) {
      if (closing == skip_depth_) skip_depth_ = 0;
      return;
    }
    if (!is_word(q)) return;
    if (closing == paragraph_depth_) {
      paragraph_depth_ = 0;
      in_run_ = in_run_props_ = in_text_ = false;
    } else if (closing == body_depth_) {
      body_depth_ = 0;
    } else if (q.local == "r") {
      in_run_ = false;
    } else if (q.local == "rPr") {
      in_run_props_ = false;
    } else if (q.local == "t") {
      in_text_ = false;
    }
  }

  void text(std::string_view s) {
    if (skip_depth_ == 0 && in_text_ && in_run_) current_run().text.append(s);
  }

  Run& current_run() { return paragraphs.back().runs.back(); }

  int depth_ = 0;
  int skip_depth_ = 0;
  int body_depth_ = 0;
  int paragraph_depth_ = 0;
  bool saw_body_ = false;
  bool in_run_ = false;
  bool in_run_props_ = false;
  bool in_text_ = false;
};

std::optional<int> read_page_count(const std::string& xml) {
  struct State {
    bool in_pages = false;
    std::string value;
  } state;
  ParserPtr parser(XML_ParserCreateNS("UTF-8", kNsSep), &XML_ParserFree);
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(
      parser.get(),
      [](void* p, const XML_Char* name, const XML_Char**) {
        if (split_name(name).local == "Pages") static_cast<State*>(p)->in_pages = true;
      },
      [](void* p, const XML_Char* name) {
        if (split_name(name).local == "Pages") static_cast<State*>(p)->in_pages = false;
      });
  XML_SetCharacterDataHandler(parser.get(), [](void* p, const XML_Char* s, int len) {
    auto* st = static_cast<State*>(p);
    if (st->in_pages) st->value.append(s, len);
  });
  if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), 1) ==
      XML_STATUS_ERROR) {
    return std::nullopt;  // metadata is optional; ignore a broken part
  }
  char* end = nullptr;
  const long pages = std::strtol(state.value.c_str(), &end, 10);
  if (state.value.empty() || *end != '\0' || pages <= 0) return std::nullopt;
  return static_cast<int>(pages);
}

}  // namespace

std::string BodyParagraph::text() const {
  std::string out;
  for (const auto& run : runs) out += run.text;
  return out;
}

Package parse_package(std::string bytes) {
  const corpus::ZipArchive zip(std::move(bytes));
  const auto main = zip.read(kMainPart);
  if (!main) throw MalformedArchive("missing main document part word/document.xml");

  BodyReader reader;
  reader.parse(*main);

  Package pkg;
  pkg.paragraphs = std::move(reader.paragraphs);
  if (auto app = zip.read(kAppPart)) pkg.pages = read_page_count(*app);
  return pkg;
}

Package read_package(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_package(std::move(buf).str());
  } catch (const MalformedArchive& e) {
    throw MalformedArchive(path.filename().string() + ": " + e.what());
  }
}

}  // namespace polex::docx
