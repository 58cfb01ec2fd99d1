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

#include "polex/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "polex/docx.h"
#include "polex/errors.h"
#include "polex/parallel.h"
#include "polex/text.h"

namespace polex {
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::vector<std::string> plaintext_paragraphs(std::string_view content) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  std::vector<std::string> paragraphs;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) paragraphs.push_back(std::move(current));
    current.clear();
  };
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (text::is_blank(line)) {
      flush();
    } else {
      if (!current.empty()) current += ' ';
      current += text::trim(line);
    }
    pos = nl + 1;
  }
  flush();
  return paragraphs;
}

}  // namespace

Document::Document(std::string doc_id, std::vector<std::string> paragraph_texts,
                   std::optional<int> page_count, std::string source_path)
    : doc_id_(std::move(doc_id)),
      page_count_(page_count),
      source_path_(std::move(source_path)) {
  std::size_t offset = 0;
  for (auto& t : paragraph_texts) {
    if (text::is_blank(t)) continue;
    Paragraph p;
    p.index = paragraphs_.size();
    p.char_offset = offset;
    offset += text::codepoint_length(t) + 1;
    p.text = std::move(t);
    paragraphs_.push_back(std::move(p));
  }
}

std::string Document::full_text() const {
  std::string out;
  for (const auto& p : paragraphs_) {
    if (p.index != 0) out += '\n';
    out += p.text;
  }
  return out;
}

std::optional<DocumentFormat> format_for_path(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".docx") return DocumentFormat::kDocx;
  if (ext == ".txt") return DocumentFormat::kPlaintext;
  return std::nullopt;
}

std::string doc_id_for_path(const fs::path& path) {
  return path.stem().string();
}

Document load_document(const fs::path& path, DocumentFormat format) {
  if (!fs::is_regular_file(path)) throw FileNotFound("no such file: " + path.string());

  if (format == DocumentFormat::kDocx) {
    docx::Package pkg = docx::read_package(path);
    std::vector<std::string> texts;
    texts.reserve(pkg.paragraphs.size());
    for (const auto& p : pkg.paragraphs) texts.push_back(p.text());
    return Document(doc_id_for_path(path), std::move(texts), pkg.pages, path.string());
  }

  const std::string content = read_file(path);
  if (!text::is_valid_utf8(content)) {
    throw EncodingError(path.filename().string() + ": not valid UTF-8");
  }
  return Document(doc_id_for_path(path), plaintext_paragraphs(content),
                  std::nullopt, path.string());
}

CorpusLoad load_corpus(const fs::path& directory, unsigned jobs) {
  if (!fs::is_directory(directory)) {
    throw DirectoryNotFound("no such directory: " + directory.string());
  }

  CorpusLoad result;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    if (format_for_path(entry.path())) {
      files.push_back(entry.path());
    } else {
      result.warnings.push_back({entry.path(), "unrecognized file type, skipped"});
    }
  }
  auto by_name = [](const fs::path& a, const fs::path& b) {
    return a.filename() < b.filename();
  };
  std::sort(files.begin(), files.end(), by_name);
  std::sort(result.warnings.begin(), result.warnings.end(),
            [&](const LoadWarning& a, const LoadWarning& b) { return by_name(a.path, b.path); });

  std::vector<std::optional<Document>> loaded(files.size());
  std::vector<std::string> errors(files.size());
  parallel_for(files.size(), jobs, [&](std::size_t i) {
    try {
      loaded[i] = load_document(files[i], *format_for_path(files[i]));
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  std::set<std::string> seen;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!loaded[i]) {
      result.warnings.push_back({files[i], errors[i]});
      ++result.failed;
      continue;
    }
    if (!seen.insert(loaded[i]->doc_id()).second) {
      result.warnings.push_back(
          {files[i], "duplicate doc_id '" + loaded[i]->doc_id() + "', skipped"});
      ++result.failed;
      continue;
    }
    result.documents.push_back(std::move(*loaded[i]));
  }
  return result;
}

}  // namespace polex
