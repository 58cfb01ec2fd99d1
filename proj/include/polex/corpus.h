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

#ifndef POLEX_CORPUS_H_
#define POLEX_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace polex {

struct Paragraph {
  std::size_t index = 0;
  // Original text. Quotation-mark codepoints are never normalized.
  std::string text;
  // Codepoint offset of the paragraph in Document::full_text().
  std::size_t char_offset = 0;

  bool operator==(const Paragraph&) const = default;
};

// One judgment as an ordered list of non-blank paragraphs. Immutable.
class Document {
 public:
  Document() = default;

  // Blank (whitespace-only) paragraphs are dropped before indexing.
  Document(std::string doc_id, std::vector<std::string> paragraph_texts,
           std::optional<int> page_count = std::nullopt,
           std::string source_path = {});

  const std::string& doc_id() const { return doc_id_; }
  const std::vector<Paragraph>& paragraphs() const { return paragraphs_; }
  const Paragraph& paragraph(std::size_t index) const { return paragraphs_.at(index); }
  std::size_t size() const { return paragraphs_.size(); }
  const std::optional<int>& page_count() const { return page_count_; }
  const std::string& source_path() const { return source_path_; }

  // Paragraph texts joined with '\n'; char_offset indexes into this.
  std::string full_text() const;

  bool operator==(const Document&) const = default;

 private:
  std::string doc_id_;
  std::vector<Paragraph> paragraphs_;
  std::optional<int> page_count_;
  std::string source_path_;
};

enum class DocumentFormat { kDocx, kPlaintext };

// Maps ".docx" and ".txt" (case-insensitive) to a format.
std::optional<DocumentFormat> format_for_path(const std::filesystem::path& path);

// The doc_id for a file: its basename without extension.
std::string doc_id_for_path(const std::filesystem::path& path);

// Throws FileNotFound, MalformedArchive or EncodingError.
Document load_document(const std::filesystem::path& path, DocumentFormat format);

struct LoadWarning {
  std::filesystem::path path;
  std::string message;

  bool operator==(const LoadWarning&) const = default;
};

struct CorpusLoad {
  std::vector<Document> documents;  // sorted by filename
  std::vector<LoadWarning> warnings;
  std::size_t failed = 0;           // files that raised an error
};

// Loads every recognized file directly inside `directory`. Unrecognized
// files and per-file failures become warnings; subdirectories are ignored.
// Throws DirectoryNotFound. `jobs` == 0 picks the hardware concurrency.
CorpusLoad load_corpus(const std::filesystem::path& directory, unsigned jobs = 0);

}  // namespace polex

#endif  // POLEX_CORPUS_H_
