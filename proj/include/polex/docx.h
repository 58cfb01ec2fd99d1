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

// Low-level WordprocessingML reader. Only body-level paragraphs are read;
// tables, text boxes, headers, footers and notes are skipped.

#ifndef POLEX_DOCX_H_
#define POLEX_DOCX_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace polex::docx {

struct Run {
  std::string text;
  // Value of w:highlight/@w:val, empty when the run is not highlighted.
  std::string highlight;
};

struct BodyParagraph {
  std::vector<Run> runs;

  // Concatenated run text: w:t verbatim, w:tab and w:ptab as '\t',
  // line breaks and w:cr as '\n', w:noBreakHyphen as '-'.
  std::string text() const;
};

struct Package {
  std::vector<BodyParagraph> paragraphs;
  std::optional<int> pages;  // docProps/app.xml <Pages>
};

// Throws FileNotFound or MalformedArchive.
Package read_package(const std::filesystem::path& path);

// Parses an in-memory docx.
Package parse_package(std::string bytes);

}  // namespace polex::docx

#endif  // POLEX_DOCX_H_
