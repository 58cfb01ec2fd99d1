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

#ifndef POLEX_TEXT_UNICODE_TABLES_H_
#define POLEX_TEXT_UNICODE_TABLES_H_

#include <span>

namespace polex::text::tables {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

struct CaseMapping {
  char32_t from;
  char32_t to;
};

// Sorted, non-overlapping ranges.
std::span<const CodepointRange> word_ranges();
std::span<const CodepointRange> digit_ranges();
// Sorted by `from`.
std::span<const CaseMapping> lower_mappings();

}  // namespace polex::text::tables

#endif  // POLEX_TEXT_UNICODE_TABLES_H_
