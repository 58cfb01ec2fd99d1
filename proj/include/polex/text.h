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

// UTF-8 and token utilities shared by the pattern engine, the aligner and
// the LLM response parser. All offsets are in codepoints unless noted.

#ifndef POLEX_TEXT_H_
#define POLEX_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polex::text {

// Strict UTF-8 validation (no overlongs, no surrogates, max U+10FFFF).
bool is_valid_utf8(std::string_view bytes);

// Decodes UTF-8. Throws EncodingError on malformed input.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

// Number of codepoints in valid UTF-8.
std::size_t codepoint_length(std::string_view bytes);

// Character classes with Python `re` semantics for str patterns.
bool is_word_char(char32_t cp);     // \w
bool is_decimal_digit(char32_t cp); // \d
bool is_space(char32_t cp);         // str.isspace()

char32_t to_lower(char32_t cp);
std::u32string to_lower(std::u32string_view text);

// Strips leading and trailing whitespace.
std::string trim(std::string_view text);
bool is_blank(std::string_view text);

// Case-folds, collapses whitespace runs to one space, trims, then strips
// one pair of outer quotation marks and a trailing parenthesized citation
// such as "(Cass. 217/2019)".
std::string normalize_for_match(std::string_view text);

// Word tokens (maximal runs of \w) of the normalized text.
std::vector<std::string> match_tokens(std::string_view text);

// Length of the longest common subsequence of two token sequences.
std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);

// Token-level Levenshtein distance.
std::size_t edit_distance(std::span<const std::string> a,
                          std::span<const std::string> b);

// True when `needle` occurs as a contiguous run inside `haystack`.
bool contains_run(std::span<const std::string> haystack,
                  std::span<const std::string> needle);

}  // namespace polex::text

#endif  // POLEX_TEXT_H_
