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


#include "polex/text.h"

#include <gtest/gtest.h>

namespace polex::text {
namespace {

TEST(Utf8, RoundTripsMixedScripts) {
  const std::string s = "Corte “x” «y» ‘z’ İı ſ 東京 \U0001F600";
  EXPECT_TRUE(is_valid_utf8(s));
  EXPECT_EQ(encode_utf8(decode_utf8(s)), s);
  EXPECT_EQ(codepoint_length("“ab”"), 4u);
}

TEST(Utf8, RejectsMalformedSequences) {
  EXPECT_FALSE(is_valid_utf8("\xC3"));              // truncated
  EXPECT_FALSE(is_valid_utf8("\xC0\xAF"));          // overlong
  EXPECT_FALSE(is_valid_utf8("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_TRUE(is_valid_utf8(""));
}

// Expected classes were read off Python: re.match(r'\w', c), re.match(r'\d', c), c.isspace().
TEST(CharClasses, FollowPythonRe) {
  EXPECT_TRUE(is_word_char(U'_'));
  EXPECT_TRUE(is_word_char(U'è'));
  EXPECT_TRUE(is_word_char(U'東'));
  EXPECT_TRUE(is_word_char(U'٢'));
  EXPECT_FALSE(is_word_char(U'.'));
  EXPECT_FALSE(is_word_char(U'“'));
  EXPECT_TRUE(is_decimal_digit(U'٢'));
  EXPECT_FALSE(is_decimal_digit(U'²'));
  EXPECT_TRUE(is_space(U' '));
  EXPECT_TRUE(is_space(U'\x1c'));
  EXPECT_FALSE(is_space(U'​'));
}

TEST(Blank, TreatsAllWhitespaceAsBlank) {
  EXPECT_TRUE(is_blank(""));
  EXPECT_TRUE(is_blank(" \t\n "));
  EXPECT_FALSE(is_blank(" a "));
  EXPECT_EQ(trim("  a b \n"), "a b");
}

TEST(MatchTokens, FoldsCaseAndDropsPunctuation) {
  const auto t = match_tokens("La  CORTE, ha detto: “Il Diritto”!");
  const std::vector<std::string> expected = {"la", "corte", "ha", "detto", "il", "diritto"};
  EXPECT_EQ(t, expected);
}

TEST(MatchTokens, StripsOuterQuotesAndTrailingCitation) {
  EXPECT_EQ(normalize_for_match("“a b”"), "a b");
  EXPECT_EQ(match_tokens("a b (Cass. n. 1/2019)"), match_tokens("a b"));
  EXPECT_EQ(match_tokens("a b (...)"), match_tokens("a b"));
}

TEST(Sequences, LcsEditDistanceAndRuns) {
  const std::vector<std::string> a = {"a", "b", "c", "d"};
  const std::vector<std::string> b = {"a", "c", "d", "e"};
  const std::vector<std::string> run = {"b", "c"};
  const std::vector<std::string> gap = {"a", "c"};
  EXPECT_EQ(lcs_length(a, b), 3u);
  EXPECT_EQ(edit_distance(a, b), 2u);
  EXPECT_EQ(edit_distance(a, a), 0u);
  EXPECT_TRUE(contains_run(a, run));
  EXPECT_FALSE(contains_run(a, gap));
  EXPECT_EQ(lcs_length(a, {}), 0u);
}

}  // namespace
}  // namespace polex::text
