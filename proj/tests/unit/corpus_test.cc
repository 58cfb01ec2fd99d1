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

#include <gtest/gtest.h>

#include "polex/docx.h"
#include "polex/errors.h"
#include "polex/text.h"
#include "test_util.h"

namespace polex {
namespace {

using testing::fixture;
using testing::ScratchDir;
using testing::write_file;

TEST(LoadDocument, DropsBlankDocxParagraphs) {
  const Document doc = load_document(fixture("docx/a_blank_b.docx"), DocumentFormat::kDocx);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc.paragraph(0).text, "A");
  EXPECT_EQ(doc.paragraph(1).text, "B");
  EXPECT_EQ(doc.paragraph(1).index, 1u);
  EXPECT_EQ(doc.doc_id(), "a_blank_b");
}

// 17 w:p elements in the body, 3 of them whitespace-only (checked by unzipping
// the fixture and counting).
TEST(LoadDocument, FixtureWithSeventeenElements) {
  const auto pkg = docx::read_package(fixture("corpus/s01.docx"));
  EXPECT_EQ(pkg.paragraphs.size(), 17u);
  const Document doc = load_document(fixture("corpus/s01.docx"), DocumentFormat::kDocx);
  EXPECT_EQ(doc.size(), 14u);
  EXPECT_EQ(doc.page_count(), 12);
  EXPECT_EQ(doc.paragraph(9).text, "Il principio è consolidato\n(Cass., sez. I, 22/06/2016 n. 12962)");
}

TEST(LoadDocument, PageCountUnsetWithoutMetadata) {
  EXPECT_FALSE(load_document(fixture("corpus/s03.docx"), DocumentFormat::kDocx).page_count());
}

TEST(LoadDocument, PreservesQuotationCodepoints) {
  const Document doc = load_document(fixture("corpus/s01.docx"), DocumentFormat::kDocx);
  std::string all;
  for (const auto& p : doc.paragraphs()) all += p.text;
  for (const char* q : {"“", "”", "«", "»", "‘", "’", "\""}) {
    EXPECT_NE(all.find(q), std::string::npos) << q;
  }
}

TEST(LoadDocument, OffsetsLocateEveryParagraph) {
  const Document doc = load_document(fixture("corpus/s01.docx"), DocumentFormat::kDocx);
  const std::u32string full = text::decode_utf8(doc.full_text());
  std::size_t previous = 0;
  for (const auto& p : doc.paragraphs()) {
    const std::u32string t = text::decode_utf8(p.text);
    EXPECT_EQ(full.substr(p.char_offset, t.size()), t);
    if (p.index > 0) {
      EXPECT_GT(p.char_offset, previous);
    }
    previous = p.char_offset;
  }
}

TEST(LoadDocument, Idempotent) {
  const auto path = fixture("corpus/s02.docx");
  EXPECT_EQ(load_document(path, DocumentFormat::kDocx), load_document(path, DocumentFormat::kDocx));
}

TEST(LoadDocument, SplitRunsJoinIntoOneParagraph) {
  const Document doc = load_document(fixture("corpus/s02.docx"), DocumentFormat::kDocx);
  EXPECT_EQ(doc.paragraph(1).text,
            "La Suprema Corte, a Sezioni Unite, ha statuito che “la condotta va valutata nel suo complesso”.");
}

TEST(LoadDocument, PlaintextBlocks) {
  ScratchDir dir;
  write_file(dir / "p.txt", "riga uno\nriga due\n\n \n\nsecondo\n");
  const Document doc = load_document(dir / "p.txt", DocumentFormat::kPlaintext);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc.paragraph(0).text, "riga uno riga due");
  EXPECT_EQ(doc.paragraph(1).text, "secondo");
}

TEST(LoadDocument, EmptyPlaintext) {
  ScratchDir dir;
  write_file(dir / "e.txt", "");
  EXPECT_EQ(load_document(dir / "e.txt", DocumentFormat::kPlaintext).size(), 0u);
}

TEST(LoadDocument, Errors) {
  ScratchDir dir;
  EXPECT_THROW(load_document(dir / "missing.docx", DocumentFormat::kDocx), FileNotFound);
  write_file(dir / "bad.txt", "ok \xFF\xFE");
  EXPECT_THROW(load_document(dir / "bad.txt", DocumentFormat::kPlaintext), EncodingError);
  write_file(dir / "notzip.docx", "plain text, not an archive");
  EXPECT_THROW(load_document(dir / "notzip.docx", DocumentFormat::kDocx), MalformedArchive);
  EXPECT_THROW(load_document(fixture("corrupt/b.docx"), DocumentFormat::kDocx), MalformedArchive);
}

TEST(LoadCorpus, SortsByFilenameAndWarnsOnUnknownTypes) {
  const CorpusLoad load = load_corpus(fixture("mixed"));
  ASSERT_EQ(load.documents.size(), 3u);
  EXPECT_EQ(load.documents[0].doc_id(), "notes");
  EXPECT_EQ(load.documents[1].doc_id(), "s01");
  EXPECT_EQ(load.documents[2].doc_id(), "s02");
  ASSERT_EQ(load.warnings.size(), 1u);
  EXPECT_EQ(load.warnings[0].path.filename(), "readme.md");
  EXPECT_EQ(load.failed, 0u);
}

TEST(LoadCorpus, EmptyDirectory) {
  ScratchDir dir;
  const CorpusLoad load = load_corpus(dir.path());
  EXPECT_TRUE(load.documents.empty());
  EXPECT_TRUE(load.warnings.empty());
}

TEST(LoadCorpus, CorruptFileIsNotFatal) {
  const CorpusLoad load = load_corpus(fixture("corrupt"));
  ASSERT_EQ(load.documents.size(), 2u);
  EXPECT_EQ(load.failed, 1u);
  ASSERT_EQ(load.warnings.size(), 1u);
  EXPECT_EQ(load.warnings[0].path.filename(), "b.docx");
}

TEST(LoadCorpus, SequentialAndParallelAgree) {
  EXPECT_EQ(load_corpus(fixture("mixed"), 1).documents, load_corpus(fixture("mixed"), 4).documents);
}

TEST(LoadCorpus, MissingDirectory) {
  EXPECT_THROW(load_corpus(fixture("no_such_dir")), DirectoryNotFound);
}

TEST(Formats, ByExtension) {
  EXPECT_EQ(format_for_path("a/b.DOCX"), DocumentFormat::kDocx);
  EXPECT_EQ(format_for_path("b.txt"), DocumentFormat::kPlaintext);
  EXPECT_FALSE(format_for_path("b.pdf"));
  EXPECT_EQ(doc_id_for_path("dir/s01.docx"), "s01");
}

}  // namespace
}  // namespace polex
