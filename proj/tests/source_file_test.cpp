// Copyright 2026 The satd-scope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "satd/source_file.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "satd/errors.hpp"

namespace satd {
namespace {

TEST(SourceFile, SplitsPhysicalLines) {
  auto f = SourceFile::from_text("A.java", "class A {\r\n  int x;\n}\n");
  ASSERT_EQ(f.line_count(), 3u);
  EXPECT_EQ(f.lines()[0], "class A {");
  EXPECT_EQ(f.lines()[2], "}");
}

TEST(SourceFile, EmptyFileHasNoLines) {
  auto f = SourceFile::from_text("E.java", "");
  EXPECT_EQ(f.line_count(), 0u);
  EXPECT_EQ(f.code_line_count(), 0u);
}

TEST(SourceFile, CodeLinesExcludeBlankAndCommentOnlyLines) {
  auto f = SourceFile::from_text("A.java",
                                 "// header\n"
                                 "\n"
                                 "class A { /* inline */\n"
                                 "  /* block\n"
                                 "     continues */\n"
                                 "  int x; // trailing\n"
                                 "}\n");
  EXPECT_EQ(f.line_count(), 7u);
  EXPECT_EQ(f.code_line_count(), 3u);
  EXPECT_LE(f.code_line_count(), f.line_count());
}

TEST(SourceFile, RejectsNonJavaPaths) {
  EXPECT_THROW(SourceFile::from_text("notes.txt", "x"), std::invalid_argument);
}

TEST(SourceFile, InvalidBytesAreReplaced) {
  auto f = SourceFile::from_text("A.java", std::string("// caf\xE9\n", 7));
  EXPECT_EQ(f.lines()[0], "// caf\xEF\xBF\xBD");
}

TEST(SourceFile, ByteOrderMarkIsDropped) {
  auto f = SourceFile::from_text("A.java", "\xEF\xBB\xBFpackage a;");
  EXPECT_EQ(f.lines()[0], "package a;");
}

TEST(SourceFile, UnreadableFileCarriesPath) {
  try {
    SourceFile::load("/nonexistent/dir/X.java", "dir/X.java");
    FAIL() << "expected FileError";
  } catch (const FileError& e) {
    EXPECT_EQ(e.path(), "dir/X.java");
  }
}

}  // namespace
}  // namespace satd
