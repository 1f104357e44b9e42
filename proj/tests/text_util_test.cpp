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

#include "satd/text_util.hpp"

#include <gtest/gtest.h>

#include <random>

namespace satd {
namespace {

TEST(GlobMatch, SingleStarStaysInSegment) {
  EXPECT_TRUE(glob_match("*.java", "A.java"));
  EXPECT_FALSE(glob_match("*.java", "src/A.java"));
  EXPECT_TRUE(glob_match("src/*.java", "src/A.java"));
  EXPECT_FALSE(glob_match("src/?.java", "src/AB.java"));
  EXPECT_TRUE(glob_match("src/?.java", "src/A.java"));
}

TEST(GlobMatch, DoubleStarSpansSegments) {
  EXPECT_TRUE(glob_match("**/*.java", "A.java"));
  EXPECT_TRUE(glob_match("**/*.java", "a/b/c/A.java"));
  EXPECT_TRUE(glob_match("**/test/**", "x/test/y/Z.java"));
  EXPECT_FALSE(glob_match("**/test/**", "x/tests/Z.java"));
  EXPECT_TRUE(glob_match("src/**", "src/a/b.java"));
  EXPECT_FALSE(glob_match("src/**", "lib/a/b.java"));
}

TEST(GlobMatch, EmptyPattern) {
  EXPECT_TRUE(glob_match("", ""));
  EXPECT_FALSE(glob_match("", "a"));
}

TEST(Csv, QuotedFieldsAndCrlf) {
  auto r = parse_csv("a,b\r\n\"x,1\",\"say \"\"hi\"\"\"\r\n");
  ASSERT_TRUE(r.error.empty());
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[1][0], "x,1");
  EXPECT_EQ(r.rows[1][1], "say \"hi\"");
}

TEST(Csv, EmbeddedNewlineKeepsRowLines) {
  auto r = parse_csv("h\n\"two\nlines\"\nnext\n");
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[1][0], "two\nlines");
  EXPECT_EQ(r.row_lines[1], 2);
  EXPECT_EQ(r.row_lines[2], 4);
}

TEST(Csv, MissingTrailingNewlineAndEmptyFields) {
  auto r = parse_csv("a,,c");
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0], (CsvRow{"a", "", "c"}));
}

TEST(Csv, UnterminatedQuoteIsAnError) {
  auto r = parse_csv("a\n\"oops\n");
  EXPECT_FALSE(r.error.empty());
  EXPECT_EQ(r.error_line, 2);
}

// Writing a row and parsing it back returns the same fields.
TEST(Csv, RoundTripProperty) {
  std::mt19937 rng(7);
  const std::string alphabet = "ab,\"\n\r x";
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> fields(1 + rng() % 5);
    for (auto& f : fields) {
      const int len = static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i) f += alphabet[rng() % alphabet.size()];
    }
    // A lone empty field would serialize to a blank line.
    if (fields.size() == 1 && fields[0].empty()) fields[0] = "a";
    auto r = parse_csv(csv_line(fields));
    ASSERT_TRUE(r.error.empty());
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0], fields);
  }
}

}  // namespace
}  // namespace satd
