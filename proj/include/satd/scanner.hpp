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

// Comment-aware structural scanning of Java source.
//
// The scanner makes one brace/parenthesis-aware pass over the token stream
// and records an ordered list of "items": the first token of every statement
// or member declaration, plus every logical comment. Each item carries the
// brace depth at which it starts. The neighbour of a comment in a direction
// is the nearest item that direction whose depth is not greater than the
// comment's, so statements nested inside a sibling's body are skipped and a
// comment that opens a block sees the enclosing statement before it.

#ifndef SATD_SCANNER_HPP_
#define SATD_SCANNER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satd/source_file.hpp"
#include "satd/taxonomy.hpp"

namespace satd {

enum class CommentStyle { kLine, kBlock, kJavadoc };

std::string_view to_string(CommentStyle style);
std::optional<CommentStyle> parse_comment_style(std::string_view name);

// One logical comment. Runs of whole-line `//` comments on adjacent lines
// are merged into a single span whose text joins the lines with '\n'; only
// an unmerged line comment has start_line == end_line.
struct CommentSpan {
  CommentStyle style = CommentStyle::kLine;
  int start_line = 0;
  int end_line = 0;
  int start_col = 0;
  std::string text;  // delimiters and javadoc '*' gutters stripped
  bool trailing = false;
  std::string file;

  friend bool operator==(const CommentSpan&, const CommentSpan&) = default;
};

struct Diagnostic {
  std::string file;
  int line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

enum class Direction { kBefore, kAfter };

class ScannedFile {
 public:
  struct Item {
    StatementKind kind;  // kComment for comment items
    int line;
    int col;
    int depth;           // enclosing brace depth; file scope is 0
    int frame;           // id of the innermost enclosing brace scope
    bool member_scope;   // frame is file scope or a type body
    // Comment items only.
    std::size_t comment = 0;
    bool between_statements = false;
  };

  explicit ScannedFile(const SourceFile& file);

  const std::string& path() const { return path_; }
  const std::vector<CommentSpan>& comments() const { return comments_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  const std::vector<Item>& items() const { return items_; }

  // Line-oriented lookup: the nearest statement starting strictly above
  // (kBefore) or strictly below (kAfter) `line`.
  std::optional<StatementContext> statement_at(int line, Direction direction) const;

  // Position-oriented lookups for comments()[index].
  std::optional<StatementContext> preceding(std::size_t index) const;
  std::optional<StatementContext> succeeding(std::size_t index) const;
  std::optional<HeaderKind> header_construct(std::size_t index) const;

  // Index into comments() of the span starting at (line, col), if any.
  std::optional<std::size_t> find_comment(int start_line, int start_col) const;

 private:
  std::string path_;
  std::vector<CommentSpan> comments_;
  std::vector<Diagnostic> diagnostics_;
  std::vector<Item> items_;
  std::vector<std::size_t> comment_item_;  // comment index -> item index
  std::vector<int> depth_at_line_start_;
  std::vector<int> depth_at_line_end_;
};

struct CommentExtraction {
  std::vector<CommentSpan> comments;
  std::vector<Diagnostic> diagnostics;
};

CommentExtraction extract_comments(const SourceFile& file);

std::optional<StatementContext> classify_statement_at(const SourceFile& file, int line,
                                                      Direction direction);

// Throws UsageError when `comment` is not one of the file's comments.
std::optional<HeaderKind> detect_header_construct(const SourceFile& file,
                                                  const CommentSpan& comment);

}  // namespace satd

#endif  // SATD_SCANNER_HPP_
