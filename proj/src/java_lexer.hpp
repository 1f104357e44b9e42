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

// Internal tokenizer shared by SourceFile (line counting) and the scanner.

#ifndef SATD_SRC_JAVA_LEXER_HPP_
#define SATD_SRC_JAVA_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace satd::lexer {

enum class TokenType {
  kIdentifier,  // identifiers and keywords alike
  kNumber,
  kString,
  kTextBlock,
  kChar,
  kOperator,
  kLineComment,
  kBlockComment,
  kJavadoc,
};

struct Token {
  TokenType type;
  std::string_view text;  // view into the lexed buffer, delimiters included
  int line;               // 1-based
  int col;                // 1-based byte column
  int end_line;
  bool unterminated = false;

  bool is_comment() const {
    return type == TokenType::kLineComment || type == TokenType::kBlockComment ||
           type == TokenType::kJavadoc;
  }
  bool is(std::string_view s) const {
    return !is_comment() && type != TokenType::kString &&
           type != TokenType::kTextBlock && type != TokenType::kChar &&
           text == s;
  }
};

struct LexIssue {
  int line;
  std::string message;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<LexIssue> issues;
};

// Tokens are views into `text`, which must outlive the result.
LexResult lex(std::string_view text);

}  // namespace satd::lexer

#endif  // SATD_SRC_JAVA_LEXER_HPP_
