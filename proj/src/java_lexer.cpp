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

#include "java_lexer.hpp"

#include <array>
#include <cstddef>

namespace satd::lexer {
namespace {

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

// '>' is deliberately absent: generic closers like '>>' are lexed one
// character at a time.
constexpr std::array<std::string_view, 20> kMultiCharOps = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult run() {
    while (pos_ < text_.size()) {
      unsigned char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        line_start_ = ++pos_;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        ++pos_;
        continue;
      }
      std::size_t start = pos_;
      int line = line_;
      int col = static_cast<int>(pos_ - line_start_) + 1;
      TokenType type;
      bool unterminated = false;
      if (c == '/' && peek(1) == '/') {
        type = TokenType::kLineComment;
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        type = (peek(2) == '*' && peek(3) != '/') ? TokenType::kJavadoc
                                                  : TokenType::kBlockComment;
        pos_ += 2;
        unterminated = !consume_until("*/");
        if (unterminated) result_.issues.push_back({line, "unterminated block comment"});
      } else if (c == '"' && peek(1) == '"' && peek(2) == '"') {
        type = TokenType::kTextBlock;
        pos_ += 3;
        unterminated = !consume_quoted_until("\"\"\"");
        if (unterminated) result_.issues.push_back({line, "unterminated text block"});
      } else if (c == '"' || c == '\'') {
        type = c == '"' ? TokenType::kString : TokenType::kChar;
        ++pos_;
        unterminated = !consume_literal(static_cast<char>(c));
        if (unterminated) result_.issues.push_back({line, "unterminated literal"});
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        type = TokenType::kNumber;
        consume_number(start);
      } else if (is_ident_start(c)) {
        type = TokenType::kIdentifier;
        while (pos_ < text_.size() && is_ident_part(text_[pos_])) ++pos_;
      } else {
        type = TokenType::kOperator;
        pos_ += operator_length();
      }
      std::string_view tok_text = text_.substr(start, pos_ - start);
      if (type == TokenType::kLineComment && !tok_text.empty() && tok_text.back() == '\r') {
        tok_text.remove_suffix(1);
      }
      result_.tokens.push_back({type, tok_text, line, col, line_, unterminated});
    }
    return std::move(result_);
  }

 private:
  unsigned char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance_one() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  bool consume_until(std::string_view close) {
    while (pos_ < text_.size()) {
      if (text_.compare(pos_, close.size(), close) == 0) {
        pos_ += close.size();
        return true;
      }
      advance_one();
    }
    return false;
  }

  bool consume_quoted_until(std::string_view close) {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        advance_one();
        advance_one();
        continue;
      }
      if (text_.compare(pos_, close.size(), close) == 0) {
        pos_ += close.size();
        return true;
      }
      advance_one();
    }
    return false;
  }

  // String and char literals cannot span lines; an unterminated one stops at
  // the end of its line so the rest of the file still lexes.
  bool consume_literal(char quote) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') return false;
      if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '\n') {
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (c == quote) return true;
    }
    return false;
  }

  void consume_number(std::size_t start) {
    const bool hex = start + 1 < text_.size() && text_[start] == '0' &&
                     (text_[start + 1] == 'x' || text_[start + 1] == 'X');
    while (pos_ < text_.size()) {
      unsigned char c = text_[pos_];
      if (is_ident_part(c) || c == '.') {
        ++pos_;
      } else if ((c == '+' || c == '-') && pos_ > 0) {
        char prev = text_[pos_ - 1];
        if ((prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') &&
            !(hex && (prev == 'e' || prev == 'E'))) {
          ++pos_;
        } else {
          break;
        }
      } else {
        break;
      }
    }
  }

  std::size_t operator_length() const {
    for (std::string_view op : kMultiCharOps) {
      if (text_.compare(pos_, op.size(), op) == 0) return op.size();
    }
    return 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  LexResult result_;
};

}  // namespace

LexResult lex(std::string_view text) { return Lexer(text).run(); }

}  // namespace satd::lexer
