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

#include "satd/scanner.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

#include "java_lexer.hpp"
#include "satd/errors.hpp"

namespace satd {
namespace {

using lexer::Token;
using lexer::TokenType;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

constexpr std::array<std::string_view, 9> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

constexpr std::array<std::string_view, 44> kReserved = {
    "abstract", "assert",    "break",      "case",      "catch",     "class",
    "const",    "continue",  "default",    "do",        "else",      "enum",
    "extends",  "final",     "finally",    "for",       "goto",      "if",
    "implements", "import",  "instanceof", "interface", "native",    "new",
    "package",  "private",   "protected",  "public",    "return",    "static",
    "strictfp", "super",     "switch",     "synchronized", "this",   "throw",
    "throws",   "transient", "try",        "volatile",  "while",     "true",
    "false",    "null",
};

constexpr std::array<std::string_view, 14> kModifiers = {
    "public",   "protected", "private",   "static",       "final",
    "abstract", "native",    "transient", "volatile",     "strictfp",
    "default",  "sealed",    "transitive", "synchronized",
};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

constexpr std::array<std::string_view, 11> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string strip_delimiters(const Token& tok) {
  std::string_view body = tok.text;
  if (tok.type == TokenType::kLineComment) return std::string(trim(body.substr(2)));
  body.remove_prefix(tok.type == TokenType::kJavadoc ? 3 : 2);
  if (!tok.unterminated && body.size() >= 2) body.remove_suffix(2);

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    std::size_t nl = body.find('\n', start);
    std::string_view line = body.substr(start, nl == std::string_view::npos ? body.npos : nl - start);
    line = trim(line);
    while (!line.empty() && line.front() == '*') line.remove_prefix(1);
    lines.push_back(trim(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

CommentStyle style_of(const Token& tok) {
  switch (tok.type) {
    case TokenType::kJavadoc:
      return CommentStyle::kJavadoc;
    case TokenType::kBlockComment:
      return CommentStyle::kBlock;
    default:
      return CommentStyle::kLine;
  }
}

enum class FrameKind { kFile, kClassBody, kEnumBody, kCodeBlock, kSwitchBody, kArrayInit, kParen };

bool statement_bearing(FrameKind k) {
  return k != FrameKind::kArrayInit && k != FrameKind::kParen;
}

bool member_frame(FrameKind k) {
  return k == FrameKind::kFile || k == FrameKind::kClassBody || k == FrameKind::kEnumBody;
}

bool type_kind(StatementKind k) {
  return k == StatementKind::kClass || k == StatementKind::kInterface ||
         k == StatementKind::kEnum || k == StatementKind::kAnnotationDefn;
}

struct Statement {
  StatementKind kind = StatementKind::kExpr;
  int pending_ternary = 0;
  bool body_opened = false;
  std::string type_name;
};

struct Frame {
  FrameKind kind = FrameKind::kFile;
  int id = 0;
  bool embedded = false;  // closing it resumes the enclosing statement
  Statement saved;
  std::string type_name;
  bool enum_constants = false;
  bool do_body = false;
  bool control_header = false;
  bool switch_header = false;
  bool new_call = false;
};

enum class HeaderParen { kNone, kControl, kSwitch };

// What the first token of a statement implies for the tokens after it.
struct Start {
  std::optional<StatementKind> kind;
  std::string type_name;
  std::size_t resume_at = kNone;  // a new statement begins after this token
  bool resume_body = false;
  HeaderParen header = HeaderParen::kNone;
  bool body_next = false;  // else / do / try / finally
  bool is_do = false;
  bool opens_block = false;
};

struct LogicalComment {
  std::size_t first_token;
  std::size_t last_token;
  CommentSpan span;
};

class Builder {
 public:
  Builder(const std::vector<Token>& tokens, int line_count)
      : tokens_(tokens), line_count_(line_count) {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!tokens_[i].is_comment()) code_.push_back(&tokens_[i]);
    }
  }

  void run(const std::vector<LogicalComment>& comments) {
    std::vector<std::size_t> comment_at(tokens_.size(), kNone);
    for (std::size_t c = 0; c < comments.size(); ++c) comment_at[comments[c].first_token] = c;
    comment_item.assign(comments.size(), 0);

    frames_.push_back(Frame{});
    depth_before_.reserve(code_.size());
    depth_after_.reserve(code_.size());
    std::size_t ci = 0;
    for (std::size_t ti = 0; ti < tokens_.size(); ++ti) {
      if (tokens_[ti].is_comment()) {
        if (comment_at[ti] != kNone) add_comment_item(comments[comment_at[ti]], comment_at[ti]);
        continue;
      }
      depth_before_.push_back(depth());
      process(ci);
      depth_after_.push_back(depth());
      ++ci;
    }
    build_line_depths();
  }

  std::vector<ScannedFile::Item> items;
  std::vector<std::size_t> comment_item;
  std::vector<int> line_start_depth;
  std::vector<int> line_end_depth;

 private:
  // ---- token helpers over the comment-free stream ----

  std::size_t size() const { return code_.size(); }

  bool is(std::size_t i, std::string_view s) const { return i < size() && code_[i]->is(s); }

  std::string_view text(std::size_t i) const { return i < size() ? code_[i]->text : ""; }

  bool ident(std::size_t i) const {
    return i < size() && code_[i]->type == TokenType::kIdentifier &&
           !contains(kReserved, code_[i]->text) && !contains(kPrimitives, code_[i]->text);
  }

  bool type_start(std::size_t i) const {
    return ident(i) || (i < size() && contains(kPrimitives, code_[i]->text));
  }

  std::size_t match_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < size(); ++k) {
      if (is(k, "(")) ++depth;
      if (is(k, ")") && --depth == 0) return k;
    }
    return size() - 1;
  }

  std::size_t match_open_paren(std::size_t close) const {
    int depth = 0;
    for (std::size_t k = close + 1; k-- > 0;) {
      if (is(k, ")")) ++depth;
      if (is(k, "(") && --depth == 0) return k;
    }
    return kNone;
  }

  // `i` at '<'; returns the index after the matching '>' or kNone when the
  // bracketed tokens cannot be type arguments.
  std::size_t skip_generic(std::size_t i) const {
    int depth = 0;
    for (std::size_t k = i; k < size(); ++k) {
      std::string_view t = text(k);
      if (t == "<") {
        ++depth;
      } else if (t == ">") {
        if (--depth == 0) return k + 1;
      } else if (!(code_[k]->type == TokenType::kIdentifier || t == "." || t == "," ||
                   t == "?" || t == "&" || t == "[" || t == "]" || t == "@")) {
        return kNone;
      }
    }
    return kNone;
  }

  std::size_t parse_type(std::size_t j) const {
    if (!type_start(j) && !is(j, "var")) return kNone;
    std::size_t k = j + 1;
    while (true) {
      if (is(k, "<")) {
        k = skip_generic(k);
        if (k == kNone) return kNone;
      }
      if (is(k, ".") && ident(k + 1)) {
        k += 2;
        continue;
      }
      break;
    }
    while (is(k, "[") && is(k + 1, "]")) k += 2;
    if (is(k, "...")) ++k;
    return k;
  }

  std::size_t annotation_end(std::size_t at) const {
    std::size_t j = at + 1;
    while (is(j + 1, ".") && ident(j + 2)) j += 2;
    if (is(j + 1, "(")) j = match_paren(j + 1);
    return j;
  }

  std::size_t skip_modifiers(std::size_t j) const {
    while (j < size()) {
      if (contains(kModifiers, text(j))) {
        ++j;
      } else if (is(j, "non") && is(j + 1, "-") && is(j + 2, "sealed")) {
        j += 3;
      } else if (is(j, "@") && !is(j + 1, "interface")) {
        j = annotation_end(j) + 1;
      } else {
        break;
      }
    }
    return j;
  }

  // After the parameter list at `open`: '{' before ';' means a body.
  bool has_body(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = match_paren(open) + 1; k < size(); ++k) {
      std::string_view t = text(k);
      if (t == "(") ++depth;
      if (t == ")") --depth;
      if (depth == 0 && t == "{") return true;
      if (depth == 0 && (t == ";" || t == "}")) return false;
    }
    return false;
  }

  bool is_new_call(std::size_t open) const {
    if (open == 0) return false;
    std::size_t k = open - 1;
    if (is(k, ">")) {
      int depth = 0;
      while (true) {
        if (is(k, ">")) ++depth;
        if (is(k, "<") && --depth == 0) break;
        if (k == 0) return false;
        --k;
      }
      if (k == 0) return false;
      --k;
    }
    if (!ident(k)) return false;
    while (k >= 2 && is(k - 1, ".") && ident(k - 2)) k -= 2;
    return k >= 1 && is(k - 1, "new");
  }

  // Colon or arrow ending a `case` label.
  std::size_t case_label_end(std::size_t i) const {
    int depth = 0;
    int ternary = 0;
    for (std::size_t k = i + 1; k < size(); ++k) {
      std::string_view t = text(k);
      if (t == "(" || t == "[" || t == "{") ++depth;
      if (t == ")" || t == "]" || t == "}") {
        if (--depth < 0) return kNone;
      }
      if (depth != 0) continue;
      if (t == "?") ++ternary;
      if (t == "->") return k;
      if (t == ":") {
        if (ternary == 0) return k;
        --ternary;
      }
      if (t == ";") return kNone;
    }
    return kNone;
  }

  bool enhanced_for(std::size_t for_tok) const {
    if (!is(for_tok + 1, "(")) return false;
    std::size_t close = match_paren(for_tok + 1);
    int depth = 0;
    bool colon = false;
    for (std::size_t k = for_tok + 2; k < close; ++k) {
      std::string_view t = text(k);
      if (t == "(" || t == "[" || t == "{") ++depth;
      if (t == ")" || t == "]" || t == "}") --depth;
      if (depth != 0) continue;
      if (t == ";") return false;
      if (t == ":") colon = true;
    }
    return colon;
  }

  // ---- statement classification ----

  Start classify(std::size_t i) const {
    const Frame& f = frames_.back();
    Start s;
    if (is(i, "@") && !is(i + 1, "interface")) {
      s.kind = StatementKind::kAnnotation;
      s.resume_at = annotation_end(i);
      return s;
    }
    if (is(i, ";")) {
      if (!(f.kind == FrameKind::kEnumBody && f.enum_constants)) s.kind = StatementKind::kEmptyStmt;
      return s;
    }
    if (is(i, "{")) {
      s.kind = StatementKind::kBlock;
      s.opens_block = true;
      return s;
    }
    if (f.kind == FrameKind::kEnumBody && f.enum_constants) {
      s.kind = StatementKind::kDecl;
      return s;
    }
    if (member_frame(f.kind)) return classify_member(i, f);
    return classify_local(i);
  }

  bool type_declaration(std::size_t j, Start& s) const {
    if (is(j, "class") || (is(j, "record") && ident(j + 1) && !is(j + 2, "="))) {
      s.kind = StatementKind::kClass;
    } else if (is(j, "interface")) {
      s.kind = StatementKind::kInterface;
    } else if (is(j, "enum")) {
      s.kind = StatementKind::kEnum;
    } else if (is(j, "@") && is(j + 1, "interface")) {
      s.kind = StatementKind::kAnnotationDefn;
      ++j;
    } else {
      return false;
    }
    s.type_name = std::string(text(j + 1));
    return true;
  }

  Start classify_member(std::size_t i, const Frame& f) const {
    Start s;
    std::size_t j = skip_modifiers(i);
    if (is(j, "{") && j > i) {
      bool is_static = false;
      for (std::size_t k = i; k < j; ++k) is_static = is_static || is(k, "static");
      s.kind = is_static ? StatementKind::kStatic : StatementKind::kBlock;
      s.resume_at = j - 1;
      s.resume_body = true;
      return s;
    }
    if (is(j, "package")) {
      s.kind = StatementKind::kPackage;
    } else if (is(j, "import")) {
      s.kind = StatementKind::kImport;
    } else if (is(j, "module") || (is(j, "open") && is(j + 1, "module"))) {
      s.kind = StatementKind::kModule;
    } else if (type_declaration(j, s)) {
      // kind and name set
    } else {
      if (is(j, "<")) {
        j = skip_generic(j);
        if (j == kNone) {
          s.kind = StatementKind::kExpr;
          return s;
        }
      }
      if (ident(j) && is(j + 1, "(")) {
        bool body = has_body(j + 1);
        if (!f.type_name.empty() && text(j) == f.type_name) {
          s.kind = body ? StatementKind::kConstructor : StatementKind::kConstructorDecl;
        } else {
          s.kind = body ? StatementKind::kFunction : StatementKind::kFunctionDecl;
        }
      } else if (ident(j) && is(j + 1, "{") && text(j) == f.type_name) {
        s.kind = StatementKind::kConstructor;  // compact record constructor
      } else if (std::size_t k = parse_type(j); k != kNone && ident(k)) {
        if (is(k + 1, "(")) {
          s.kind = has_body(k + 1) ? StatementKind::kFunction : StatementKind::kFunctionDecl;
        } else {
          s.kind = StatementKind::kDeclStmt;
        }
      } else {
        s.kind = StatementKind::kExpr;
      }
    }
    return s;
  }

  Start classify_local(std::size_t i) const {
    Start s;
    std::string_view t = text(i);
    if (t == "if" || t == "while" || t == "catch") {
      s.kind = t == "if" ? StatementKind::kIf : t == "while" ? StatementKind::kWhile : StatementKind::kCatch;
      s.header = HeaderParen::kControl;
    } else if (t == "for") {
      s.kind = enhanced_for(i) ? StatementKind::kRange : StatementKind::kFor;
      s.header = HeaderParen::kControl;
    } else if (t == "else") {
      s.kind = StatementKind::kElse;
      if (is(i + 1, "if")) {
        s.header = HeaderParen::kControl;
      } else {
        s.body_next = true;
      }
    } else if (t == "do") {
      s.kind = StatementKind::kDo;
      s.body_next = true;
      s.is_do = true;
    } else if (t == "switch") {
      s.kind = StatementKind::kSwitch;
      s.header = HeaderParen::kSwitch;
    } else if (t == "try") {
      s.kind = StatementKind::kTry;
      if (is(i + 1, "(")) {
        s.header = HeaderParen::kControl;
      } else {
        s.body_next = true;
      }
    } else if (t == "finally") {
      s.kind = StatementKind::kFinally;
      s.body_next = true;
    } else if (t == "throw") {
      s.kind = StatementKind::kThrow;
    } else if (t == "return") {
      s.kind = StatementKind::kReturn;
    } else if (t == "break") {
      s.kind = StatementKind::kBreak;
    } else if (t == "continue") {
      s.kind = StatementKind::kContinue;
    } else if (t == "assert") {
      s.kind = StatementKind::kAssert;
    } else if (t == "case") {
      s.kind = StatementKind::kCase;
      s.resume_at = case_label_end(i);
      s.resume_body = is(s.resume_at, "->");
    } else if (t == "default" && (is(i + 1, ":") || is(i + 1, "->"))) {
      s.kind = StatementKind::kDefault;
      s.resume_at = i + 1;
      s.resume_body = is(i + 1, "->");
    } else if (t == "synchronized" && is(i + 1, "(")) {
      s.kind = StatementKind::kSynchronized;
      s.header = HeaderParen::kControl;
    } else if (t == "yield" && !(is(i + 1, "=") || is(i + 1, "(") || is(i + 1, "."))) {
      s.kind = StatementKind::kExpr;
    } else if ((t == "this" || t == "super") && is(i + 1, "(")) {
      s.kind = StatementKind::kCall;
    } else if (ident(i) && is(i + 1, ":")) {
      s.kind = StatementKind::kLabel;
      s.resume_at = i + 1;
    } else {
      std::size_t j = skip_modifiers(i);
      if (type_declaration(j, s)) return s;
      std::size_t k = parse_type(j);
      if (k != kNone && ident(k) &&
          (is(k + 1, "=") || is(k + 1, ";") || is(k + 1, ",") || is(k + 1, "[") || is(k + 1, ":"))) {
        s.kind = StatementKind::kDeclStmt;
      } else if (j > i) {
        s.kind = StatementKind::kDeclStmt;  // `final` et al. only start declarations
      } else {
        s.kind = expression_kind(i);
      }
    }
    return s;
  }

  StatementKind expression_kind(std::size_t i) const {
    int depth = 0;
    bool assign = false;
    bool incdec = false;
    std::size_t end = size();
    for (std::size_t k = i; k < size(); ++k) {
      std::string_view t = text(k);
      if (t == "(" || t == "[" || t == "{") ++depth;
      if (t == ")" || t == "]" || t == "}") {
        if (--depth < 0) {
          end = k;
          break;
        }
      }
      if (depth != 0) continue;
      if (t == ";") {
        end = k;
        break;
      }
      if (contains(kAssignOps, t)) assign = true;
      if (t == "++" || t == "--") incdec = true;
    }
    if (!assign && !incdec && end > i && is(end - 1, ")")) {
      std::size_t open = match_open_paren(end - 1);
      if (open != kNone && open > i && (ident(open - 1) || is(open - 1, ">"))) {
        return StatementKind::kCall;
      }
    }
    return StatementKind::kExprStmt;
  }

  // ---- the structural pass ----

  int depth() const {
    int d = -1;
    for (const auto& f : frames_) d += f.kind != FrameKind::kParen;
    return d;
  }

  const Frame& brace_frame() const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      if (it->kind != FrameKind::kParen) return *it;
    }
    return frames_.front();
  }

  bool in_member_scope() const {
    return std::all_of(frames_.begin(), frames_.end(),
                       [](const Frame& f) { return member_frame(f.kind); });
  }

  void add_comment_item(const LogicalComment& c, std::size_t index) {
    ScannedFile::Item item{StatementKind::kComment, c.span.start_line, c.span.start_col,
                           depth(), brace_frame().id, in_member_scope()};
    item.comment = index;
    item.between_statements = at_stmt_start_ && statement_bearing(frames_.back().kind) &&
                              resume_at_ == kNone;
    comment_item[index] = items.size();
    items.push_back(item);
  }

  void add_item(StatementKind kind, const Token& t) {
    items.push_back(ScannedFile::Item{kind, t.line, t.col, depth(), brace_frame().id,
                                      in_member_scope()});
  }

  void push_brace(FrameKind kind, bool embedded, std::string type_name = {}) {
    Frame f;
    f.kind = kind;
    f.id = ++next_frame_id_;
    f.embedded = embedded;
    f.type_name = std::move(type_name);
    f.enum_constants = kind == FrameKind::kEnumBody;
    f.do_body = std::exchange(do_pending_, false);
    if (kind == FrameKind::kArrayInit) {
      frames_.push_back(std::move(f));
      at_stmt_start_ = false;
      return;
    }
    if (embedded) f.saved = stmt_;
    frames_.push_back(std::move(f));
    stmt_ = Statement{};
    at_stmt_start_ = true;
    body_pending_ = false;
  }

  void close_brace() {
    while (frames_.size() > 1 && frames_.back().kind == FrameKind::kParen) frames_.pop_back();
    if (frames_.size() == 1) return;  // stray '}'
    Frame f = std::move(frames_.back());
    frames_.pop_back();
    body_pending_ = false;
    if (f.kind == FrameKind::kArrayInit) {
      at_stmt_start_ = false;
    } else if (f.embedded) {
      stmt_ = std::move(f.saved);
      at_stmt_start_ = false;
    } else {
      stmt_ = Statement{};
      at_stmt_start_ = true;
      after_do_body_ = f.do_body;
    }
  }

  void open_brace_mid_statement(std::size_t ci) {
    const Frame& top = frames_.back();
    if (pending_switch_body_) {
      pending_switch_body_ = false;
      push_brace(FrameKind::kSwitchBody, switch_embedded_);
      return;
    }
    std::string_view prev = ci > 0 ? text(ci - 1) : "";
    if (top.kind == FrameKind::kArrayInit || prev == "=" || prev == "," || prev == "]" ||
        prev == "(") {
      push_brace(FrameKind::kArrayInit, true);
    } else if (last_new_call_) {
      push_brace(FrameKind::kClassBody, true);
    } else if (prev == "->") {
      push_brace(FrameKind::kCodeBlock, true);
    } else if (type_kind(stmt_.kind) && !stmt_.body_opened) {
      stmt_.body_opened = true;
      push_brace(stmt_.kind == StatementKind::kEnum ? FrameKind::kEnumBody : FrameKind::kClassBody,
                 false, stmt_.type_name);
    } else if (top.kind == FrameKind::kEnumBody && top.enum_constants) {
      push_brace(FrameKind::kClassBody, true);
    } else {
      push_brace(FrameKind::kCodeBlock, false);
    }
  }

  void end_statement() {
    at_stmt_start_ = true;
    body_pending_ = false;
    stmt_ = Statement{};
    header_ = HeaderParen::kNone;
    if (frames_.back().kind == FrameKind::kEnumBody) frames_.back().enum_constants = false;
  }

  void process(std::size_t ci) {
    const Token& t = *code_[ci];
    last_new_call_ = std::exchange(pending_new_call_, false);
    bool started_here = false;

    if (at_stmt_start_ && statement_bearing(frames_.back().kind) && !t.is("}")) {
      if (t.is("{") && body_pending_) {
        body_pending_ = false;
        push_brace(FrameKind::kCodeBlock, false);
        return;
      }
      if (after_do_body_ && t.is("while")) {
        after_do_body_ = false;
        at_stmt_start_ = false;
        stmt_ = Statement{};
        stmt_.kind = StatementKind::kWhile;
        return;
      }
      after_do_body_ = false;
      body_pending_ = false;
      Start s = classify(ci);
      if (s.kind) add_item(*s.kind, t);
      at_stmt_start_ = false;
      started_here = true;
      stmt_ = Statement{s.kind.value_or(StatementKind::kExpr), 0, false, s.type_name};
      if (s.opens_block) {
        push_brace(FrameKind::kCodeBlock, false);
        return;
      }
      header_ = s.header;
      if (s.header == HeaderParen::kSwitch) switch_embedded_ = false;
      resume_at_ = s.resume_at;
      resume_body_ = s.resume_body;
      if (s.body_next) {
        at_stmt_start_ = true;
        body_pending_ = true;
        do_pending_ = s.is_do;
        return;
      }
    }

    if (t.is("(")) {
      Frame p;
      p.kind = FrameKind::kParen;
      p.control_header = header_ == HeaderParen::kControl;
      p.switch_header = header_ == HeaderParen::kSwitch;
      p.new_call = is_new_call(ci);
      header_ = HeaderParen::kNone;
      frames_.push_back(std::move(p));
    } else if (t.is(")")) {
      if (frames_.back().kind == FrameKind::kParen) {
        Frame p = std::move(frames_.back());
        frames_.pop_back();
        if (p.control_header) {
          at_stmt_start_ = true;
          body_pending_ = true;
        }
        pending_switch_body_ = pending_switch_body_ || p.switch_header;
        pending_new_call_ = p.new_call;
      }
    } else if (t.is("{")) {
      open_brace_mid_statement(ci);
    } else if (t.is("}")) {
      close_brace();
    } else if (t.is(";")) {
      FrameKind k = frames_.back().kind;
      if (k != FrameKind::kParen && k != FrameKind::kArrayInit) end_statement();
    } else if (t.is(",")) {
      Frame& top = frames_.back();
      if (top.kind == FrameKind::kEnumBody && top.enum_constants) {
        at_stmt_start_ = true;
        stmt_ = Statement{};
      }
    } else if (t.is("?")) {
      ++stmt_.pending_ternary;
    } else if (t.is(":")) {
      if (stmt_.pending_ternary > 0) --stmt_.pending_ternary;
    } else if (t.is("switch") && !started_here) {
      header_ = HeaderParen::kSwitch;
      switch_embedded_ = true;
    }

    if (ci == resume_at_) {
      resume_at_ = kNone;
      at_stmt_start_ = true;
      body_pending_ = resume_body_;
      stmt_ = Statement{};
    }
  }

  void build_line_depths() {
    line_start_depth.assign(line_count_ + 2, depth());
    line_end_depth.assign(line_count_ + 2, 0);
    // Start of line L: depth before the first code token on or after L.
    std::size_t k = code_.size();
    for (int line = line_count_ + 1; line >= 1; --line) {
      while (k > 0 && code_[k - 1]->line >= line) --k;
      line_start_depth[line] = k < code_.size() ? depth_before_[k] : depth_after_final();
    }
    // End of line L: depth after the last code token starting on or before L.
    std::size_t m = 0;
    int current = 0;
    for (int line = 1; line <= line_count_ + 1; ++line) {
      while (m < code_.size() && code_[m]->line <= line) current = depth_after_[m++];
      line_end_depth[line] = current;
    }
  }

  int depth_after_final() const { return depth_after_.empty() ? 0 : depth_after_.back(); }

  const std::vector<Token>& tokens_;
  std::vector<const Token*> code_;
  int line_count_;
  std::vector<int> depth_before_;
  std::vector<int> depth_after_;

  std::vector<Frame> frames_;
  int next_frame_id_ = 0;
  Statement stmt_;
  bool at_stmt_start_ = true;
  bool body_pending_ = false;
  bool do_pending_ = false;
  bool after_do_body_ = false;
  bool pending_switch_body_ = false;
  bool switch_embedded_ = false;
  bool pending_new_call_ = false;
  bool last_new_call_ = false;
  HeaderParen header_ = HeaderParen::kNone;
  std::size_t resume_at_ = kNone;
  bool resume_body_ = false;
};

std::vector<LogicalComment> group_comments(const std::vector<Token>& tokens,
                                           const std::string& path) {
  std::vector<LogicalComment> out;
  int last_code_end_line = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (!tok.is_comment()) {
      last_code_end_line = tok.end_line;
      continue;
    }
    const bool trailing = last_code_end_line == tok.line;
    const CommentStyle style = style_of(tok);
    if (style == CommentStyle::kLine && !trailing && !out.empty()) {
      LogicalComment& prev = out.back();
      if (prev.last_token + 1 == i && prev.span.style == CommentStyle::kLine &&
          !prev.span.trailing && prev.span.end_line + 1 == tok.line) {
        prev.last_token = i;
        prev.span.end_line = tok.line;
        prev.span.text += '\n';
        prev.span.text += strip_delimiters(tok);
        continue;
      }
    }
    CommentSpan span;
    span.style = style;
    span.start_line = tok.line;
    span.end_line = tok.end_line;
    span.start_col = tok.col;
    span.text = strip_delimiters(tok);
    span.trailing = trailing;
    span.file = path;
    out.push_back(LogicalComment{i, i, std::move(span)});
  }
  return out;
}

std::optional<StatementContext> context_of(const ScannedFile::Item& item) {
  return StatementContext(item.kind);
}

}  // namespace

std::string_view to_string(CommentStyle style) {
  switch (style) {
    case CommentStyle::kLine:
      return "line";
    case CommentStyle::kBlock:
      return "block";
    case CommentStyle::kJavadoc:
      return "javadoc";
  }
  return "line";
}

std::optional<CommentStyle> parse_comment_style(std::string_view name) {
  if (name == "line") return CommentStyle::kLine;
  if (name == "block") return CommentStyle::kBlock;
  if (name == "javadoc") return CommentStyle::kJavadoc;
  return std::nullopt;
}

ScannedFile::ScannedFile(const SourceFile& file) : path_(file.path()) {
  lexer::LexResult lexed = lexer::lex(file.text());
  for (const auto& issue : lexed.issues) diagnostics_.push_back({path_, issue.line, issue.message});

  std::vector<LogicalComment> grouped = group_comments(lexed.tokens, path_);
  Builder builder(lexed.tokens, static_cast<int>(file.line_count()));
  builder.run(grouped);

  comments_.reserve(grouped.size());
  for (auto& c : grouped) comments_.push_back(std::move(c.span));
  items_ = std::move(builder.items);
  comment_item_ = std::move(builder.comment_item);
  depth_at_line_start_ = std::move(builder.line_start_depth);
  depth_at_line_end_ = std::move(builder.line_end_depth);
}

std::optional<StatementContext> ScannedFile::statement_at(int line, Direction direction) const {
  const int last = static_cast<int>(depth_at_line_start_.size()) - 2;
  if (line < 1 || line > std::max(last, 1)) {
    throw UsageError(path_ + ": line " + std::to_string(line) + " is outside the file");
  }
  if (direction == Direction::kBefore) {
    const int d = depth_at_line_start_[line];
    for (auto it = items_.rbegin(); it != items_.rend(); ++it) {
      if (it->line < line && it->depth <= d) return context_of(*it);
    }
  } else {
    const int d = depth_at_line_end_[line];
    for (const auto& item : items_) {
      if (item.line > line && item.depth <= d) return context_of(item);
    }
  }
  return std::nullopt;
}

std::optional<StatementContext> ScannedFile::preceding(std::size_t index) const {
  const std::size_t at = comment_item_.at(index);
  const int d = items_[at].depth;
  for (std::size_t k = at; k-- > 0;) {
    if (items_[k].depth <= d) return context_of(items_[k]);
  }
  return std::nullopt;
}

std::optional<StatementContext> ScannedFile::succeeding(std::size_t index) const {
  const std::size_t at = comment_item_.at(index);
  const int d = items_[at].depth;
  for (std::size_t k = at + 1; k < items_.size(); ++k) {
    if (items_[k].depth <= d) return context_of(items_[k]);
  }
  return std::nullopt;
}

std::optional<HeaderKind> ScannedFile::header_construct(std::size_t index) const {
  const std::size_t at = comment_item_.at(index);
  const Item& c = items_[at];
  if (!c.member_scope || !c.between_statements) return std::nullopt;

  for (std::size_t k = at + 1; k < items_.size(); ++k) {
    const Item& next = items_[k];
    if (next.frame != c.frame) break;
    if (next.kind == StatementKind::kComment || next.kind == StatementKind::kAnnotation) continue;
    switch (next.kind) {
      case StatementKind::kClass:
        return HeaderKind::kClass;
      case StatementKind::kInterface:
      case StatementKind::kAnnotationDefn:
        return HeaderKind::kInterface;
      case StatementKind::kEnum:
        return HeaderKind::kEnum;
      case StatementKind::kFunction:
      case StatementKind::kFunctionDecl:
        return HeaderKind::kFunction;
      case StatementKind::kConstructor:
      case StatementKind::kConstructorDecl:
        return HeaderKind::kConstructor;
      default:
        break;
    }
    break;
  }

  if (c.frame != 0) return std::nullopt;
  const bool code_before = std::any_of(items_.begin(), items_.begin() + at, [](const Item& i) {
    return i.kind != StatementKind::kComment;
  });
  const bool code_after = std::any_of(items_.begin() + at + 1, items_.end(), [](const Item& i) {
    return i.kind != StatementKind::kComment;
  });
  if (!code_before && code_after) return HeaderKind::kFile;
  return std::nullopt;
}

std::optional<std::size_t> ScannedFile::find_comment(int start_line, int start_col) const {
  for (std::size_t i = 0; i < comments_.size(); ++i) {
    if (comments_[i].start_line == start_line && comments_[i].start_col == start_col) return i;
  }
  return std::nullopt;
}

CommentExtraction extract_comments(const SourceFile& file) {
  ScannedFile scanned(file);
  return {scanned.comments(), scanned.diagnostics()};
}

std::optional<StatementContext> classify_statement_at(const SourceFile& file, int line,
                                                      Direction direction) {
  return ScannedFile(file).statement_at(line, direction);
}

std::optional<HeaderKind> detect_header_construct(const SourceFile& file,
                                                  const CommentSpan& comment) {
  ScannedFile scanned(file);
  auto index = scanned.find_comment(comment.start_line, comment.start_col);
  if (!index) {
    throw UsageError(file.path() + ": no comment starts at line " +
                     std::to_string(comment.start_line));
  }
  return scanned.header_construct(*index);
}

}  // namespace satd
