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

#include "satd/taxonomy.hpp"

#include <algorithm>

namespace satd {
namespace {

struct KindEntry {
  StatementKind kind;
  std::string_view name;
  StatementCategory category;
};

using C = StatementCategory;
using K = StatementKind;

constexpr std::array<KindEntry, kStatementKindCount> kKindTable = {{
    {K::kFunction, "function", C::kDefn},
    {K::kEnum, "enum", C::kDefn},
    {K::kClass, "class", C::kDefn},
    {K::kInterface, "interface", C::kDefn},
    {K::kConstructor, "constructor", C::kDefn},
    {K::kImport, "import", C::kDefn},
    {K::kPackage, "package", C::kDefn},
    {K::kDo, "do", C::kLoops},
    {K::kFor, "for", C::kLoops},
    {K::kWhile, "while", C::kLoops},
    {K::kRange, "range", C::kLoops},
    {K::kExprStmt, "expr_stmt", C::kExpr},
    {K::kCall, "call", C::kExpr},
    {K::kBreak, "break", C::kBrnch},
    {K::kReturn, "return", C::kBrnch},
    {K::kLabel, "label", C::kBrnch},
    {K::kContinue, "continue", C::kBrnch},
    {K::kIf, "if", C::kCndtnl},
    {K::kIfStmt, "if_stmt", C::kCndtnl},
    {K::kElse, "else", C::kCndtnl},
    {K::kCase, "case", C::kCndtnl},
    {K::kSwitch, "switch", C::kCndtnl},
    {K::kThen, "then", C::kCndtnl},
    {K::kTernary, "ternary", C::kCndtnl},
    {K::kDefault, "default", C::kCndtnl},
    {K::kAssert, "assert", C::kCndtnl},
    {K::kCatch, "catch", C::kExcptn},
    {K::kThrow, "throw", C::kExcptn},
    {K::kTry, "try", C::kExcptn},
    {K::kFinally, "finally", C::kExcptn},
    {K::kDeclStmt, "decl_stmt", C::kDecl},
    {K::kFunctionDecl, "function_decl", C::kDecl},
    {K::kConstructorDecl, "constructor_decl", C::kDecl},
    {K::kComment, "comment", C::kDoc},
    {K::kArgument, "argument", C::kMisc},
    {K::kArgumentList, "argument_list", C::kMisc},
    {K::kBlock, "block", C::kMisc},
    {K::kBlockContent, "block_content", C::kMisc},
    {K::kCondition, "condition", C::kMisc},
    {K::kIndex, "index", C::kMisc},
    {K::kName, "name", C::kMisc},
    {K::kOperator, "operator", C::kMisc},
    {K::kParameter, "parameter", C::kMisc},
    {K::kParameterList, "parameter_list", C::kMisc},
    {K::kSpecifier, "specifier", C::kMisc},
    {K::kSuper, "super", C::kMisc},
    {K::kExpr, "expr", C::kMisc},
    {K::kDecl, "decl", C::kMisc},
    {K::kEmptyStmt, "empty_stmt", C::kMisc},
    {K::kEof, "EOF", C::kMisc},
    {K::kLiteral, "literal", C::kMisc},
    {K::kAnnotation, "annotation", C::kMisc},
    {K::kAnnotationDefn, "annotation_defn", C::kMisc},
    {K::kSynchronized, "synchronized", C::kMisc},
    {K::kStatic, "static", C::kMisc},
    {K::kLambda, "lambda", C::kMisc},
    {K::kType, "type", C::kMisc},
    {K::kModule, "module", C::kMisc},
}};

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "DEFN", "DECL", "EXPR", "CNDTNL", "BRNCH", "EXCPTN", "LOOPS", "DOC", "MISC",
};

constexpr std::array<std::string_view, 6> kHeaderNames = {
    "CLASS", "CONSTRUCTOR", "ENUM", "FILE", "FUNCTION", "INTERFACE",
};

const KindEntry& entry(StatementKind kind) {
  return kKindTable[static_cast<std::size_t>(kind)];
}

}  // namespace

const std::array<StatementKind, kStatementKindCount>& all_statement_kinds() {
  static const auto kinds = [] {
    std::array<StatementKind, kStatementKindCount> out{};
    for (std::size_t i = 0; i < kKindTable.size(); ++i) out[i] = kKindTable[i].kind;
    return out;
  }();
  return kinds;
}

StatementCategory category_of(StatementKind kind) { return entry(kind).category; }

std::string_view to_string(StatementKind kind) { return entry(kind).name; }

std::string_view to_string(StatementCategory category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::string_view to_string(HeaderKind kind) {
  return kHeaderNames[static_cast<std::size_t>(kind)];
}

std::optional<StatementKind> parse_statement_kind(std::string_view name) {
  auto it = std::find_if(kKindTable.begin(), kKindTable.end(),
                         [&](const KindEntry& e) { return e.name == name; });
  if (it == kKindTable.end()) return std::nullopt;
  return it->kind;
}

std::optional<StatementCategory> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<StatementCategory>(i);
  }
  return std::nullopt;
}

std::optional<HeaderKind> parse_header_kind(std::string_view name) {
  for (std::size_t i = 0; i < kHeaderNames.size(); ++i) {
    if (kHeaderNames[i] == name) return static_cast<HeaderKind>(i);
  }
  return std::nullopt;
}

std::optional<std::size_t> context_index(StatementCategory category) {
  for (std::size_t i = 0; i < kContextCategories.size(); ++i) {
    if (kContextCategories[i] == category) return i;
  }
  return std::nullopt;
}

}  // namespace satd
