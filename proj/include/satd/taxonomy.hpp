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

// Statement kinds, their category grouping, and header construct kinds.

#ifndef SATD_TAXONOMY_HPP_
#define SATD_TAXONOMY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace satd {

// The 58 srcML-aligned statement kinds. Names are the srcML element names,
// so PENTACET-style exports can be ingested without translation.
enum class StatementKind {
  // DEFN
  kFunction,
  kEnum,
  kClass,
  kInterface,
  kConstructor,
  kImport,
  kPackage,
  // LOOPS
  kDo,
  kFor,
  kWhile,
  kRange,
  // EXPR
  kExprStmt,
  kCall,
  // BRNCH
  kBreak,
  kReturn,
  kLabel,
  kContinue,
  // CNDTNL
  kIf,
  kIfStmt,
  kElse,
  kCase,
  kSwitch,
  kThen,
  kTernary,
  kDefault,
  kAssert,
  // EXCPTN
  kCatch,
  kThrow,
  kTry,
  kFinally,
  // DECL
  kDeclStmt,
  kFunctionDecl,
  kConstructorDecl,
  // DOC
  kComment,
  // MISC
  kArgument,
  kArgumentList,
  kBlock,
  kBlockContent,
  kCondition,
  kIndex,
  kName,
  kOperator,
  kParameter,
  kParameterList,
  kSpecifier,
  kSuper,
  kExpr,
  kDecl,
  kEmptyStmt,
  kEof,
  kLiteral,
  kAnnotation,
  kAnnotationDefn,
  kSynchronized,
  kStatic,
  kLambda,
  kType,
  kModule,
};

inline constexpr std::size_t kStatementKindCount = 58;

enum class StatementCategory {
  kDefn,
  kDecl,
  kExpr,
  kCndtnl,
  kBrnch,
  kExcptn,
  kLoops,
  kDoc,
  kMisc,
};

inline constexpr std::size_t kCategoryCount = 9;

// The eight categories that carry context; MISC is the excluded bucket.
// Order matches the row/column order of the result tables.
inline constexpr std::array<StatementCategory, 8> kContextCategories = {
    StatementCategory::kDecl,   StatementCategory::kExpr,
    StatementCategory::kDefn,   StatementCategory::kBrnch,
    StatementCategory::kCndtnl, StatementCategory::kLoops,
    StatementCategory::kExcptn, StatementCategory::kDoc,
};

enum class HeaderKind {
  kClass,
  kConstructor,
  kEnum,
  kFile,
  kFunction,
  kInterface,
};

inline constexpr std::array<HeaderKind, 6> kHeaderKinds = {
    HeaderKind::kClass, HeaderKind::kConstructor, HeaderKind::kEnum,
    HeaderKind::kFile,  HeaderKind::kFunction,    HeaderKind::kInterface,
};

const std::array<StatementKind, kStatementKindCount>& all_statement_kinds();

StatementCategory category_of(StatementKind kind);

std::string_view to_string(StatementKind kind);
std::string_view to_string(StatementCategory category);
std::string_view to_string(HeaderKind kind);

std::optional<StatementKind> parse_statement_kind(std::string_view name);
std::optional<StatementCategory> parse_category(std::string_view name);
std::optional<HeaderKind> parse_header_kind(std::string_view name);

// Index of a context category within kContextCategories; none for MISC.
std::optional<std::size_t> context_index(StatementCategory category);

// A neighbouring statement: its raw kind and the category it groups into.
struct StatementContext {
  StatementKind kind;
  StatementCategory category;

  explicit StatementContext(StatementKind k)
      : kind(k), category(category_of(k)) {}

  friend bool operator==(const StatementContext&,
                         const StatementContext&) = default;
};

}  // namespace satd

#endif  // SATD_TAXONOMY_HPP_
