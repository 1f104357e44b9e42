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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

namespace satd {
namespace {

// Independent restatement of the kind -> category grouping.
const std::map<std::string, std::string>& expected_groups() {
  static const std::map<std::string, std::string> groups = [] {
    std::map<std::string, std::string> g;
    auto put = [&](const std::string& cat, std::initializer_list<const char*> kinds) {
      for (const char* k : kinds) g[k] = cat;
    };
    put("DEFN", {"function", "enum", "class", "interface", "constructor", "import", "package"});
    put("LOOPS", {"do", "for", "while", "range"});
    put("EXPR", {"expr_stmt", "call"});
    put("BRNCH", {"break", "return", "label", "continue"});
    put("CNDTNL", {"if", "if_stmt", "else", "case", "switch", "then", "ternary", "default",
                   "assert"});
    put("EXCPTN", {"catch", "throw", "try", "finally"});
    put("DECL", {"decl_stmt", "function_decl", "constructor_decl"});
    put("DOC", {"comment"});
    return g;
  }();
  return groups;
}

TEST(Taxonomy, HasFiftyEightDistinctKinds) {
  std::set<std::string> names;
  for (StatementKind k : all_statement_kinds()) names.insert(std::string(to_string(k)));
  EXPECT_EQ(names.size(), 58u);
}

TEST(Taxonomy, GroupingMatchesTheCategoryBoxes) {
  std::set<std::string> tags;
  for (StatementKind k : all_statement_kinds()) {
    const std::string name(to_string(k));
    const std::string tag(to_string(category_of(k)));
    tags.insert(tag);
    auto it = expected_groups().find(name);
    EXPECT_EQ(tag, it == expected_groups().end() ? "MISC" : it->second) << name;
  }
  EXPECT_EQ(tags.size(), 9u);
}

TEST(Taxonomy, EveryGroupedKindExists) {
  for (const auto& [name, tag] : expected_groups()) {
    auto kind = parse_statement_kind(name);
    ASSERT_TRUE(kind.has_value()) << name;
    EXPECT_EQ(to_string(category_of(*kind)), tag);
  }
}

TEST(Taxonomy, ExcludedKindsAreMisc) {
  for (const char* name : {"block", "parameter", "EOF", "name", "operator", "literal",
                           "annotation", "argument_list", "specifier"}) {
    auto kind = parse_statement_kind(name);
    ASSERT_TRUE(kind.has_value()) << name;
    EXPECT_EQ(category_of(*kind), StatementCategory::kMisc) << name;
  }
}

TEST(Taxonomy, NamesRoundTrip) {
  for (StatementKind k : all_statement_kinds()) EXPECT_EQ(parse_statement_kind(to_string(k)), k);
  for (HeaderKind h : kHeaderKinds) EXPECT_EQ(parse_header_kind(to_string(h)), h);
  for (StatementCategory c : kContextCategories) EXPECT_EQ(parse_category(to_string(c)), c);
  EXPECT_EQ(parse_category("MISC"), StatementCategory::kMisc);
  EXPECT_FALSE(parse_statement_kind("goto").has_value());
}

TEST(Taxonomy, ContextIndexSkipsMisc) {
  for (std::size_t i = 0; i < kContextCategories.size(); ++i) {
    EXPECT_EQ(context_index(kContextCategories[i]), i);
  }
  EXPECT_FALSE(context_index(StatementCategory::kMisc).has_value());
}

}  // namespace
}  // namespace satd
