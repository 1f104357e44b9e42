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

#include "satd/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <string>

#include "satd/errors.hpp"

namespace satd {
namespace {

CommentContextRecord nh(std::optional<StatementKind> before, std::optional<StatementKind> after,
                        bool satd) {
  CommentContextRecord r;
  r.project = "p";
  r.locality = Locality::kNonHeader;
  if (before) r.preceding = StatementContext(*before);
  if (after) r.succeeding = StatementContext(*after);
  r.label = satd ? SatdLabel::rule("todo") : SatdLabel::not_satd();
  return r;
}

CommentContextRecord hd(HeaderKind kind, bool satd) {
  CommentContextRecord r;
  r.project = "p";
  r.locality = Locality::kHeader;
  r.header_kind = kind;
  r.succeeding = StatementContext(StatementKind::kClass);
  r.label = satd ? SatdLabel::external(SatdKind::kHtfNoisy) : SatdLabel::not_satd();
  return r;
}

TEST(NLocality, Examples) {
  std::vector<CommentContextRecord> rs = {hd(HeaderKind::kClass, true), hd(HeaderKind::kClass, false),
                                          hd(HeaderKind::kFunction, false),
                                          hd(HeaderKind::kFile, false)};
  EXPECT_DOUBLE_EQ(*n_locality(rs, Locality::kHeader), 0.25);
  EXPECT_FALSE(n_locality(rs, Locality::kNonHeader).has_value());
  for (int i = 0; i < 7; ++i) rs.push_back(nh(StatementKind::kIf, StatementKind::kReturn, i < 2));
  EXPECT_DOUBLE_EQ(*n_locality(rs, Locality::kNonHeader), 2.0 / 7.0);
}

TEST(NContext, Examples) {
  std::vector<CommentContextRecord> rs = {
      nh(StatementKind::kCall, StatementKind::kIf, true),
      nh(StatementKind::kCall, StatementKind::kSwitch, false),
      nh(StatementKind::kCall, StatementKind::kElse, false),
      nh(StatementKind::kCall, StatementKind::kBlock, true),
      nh(std::nullopt, StatementKind::kReturn, false),
  };
  EXPECT_DOUBLE_EQ(*n_context(rs, ContextDirection::kSucceeding, StatementCategory::kCndtnl),
                   1.0 / 3.0);
  EXPECT_FALSE(n_context(rs, ContextDirection::kPreceding, StatementCategory::kLoops));
  EXPECT_DOUBLE_EQ(*n_context(rs, ContextDirection::kPreceding, StatementCategory::kExpr), 0.5);
  // Excluded bucket: MISC or no neighbour.
  EXPECT_EQ(context_counts(rs, ContextDirection::kSucceeding, StatementCategory::kMisc),
            (Proportion{1, 1}));
  EXPECT_EQ(context_counts(rs, ContextDirection::kPreceding, StatementCategory::kMisc),
            (Proportion{0, 1}));
}

TEST(NContext, HeaderKinds) {
  std::vector<CommentContextRecord> hs = {hd(HeaderKind::kClass, true), hd(HeaderKind::kClass, false),
                                          hd(HeaderKind::kEnum, true)};
  EXPECT_DOUBLE_EQ(*n_context(hs, ContextDirection::kSucceeding, HeaderKind::kClass), 0.5);
  EXPECT_FALSE(n_context(hs, ContextDirection::kSucceeding, HeaderKind::kInterface));
  EXPECT_THROW(n_context(hs, ContextDirection::kPreceding, HeaderKind::kClass), UsageError);
  hs.push_back(nh(StatementKind::kIf, StatementKind::kIf, true));
  EXPECT_THROW(n_context(hs, ContextDirection::kSucceeding, HeaderKind::kClass), UsageError);
  // Category keys skip header records.
  EXPECT_EQ(context_counts(hs, ContextDirection::kSucceeding, StatementCategory::kDefn).total, 0u);
}

TEST(NPattern, Examples) {
  std::vector<CommentContextRecord> rs;
  for (int i = 0; i < 3; ++i) rs.push_back(nh(StatementKind::kBreak, StatementKind::kFunction, true));
  EXPECT_DOUBLE_EQ(*n_pattern(rs, StatementCategory::kBrnch, StatementCategory::kDefn), 1.0);
  EXPECT_DOUBLE_EQ(*n_pattern(rs, StatementCategory::kDefn, StatementCategory::kBrnch), 0.0);
  rs.push_back(nh(StatementKind::kDeclStmt, StatementKind::kDeclStmt, true));
  rs.push_back(nh(StatementKind::kDeclStmt, StatementKind::kBlock, true));   // not qualifying
  rs.push_back(nh(StatementKind::kDeclStmt, StatementKind::kDeclStmt, false));  // not SATD
  EXPECT_DOUBLE_EQ(*n_pattern(rs, StatementCategory::kDecl, StatementCategory::kDecl), 0.25);
  EXPECT_FALSE(n_pattern({}, StatementCategory::kDecl, StatementCategory::kDecl));
}

// Independent oracle: count by category names.
std::map<std::string, std::pair<int, int>> oracle_succeeding(
    const std::vector<CommentContextRecord>& rs) {
  std::map<std::string, std::pair<int, int>> m;
  for (const auto& r : rs) {
    if (r.is_header()) continue;
    std::string key = r.succeeding ? std::string(to_string(r.succeeding->category)) : "MISC";
    m[key].first += r.label.is_satd();
    m[key].second += 1;
  }
  return m;
}

std::vector<CommentContextRecord> random_records(std::mt19937& rng, int n) {
  const auto& kinds = all_statement_kinds();
  std::vector<CommentContextRecord> rs;
  for (int i = 0; i < n; ++i) {
    if (rng() % 4 == 0) {
      rs.push_back(hd(kHeaderKinds[rng() % 6], rng() % 3 == 0));
      continue;
    }
    std::optional<StatementKind> p, s;
    if (rng() % 8) p = kinds[rng() % kinds.size()];
    if (rng() % 8) s = kinds[rng() % kinds.size()];
    rs.push_back(nh(p, s, rng() % 3 == 0));
  }
  return rs;
}

TEST(MetricsProperty, MatchesCountingOracle) {
  std::mt19937 rng(21);
  for (int round = 0; round < 50; ++round) {
    auto rs = random_records(rng, 80);
    auto oracle = oracle_succeeding(rs);
    auto m = compute_metrics(rs);
    for (StatementCategory c : kContextCategories) {
      auto [satd, total] = oracle[std::string(to_string(c))];
      auto got = m.succeeding[*context_index(c)];
      EXPECT_EQ(got.satd, static_cast<std::size_t>(satd));
      EXPECT_EQ(got.total, static_cast<std::size_t>(total));
      EXPECT_EQ(got, context_counts(rs, ContextDirection::kSucceeding, c));
    }
    EXPECT_EQ(m.succeeding_excluded.total, static_cast<std::size_t>(oracle["MISC"].second));
  }
}

TEST(MetricsProperty, ScaleInvariance) {
  std::mt19937 rng(22);
  for (int round = 0; round < 30; ++round) {
    auto rs = random_records(rng, 40);
    auto doubled = rs;
    doubled.insert(doubled.end(), rs.begin(), rs.end());
    auto a = compute_metrics(rs);
    auto b = compute_metrics(doubled);
    EXPECT_EQ(a.header.value(), b.header.value());
    EXPECT_EQ(a.nonheader.value(), b.nonheader.value());
    for (std::size_t i = 0; i < 8; ++i) {
      EXPECT_EQ(a.preceding[i].value(), b.preceding[i].value());
      EXPECT_EQ(a.succeeding[i].value(), b.succeeding[i].value());
    }
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_EQ(a.header_succeeding[i].value(), b.header_succeeding[i].value());
    }
    for (StatementCategory p : kContextCategories) {
      for (StatementCategory s : kContextCategories) {
        EXPECT_EQ(a.n_pattern(p, s), b.n_pattern(p, s));
      }
    }
  }
}

TEST(MetricsProperty, ConservationAndNormalization) {
  std::mt19937 rng(23);
  for (int round = 0; round < 50; ++round) {
    auto rs = random_records(rng, 60);
    auto m = compute_metrics(rs);
    std::size_t satd = m.succeeding_excluded.satd;
    for (const auto& p : m.succeeding) satd += p.satd;
    EXPECT_EQ(satd, m.nonheader.satd);
    std::size_t pre = m.preceding_excluded.satd;
    for (const auto& p : m.preceding) pre += p.satd;
    EXPECT_EQ(pre, m.nonheader.satd);
    if (m.pattern_total > 0) {
      double sum = 0;
      for (StatementCategory p : kContextCategories) {
        for (StatementCategory s : kContextCategories) sum += *m.n_pattern(p, s);
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
    for (const auto& p : m.succeeding) {
      if (auto v = p.value()) {
        EXPECT_GE(*v, 0.0);
        EXPECT_LE(*v, 1.0);
      }
    }
  }
}

TEST(MetricsProperty, RelabelingToSatdNeverLowersLocality) {
  std::mt19937 rng(24);
  for (int round = 0; round < 50; ++round) {
    auto rs = random_records(rng, 30);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].label.is_satd()) continue;
      auto changed = rs;
      changed[i].label = SatdLabel::rule("todo");
      const Locality loc = rs[i].locality;
      EXPECT_GE(*n_locality(changed, loc), *n_locality(rs, loc));
    }
  }
}

TEST(SizeProject, Buckets) {
  auto s = size_project(std::vector<std::size_t>{50'000});
  EXPECT_DOUBLE_EQ(s.kloc, 50.0);
  EXPECT_EQ(s.bucket, SizeBucket::kSmall);
  EXPECT_EQ(size_project(std::vector<std::size_t>{100'000}).bucket, SizeBucket::kSmall);
  EXPECT_EQ(size_project(std::vector<std::size_t>{100'001}).bucket, SizeBucket::kMedium);
  EXPECT_EQ(size_project(std::vector<std::size_t>{1'000'000}).bucket, SizeBucket::kMedium);
  EXPECT_EQ(size_project(std::vector<std::size_t>{999'999, 2}).bucket, SizeBucket::kLarge);
  EXPECT_EQ(size_project(std::vector<std::size_t>{10}).bucket, SizeBucket::kSmall);
  EXPECT_FALSE(size_project(std::vector<std::size_t>{0, 0}).analyzable);
  EXPECT_FALSE(size_project(std::vector<std::size_t>{}).analyzable);
}

std::string lines_of(int code, int other) {
  std::string s;
  for (int i = 0; i < other; ++i) s += i % 2 ? "\n" : "// note\n";
  for (int i = 0; i < code; ++i) s += "int f" + std::to_string(i) + ";\n";
  return s;
}

TEST(SizeProject, MixedFixture) {
  // 10, 20 and 30 physical lines; 12 of them blank or comment-only.
  std::vector<SourceFile> files = {SourceFile::from_text("A.java", lines_of(6, 4)),
                                   SourceFile::from_text("B.java", lines_of(16, 4)),
                                   SourceFile::from_text("C.java", lines_of(26, 4))};
  std::size_t physical = 0;
  for (const auto& f : files) physical += f.line_count();
  ASSERT_EQ(physical, 60u);
  auto s = size_project(files);
  EXPECT_EQ(s.code_lines, 48u);
  EXPECT_DOUBLE_EQ(s.kloc, 0.048);
  EXPECT_EQ(s.bucket, SizeBucket::kSmall);
  EXPECT_TRUE(s.analyzable);
}

TEST(Aggregate, SkipsUndefined) {
  auto a = aggregate({0.5, std::nullopt, 0.1, 0.3});
  EXPECT_EQ(a.n, 3u);
  EXPECT_NEAR(*a.mean, 0.3, 1e-12);
  EXPECT_DOUBLE_EQ(*a.median, 0.3);
  EXPECT_DOUBLE_EQ(*aggregate({1.0, 2.0}).median, 1.5);
  EXPECT_FALSE(aggregate({std::nullopt}).mean);
}

}  // namespace
}  // namespace satd
