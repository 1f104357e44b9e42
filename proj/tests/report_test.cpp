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

#include "satd/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "satd/errors.hpp"

namespace satd {
namespace {

using Json = nlohmann::json;

Proportion prop(std::size_t satd, std::size_t total) { return Proportion{satd, total}; }

ProjectSummary project(const std::string& name, std::size_t code_lines, Proportion header,
                       Proportion nonheader) {
  ProjectSummary p;
  p.project = name;
  p.size = size_project(std::vector<std::size_t>{code_lines});
  p.metrics.header = header;
  p.metrics.nonheader = nonheader;
  return p;
}

ProjectSummary random_project(std::mt19937& rng, int id) {
  std::uniform_int_distribution<std::size_t> total(0, 30);
  auto random_prop = [&] {
    std::size_t t = total(rng);
    return prop(t ? rng() % (t + 1) : 0, t);
  };
  const std::size_t sizes[] = {5000, 400000, 3000000};
  ProjectSummary p = project("p" + std::to_string(id), sizes[rng() % 3], random_prop(), random_prop());
  for (auto& x : p.metrics.preceding) x = random_prop();
  for (auto& x : p.metrics.succeeding) x = random_prop();
  for (auto& x : p.metrics.header_succeeding) x = random_prop();
  for (auto& row : p.metrics.pattern) {
    for (auto& c : row) {
      c = rng() % 4 == 0 ? rng() % 20 : 0;
      p.metrics.pattern_total += c;
    }
  }
  return p;
}

TEST(Formatting, FixedAndPValues) {
  EXPECT_EQ(format_fixed(0.0254, 3), "0.025");
  EXPECT_EQ(format_fixed(10.015625, 2), "10.02");
  EXPECT_EQ(format_fixed(-0.0001, 2), "0.00");
  EXPECT_EQ(format_fixed(4852343.0, 1), "4852343.0");
  EXPECT_EQ(format_p_value(0.0009999), "<0.001");
  EXPECT_EQ(format_p_value(0.001), "0.001");
  EXPECT_EQ(format_p_value(0.19047619), "0.190");
  EXPECT_EQ(format_exact(0.1), "0.1");
  EXPECT_EQ(std::stod(format_exact(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(BuildReport, LocalizationAggregatesPerBucket) {
  std::vector<ProjectSummary> projects = {
      project("a", 1000, prop(1, 4), prop(3, 6)),    // 0.25, 0.5
      project("b", 2000, prop(0, 5), prop(1, 10)),   // 0.0, 0.1
      project("c", 3000, prop(0, 0), prop(2, 8)),    // undefined, 0.25
      project("d", 500000, prop(1, 10), prop(1, 2)),
      project("e", 0, prop(0, 0), prop(0, 0)),       // no code: skipped
  };
  ReportBundle b = build_report(projects, {});
  EXPECT_EQ(b.projects_scanned, 5u);
  EXPECT_EQ(b.projects_analyzable, 4u);
  ASSERT_EQ(b.localization.size(), 2u);
  const LocalizationRow& small = b.localization[0];
  EXPECT_EQ(small.bucket, SizeBucket::kSmall);
  EXPECT_EQ(small.projects, 3u);
  EXPECT_EQ(small.header.n, 2u);
  EXPECT_DOUBLE_EQ(*small.header.mean, 0.125);
  EXPECT_DOUBLE_EQ(*small.header.median, 0.125);
  EXPECT_DOUBLE_EQ(*small.nonheader.mean, (0.5 + 0.1 + 0.25) / 3);
  EXPECT_DOUBLE_EQ(*small.nonheader.median, 0.25);
  EXPECT_FALSE(small.p_value);
  EXPECT_EQ(b.localization[1].bucket, SizeBucket::kMedium);
}

TEST(BuildReport, LocalizationPValueComesFromMatchingTest) {
  TestResult t;
  t.entry = {"loc", PlanMetric::kLocality, "NON_HEADER", "HEADER", SizeBucket::kSmall};
  t.test.p_value = 0.0123;
  ReportBundle b = build_report({project("a", 10, prop(0, 1), prop(1, 1))}, {t});
  ASSERT_EQ(b.localization.size(), 1u);
  EXPECT_EQ(b.localization[0].p_value, 0.0123);
}

// Share of mean density: hand-computed on two projects.
TEST(BuildReport, ShareTableOracle) {
  ProjectSummary a = project("a", 10, {}, {});
  ProjectSummary c = project("c", 10, {}, {});
  a.metrics.header_succeeding[0] = prop(1, 2);  // CLASS 0.5
  c.metrics.header_succeeding[0] = prop(0, 1);  // CLASS 0.0 -> mean 0.25
  a.metrics.header_succeeding[4] = prop(3, 4);  // FUNCTION 0.75, c undefined -> mean 0.75
  ReportBundle b = build_report({a, c}, {});
  const ShareColumn& col = b.header_ns.columns[0];
  EXPECT_EQ(col.projects, 2u);
  EXPECT_DOUBLE_EQ(*col.mean_density[0], 0.25);
  EXPECT_DOUBLE_EQ(*col.mean_density[4], 0.75);
  EXPECT_DOUBLE_EQ(*col.share_percent[0], 25.0);
  EXPECT_DOUBLE_EQ(*col.share_percent[4], 75.0);
  EXPECT_FALSE(col.share_percent[1]);
  EXPECT_EQ(b.header_ns.columns[1].projects, 0u);
  EXPECT_TRUE(b.header_ns.has_rows());
}

TEST(BuildReport, PatternTablesPoolCounts) {
  ProjectSummary a = project("a", 10, {}, {});
  ProjectSummary c = project("c", 10, {}, {});
  a.metrics.pattern[2][3] = 3;  // succeeding DEFN, preceding BRNCH
  a.metrics.pattern_total = 3;
  c.metrics.pattern[0][0] = 1;
  c.metrics.pattern_total = 1;
  ReportBundle b = build_report({a, c}, {});
  const PatternTable& t = b.patterns[0];
  EXPECT_EQ(t.total, 4u);
  EXPECT_DOUBLE_EQ(t.percent[2][3], 75.0);
  EXPECT_DOUBLE_EQ(t.percent[0][0], 25.0);
  EXPECT_EQ(b.patterns[1].total, 0u);
}

// Invariants over random inputs: percentages within [0, 100], defined shares
// summing to 100, pattern grids summing to 100 before and after rounding.
TEST(BuildReport, PercentageInvariantsProperty) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ProjectSummary> projects;
    const int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) projects.push_back(random_project(rng, i));
    ReportBundle b = build_report(projects, {});
    for (const ShareTable* t : {&b.header_ns, &b.nonheader_np, &b.nonheader_ns}) {
      for (const ShareColumn& col : t->columns) {
        double sum = 0.0;
        bool any = false;
        for (const auto& s : col.share_percent) {
          if (!s) continue;
          any = true;
          EXPECT_GE(*s, 0.0);
          EXPECT_LE(*s, 100.0);
          sum += *s;
        }
        if (any) EXPECT_NEAR(sum, 100.0, 1e-9);
      }
    }
    for (const PatternTable& t : b.patterns) {
      if (t.total == 0) continue;
      double sum = 0.0, rounded = 0.0;
      for (const auto& row : t.percent) {
        for (double v : row) {
          EXPECT_GE(v, 0.0);
          EXPECT_LE(v, 100.0);
          sum += v;
          rounded += std::stod(format_fixed(v, 2));
        }
      }
      EXPECT_NEAR(sum, 100.0, 1e-9);
      EXPECT_NEAR(rounded, 100.0, 0.1);
    }
  }
}

TEST(Render, EmptyMetricsGiveHeadersOnlyCsv) {
  ReportBundle b = build_report({}, {});
  for (const auto& [name, text] : render_csv(b)) {
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1) << name;
  }
  EXPECT_EQ(render_csv(b).size(), 8u);
  EXPECT_NE(render_markdown(b).find("## SATD localization"), std::string::npos);
}

TEST(Render, PureAndDeterministic) {
  std::mt19937 rng(3);
  std::vector<ProjectSummary> projects;
  for (int i = 0; i < 9; ++i) projects.push_back(random_project(rng, i));
  ReportBundle b1 = build_report(projects, {});
  ReportBundle b2 = build_report(projects, {});
  EXPECT_EQ(render_markdown(b1), render_markdown(b2));
  EXPECT_EQ(render_json(b1), render_json(b2));
  EXPECT_EQ(render_csv(b1), render_csv(b2));
}

void collect_numbers(const Json& j, std::set<std::string>& out) {
  if (j.is_number()) {
    const double v = j.get<double>();
    for (int d = 0; d <= 3; ++d) out.insert(format_fixed(v, d));
    if (j.is_number_integer()) out.insert(std::to_string(j.get<long long>()));
    if (v < kSignificanceLevel) out.insert("<0.001");
  }
  for (const auto& child : j) {
    if (j.is_structured()) collect_numbers(child, out);
  }
}

// Every number in a Markdown table cell is the rounding of a number stored
// in report.json.
TEST(Render, JsonHoldsEveryMarkdownNumber) {
  std::mt19937 rng(11);
  std::vector<ProjectSummary> projects;
  for (int i = 0; i < 15; ++i) projects.push_back(random_project(rng, i));
  TestResult t;
  t.entry = {"loc", PlanMetric::kLocality, "NON_HEADER", "HEADER", SizeBucket::kSmall};
  t.n1 = 5;
  t.n2 = 4;
  t.test = {3.5, 16.5, 0.0625, PValueMethod::kNormalApprox, 5, 4};
  t.effect = rank_biserial(3.5, 5, 4);
  ReportBundle b = build_report(projects, {t});
  std::set<std::string> numbers;
  collect_numbers(Json::parse(render_json(b)), numbers);

  std::istringstream md(render_markdown(b));
  std::string line;
  const std::regex number(R"(^(<0\.001|-?[0-9]+(\.[0-9]+)?)$)");
  std::size_t checked = 0;
  while (std::getline(md, line)) {
    if (line.rfind("| ", 0) != 0 || line.find("---") != std::string::npos) continue;
    std::size_t pos = 1;
    while (pos < line.size()) {
      std::size_t next = line.find(" |", pos);
      if (next == std::string::npos) break;
      std::string cell = line.substr(pos + 1, next - pos - 1);
      pos = next + 2;
      if (cell == "1-100" || cell == "100-1000") continue;  // range labels
      if (!std::regex_match(cell, number)) continue;
      ++checked;
      EXPECT_TRUE(numbers.count(cell)) << "cell " << cell << " in: " << line;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Documents, MetricsRoundTrip) {
  std::mt19937 rng(5);
  std::vector<ProjectSummary> projects;
  for (int i = 0; i < 4; ++i) projects.push_back(random_project(rng, i));
  EXPECT_EQ(parse_metrics_document(metrics_document(projects)), projects);
  EXPECT_THROW(parse_metrics_document("{}"), ConfigError);
  EXPECT_THROW(parse_metrics_document("not json"), ConfigError);
}

TEST(Documents, TestsRoundTrip) {
  TestResult ran;
  ran.entry = {"x", PlanMetric::kPreceding, "EXCPTN", "DEFN", std::nullopt};
  ran.n1 = 9;
  ran.n2 = 10;
  ran.test = {12.5, 77.5, 0.00123456789, PValueMethod::kNormalApprox, 9, 10};
  ran.effect = rank_biserial(12.5, 9, 10);
  ran.reject = false;
  ran.normality_a = NormalityResult{9, 0.3, 0.33, 0.05, 0.787, false};
  TestResult skipped;
  skipped.entry = {"y", PlanMetric::kLocality, "NON_HEADER", "HEADER", SizeBucket::kLarge};
  skipped.skipped = true;
  skipped.skip_reason = "fewer than 2 values in a group";
  auto back = parse_tests_document(tests_document({ran, skipped}));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].entry, ran.entry);
  EXPECT_EQ(back[0].test.u1, 12.5);
  EXPECT_EQ(back[0].test.p_value, 0.00123456789);
  EXPECT_EQ(back[0].effect.r, ran.effect.r);
  EXPECT_EQ(back[0].effect.label, ran.effect.label);
  EXPECT_EQ(back[0].normality_a, ran.normality_a);
  EXPECT_FALSE(back[0].normality_b);
  EXPECT_TRUE(back[1].skipped);
  EXPECT_EQ(back[1].skip_reason, skipped.skip_reason);
}

}  // namespace
}  // namespace satd
