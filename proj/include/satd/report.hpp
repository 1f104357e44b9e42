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

// Result tables built from project summaries and test results, and their
// Markdown, CSV and JSON renderings. Rendering is pure: the same inputs give
// the same bytes.

#ifndef SATD_REPORT_HPP_
#define SATD_REPORT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satd/metrics.hpp"
#include "satd/stats.hpp"

namespace satd {

struct LocalizationRow {
  SizeBucket bucket = SizeBucket::kSmall;
  std::size_t projects = 0;  // analyzable projects in the bucket
  Aggregate header;          // per-project SATD share of header comments
  Aggregate nonheader;
  std::optional<double> p_value;  // from the first locality test on this bucket
};

// Per bucket, the mean per-project density of each row key and each mean's
// share of the column total in percent. Shares sum to 100 when defined.
struct ShareColumn {
  std::size_t projects = 0;
  std::vector<std::optional<double>> mean_density;
  std::vector<std::optional<double>> share_percent;
};

struct ShareTable {
  std::string key_heading;               // e.g. "Construct"
  std::vector<std::string> row_keys;     // e.g. "CLASS", "DECL"
  std::vector<std::string> row_labels;   // display names
  std::array<ShareColumn, 3> columns;    // SMALL, MEDIUM, LARGE
  bool has_rows() const;
};

// SATD pattern counts pooled over a bucket's projects; percent[s][p] is the
// share of qualifying SATD comments with succeeding s and preceding p.
struct PatternTable {
  SizeBucket bucket = SizeBucket::kSmall;
  std::size_t projects = 0;
  std::size_t total = 0;
  std::array<std::array<std::size_t, 8>, 8> counts{};
  std::array<std::array<double, 8>, 8> percent{};
};

struct ReportBundle {
  std::size_t projects_scanned = 0;
  std::size_t projects_analyzable = 0;
  std::vector<LocalizationRow> localization;  // buckets with projects only
  ShareTable header_ns;
  ShareTable nonheader_np;
  ShareTable nonheader_ns;
  std::array<PatternTable, 3> patterns;
  std::vector<TestResult> tests;
};

ReportBundle build_report(const std::vector<ProjectSummary>& projects,
                          const std::vector<TestResult>& tests);

std::string render_markdown(const ReportBundle& bundle);
// (file name, contents) pairs in a fixed order.
std::vector<std::pair<std::string, std::string>> render_csv(const ReportBundle& bundle);
// Every number behind a rendered Markdown cell, unrounded.
std::string render_json(const ReportBundle& bundle);

// Display formatting shared by all renderings.
std::string format_fixed(double value, int decimals);
std::string format_p_value(double p);  // "<0.001" below the significance level
// Shortest text that reads back as the same double.
std::string format_exact(double value);

// metrics.json and tests.json. The parsers throw ConfigError.
std::string metrics_document(const std::vector<ProjectSummary>& projects);
std::vector<ProjectSummary> parse_metrics_document(std::string_view text);
std::string tests_document(const std::vector<TestResult>& results);
std::vector<TestResult> parse_tests_document(std::string_view text);

}  // namespace satd

#endif  // SATD_REPORT_HPP_
