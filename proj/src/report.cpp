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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

#include "json_io.hpp"
#include "satd/errors.hpp"
#include "satd/text_util.hpp"

namespace satd {
namespace {

using json_io::Json;
using json_io::optional_number;

constexpr std::string_view kMetricsSchema = "satd-scope/metrics/1";
constexpr std::string_view kTestsSchema = "satd-scope/tests/1";
constexpr std::string_view kReportSchema = "satd-scope/report/1";

std::string_view category_label(StatementCategory c) {
  switch (c) {
    case StatementCategory::kDecl: return "DECLARATION (DECL)";
    case StatementCategory::kExpr: return "EXPRESSION (EXPR)";
    case StatementCategory::kDefn: return "DEFINITION (DEFN)";
    case StatementCategory::kBrnch: return "BRANCHING (BRNCH)";
    case StatementCategory::kCndtnl: return "CONDITIONAL (CNDTNL)";
    case StatementCategory::kLoops: return "LOOPS (LOOPS)";
    case StatementCategory::kExcptn: return "EXCEPTION (EXCPTN)";
    case StatementCategory::kDoc: return "DOCUMENTATION (DOC)";
    case StatementCategory::kMisc: return "MISCELLANEOUS (MISC)";
  }
  return "";
}

std::size_t bucket_index(SizeBucket b) { return static_cast<std::size_t>(b); }

std::string bucket_key(SizeBucket b) { return std::string(to_string(b)); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename ValueOf>
ShareTable share_table(const std::vector<const ProjectSummary*>& projects, std::string heading,
                       std::vector<std::string> keys, std::vector<std::string> labels,
                       ValueOf value_of) {
  ShareTable t;
  t.key_heading = std::move(heading);
  t.row_keys = std::move(keys);
  t.row_labels = std::move(labels);
  for (SizeBucket b : kSizeBuckets) {
    ShareColumn& col = t.columns[bucket_index(b)];
    std::vector<std::vector<std::optional<double>>> values(t.row_keys.size());
    for (const ProjectSummary* p : projects) {
      if (p->size.bucket != b) continue;
      ++col.projects;
      for (std::size_t r = 0; r < t.row_keys.size(); ++r) values[r].push_back(value_of(*p, r));
    }
    double sum = 0.0;
    for (std::size_t r = 0; r < t.row_keys.size(); ++r) {
      col.mean_density.push_back(aggregate(values[r]).mean);
      if (col.mean_density.back()) sum += *col.mean_density.back();
    }
    for (const auto& m : col.mean_density) {
      col.share_percent.push_back(m && sum > 0.0 ? std::optional(100.0 * *m / sum) : std::nullopt);
    }
  }
  return t;
}

Json normality_json(const std::optional<NormalityResult>& n) {
  if (!n) return nullptr;
  return Json{{"n", n->n},
              {"a_squared", n->a_squared},
              {"a_squared_adjusted", n->a_squared_adjusted},
              {"level", n->level},
              {"critical_value", n->critical_value},
              {"reject", n->reject}};
}

std::optional<NormalityResult> normality_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  NormalityResult n;
  n.n = j.at("n").get<std::size_t>();
  n.a_squared = j.at("a_squared").get<double>();
  n.a_squared_adjusted = j.at("a_squared_adjusted").get<double>();
  n.level = j.at("level").get<double>();
  n.critical_value = j.at("critical_value").get<double>();
  n.reject = j.at("reject").get<bool>();
  return n;
}

Json test_json(const TestResult& t) {
  Json j{{"name", t.entry.name},
         {"metric", to_string(t.entry.metric)},
         {"group_a", t.entry.group_a},
         {"group_b", t.entry.group_b},
         {"bucket", t.entry.bucket ? Json(bucket_key(*t.entry.bucket)) : Json("ALL")},
         {"n1", t.n1},
         {"n2", t.n2},
         {"skipped", t.skipped},
         {"skip_reason", t.skip_reason}};
  if (t.skipped) return j;
  j["u1"] = t.test.u1;
  j["u2"] = t.test.u2;
  j["u_min"] = std::min(t.test.u1, t.test.u2);
  j["p_value"] = t.test.p_value;
  j["method"] = to_string(t.test.method);
  j["r"] = t.effect.r;
  j["abs_r"] = std::fabs(t.effect.r);
  j["effect"] = to_string(t.effect.label);
  j["reject"] = t.reject;
  j["normality_a"] = normality_json(t.normality_a);
  j["normality_b"] = normality_json(t.normality_b);
  return j;
}

TestResult test_from(const Json& j) {
  TestResult t;
  t.entry.name = j.at("name").get<std::string>();
  auto metric = parse_plan_metric(j.at("metric").get<std::string>());
  if (!metric) throw std::invalid_argument("unknown metric");
  t.entry.metric = *metric;
  t.entry.group_a = j.at("group_a").get<std::string>();
  t.entry.group_b = j.at("group_b").get<std::string>();
  const std::string bucket = j.at("bucket").get<std::string>();
  if (bucket != "ALL") {
    t.entry.bucket = parse_size_bucket(bucket);
    if (!t.entry.bucket) throw std::invalid_argument("unknown bucket");
  }
  t.n1 = j.at("n1").get<std::size_t>();
  t.n2 = j.at("n2").get<std::size_t>();
  t.skipped = j.at("skipped").get<bool>();
  t.skip_reason = j.at("skip_reason").get<std::string>();
  if (t.skipped) return t;
  t.test.u1 = j.at("u1").get<double>();
  t.test.u2 = j.at("u2").get<double>();
  t.test.p_value = j.at("p_value").get<double>();
  t.test.method = j.at("method") == to_string(PValueMethod::kExact) ? PValueMethod::kExact
                                                                   : PValueMethod::kNormalApprox;
  t.test.n1 = t.n1;
  t.test.n2 = t.n2;
  t.effect.r = j.at("r").get<double>();
  t.effect.label = effect_label(t.effect.r);
  t.reject = j.at("reject").get<bool>();
  t.normality_a = normality_from(j.at("normality_a"));
  t.normality_b = normality_from(j.at("normality_b"));
  return t;
}

Json aggregate_json(const Aggregate& a) {
  return Json{{"n", a.n}, {"mean", optional_number(a.mean)}, {"median", optional_number(a.median)}};
}

Json share_json(const ShareTable& t) {
  Json projects = Json::object();
  for (SizeBucket b : kSizeBuckets) projects[bucket_key(b)] = t.columns[bucket_index(b)].projects;
  Json rows = Json::array();
  if (t.has_rows()) {
    for (std::size_t r = 0; r < t.row_keys.size(); ++r) {
      Json cols = Json::object();
      for (SizeBucket b : kSizeBuckets) {
        const ShareColumn& c = t.columns[bucket_index(b)];
        cols[bucket_key(b)] = Json{{"mean_density", optional_number(c.mean_density[r])},
                                   {"share_percent", optional_number(c.share_percent[r])}};
      }
      rows.push_back(Json{{"key", t.row_keys[r]}, {"label", t.row_labels[r]}, {"columns", cols}});
    }
  }
  return Json{{"projects", projects}, {"rows", rows}};
}

std::string optional_cell(const std::optional<double>& v, int decimals) {
  return v ? format_fixed(*v, decimals) : "n/a";
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += " --- |";
  return out + "\n";
}

void md_share(std::string& out, const std::string& title, const ShareTable& t) {
  out += "## " + title + "\n\n";
  out += "Share of the mean per-project SATD density, by project size (KLOC).\n\n";
  std::vector<std::string> head{t.key_heading};
  for (SizeBucket b : kSizeBuckets) head.emplace_back(range_label(b));
  out += md_row(head) + md_rule(head.size());
  if (t.has_rows()) {
    for (std::size_t r = 0; r < t.row_keys.size(); ++r) {
      std::vector<std::string> row{t.row_labels[r]};
      for (SizeBucket b : kSizeBuckets) {
        row.push_back(optional_cell(t.columns[bucket_index(b)].share_percent[r], 2));
      }
      out += md_row(row);
    }
  }
  out += "\n";
}

std::string opt_exact(const std::optional<double>& v) { return v ? format_exact(*v) : ""; }

std::string share_csv(const ShareTable& t) {
  std::vector<std::string> head{lower(t.key_heading)};
  for (SizeBucket b : kSizeBuckets) head.push_back(lower(to_string(b)) + "_share_percent");
  for (SizeBucket b : kSizeBuckets) head.push_back(lower(to_string(b)) + "_mean_density");
  std::string out = csv_line(head);
  if (!t.has_rows()) return out;
  for (std::size_t r = 0; r < t.row_keys.size(); ++r) {
    std::vector<std::string> row{t.row_keys[r]};
    for (SizeBucket b : kSizeBuckets) row.push_back(opt_exact(t.columns[bucket_index(b)].share_percent[r]));
    for (SizeBucket b : kSizeBuckets) row.push_back(opt_exact(t.columns[bucket_index(b)].mean_density[r]));
    out += csv_line(row);
  }
  return out;
}

std::string groups_label(const TestResult& t) { return t.entry.group_a + " vs " + t.entry.group_b; }

std::string bucket_label(const TestResult& t) {
  return t.entry.bucket ? std::string(range_label(*t.entry.bucket)) : "all";
}

}  // namespace

bool ShareTable::has_rows() const {
  return std::any_of(columns.begin(), columns.end(),
                     [](const ShareColumn& c) { return c.projects > 0; });
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "n/a";
  std::string out(buf, end);
  // Negative zero and values that round to zero print without a sign.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_p_value(double p) {
  if (p < kSignificanceLevel) return "<0.001";
  return format_fixed(p, 3);
}

std::string format_exact(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc() ? std::string(buf, end) : std::string();
}

ReportBundle build_report(const std::vector<ProjectSummary>& projects,
                          const std::vector<TestResult>& tests) {
  ReportBundle bundle;
  bundle.projects_scanned = projects.size();
  bundle.tests = tests;
  std::vector<const ProjectSummary*> analyzable;
  for (const auto& p : projects) {
    if (p.size.analyzable) analyzable.push_back(&p);
  }
  bundle.projects_analyzable = analyzable.size();

  for (SizeBucket b : kSizeBuckets) {
    LocalizationRow row;
    row.bucket = b;
    std::vector<std::optional<double>> header, nonheader;
    for (const ProjectSummary* p : analyzable) {
      if (p->size.bucket != b) continue;
      ++row.projects;
      header.push_back(p->metrics.header.value());
      nonheader.push_back(p->metrics.nonheader.value());
    }
    if (row.projects == 0) continue;
    row.header = aggregate(header);
    row.nonheader = aggregate(nonheader);
    for (const auto& t : tests) {
      if (!t.skipped && t.entry.metric == PlanMetric::kLocality && t.entry.bucket == b) {
        row.p_value = t.test.p_value;
        break;
      }
    }
    bundle.localization.push_back(row);
  }

  std::vector<std::string> header_keys, header_labels;
  for (HeaderKind k : kHeaderKinds) {
    header_keys.emplace_back(to_string(k));
    header_labels.emplace_back(to_string(k));
  }
  bundle.header_ns = share_table(analyzable, "Construct", header_keys, header_labels,
                                 [](const ProjectSummary& p, std::size_t r) {
                                   return p.metrics.header_succeeding[r].value();
                                 });
  std::vector<std::string> cat_keys, cat_labels;
  for (StatementCategory c : kContextCategories) {
    cat_keys.emplace_back(to_string(c));
    cat_labels.emplace_back(category_label(c));
  }
  bundle.nonheader_np = share_table(analyzable, "Category", cat_keys, cat_labels,
                                    [](const ProjectSummary& p, std::size_t r) {
                                      return p.metrics.preceding[r].value();
                                    });
  bundle.nonheader_ns = share_table(analyzable, "Category", cat_keys, cat_labels,
                                    [](const ProjectSummary& p, std::size_t r) {
                                      return p.metrics.succeeding[r].value();
                                    });

  for (SizeBucket b : kSizeBuckets) {
    PatternTable& t = bundle.patterns[bucket_index(b)];
    t.bucket = b;
    for (const ProjectSummary* p : analyzable) {
      if (p->size.bucket != b) continue;
      ++t.projects;
      t.total += p->metrics.pattern_total;
      for (std::size_t s = 0; s < 8; ++s) {
        for (std::size_t q = 0; q < 8; ++q) t.counts[s][q] += p->metrics.pattern[s][q];
      }
    }
    for (std::size_t s = 0; s < 8; ++s) {
      for (std::size_t q = 0; q < 8; ++q) {
        t.percent[s][q] =
            t.total ? 100.0 * static_cast<double>(t.counts[s][q]) / static_cast<double>(t.total) : 0.0;
      }
    }
  }
  return bundle;
}

std::string render_markdown(const ReportBundle& b) {
  std::string out = "# SATD context report\n\n";
  out += "Projects scanned: " + std::to_string(b.projects_scanned) +
         ". Projects with code: " + std::to_string(b.projects_analyzable) + ".\n\n";

  out += "## SATD localization\n\n";
  out += "Per-project share of SATD among header and non-header comments.\n\n";
  std::vector<std::string> head{"Project size (KLOC)", "# Projects", "Header mean", "Header median",
                                "Non-header mean",     "Non-header median", "p-value"};
  out += md_row(head) + md_rule(head.size());
  for (const auto& row : b.localization) {
    out += md_row({std::string(range_label(row.bucket)), std::to_string(row.projects),
                   optional_cell(row.header.mean, 3), optional_cell(row.header.median, 3),
                   optional_cell(row.nonheader.mean, 3), optional_cell(row.nonheader.median, 3),
                   row.p_value ? format_p_value(*row.p_value) : "n/a"});
  }
  out += "\n";

  md_share(out, "Header comments by succeeding construct (%)", b.header_ns);
  md_share(out, "Non-header comments by preceding statement (%)", b.nonheader_np);
  md_share(out, "Non-header comments by succeeding statement (%)", b.nonheader_ns);

  for (const PatternTable& t : b.patterns) {
    out += "## Non-header SATD patterns, " + std::string(range_label(t.bucket)) + " KLOC (%)\n\n";
    out += "Rows are the succeeding statement, columns the preceding one. Qualifying SATD "
           "comments: " + std::to_string(t.total) + ".\n\n";
    std::vector<std::string> phead{"Succeeding"};
    for (StatementCategory c : kContextCategories) phead.emplace_back(to_string(c));
    out += md_row(phead) + md_rule(phead.size());
    if (t.total > 0) {
      for (std::size_t s = 0; s < 8; ++s) {
        std::vector<std::string> row{std::string(to_string(kContextCategories[s]))};
        for (std::size_t q = 0; q < 8; ++q) row.push_back(format_fixed(t.percent[s][q], 2));
        out += md_row(row);
      }
    }
    out += "\n";
  }

  out += "## Hypothesis tests\n\n";
  out += "Two-sided Mann-Whitney U on per-project values at significance level 0.001. U is the "
         "smaller of U1 and U2.\n\n";
  std::vector<std::string> thead{"Comparison", "Metric", "Groups", "Project size (KLOC)", "n1", "n2",
                                 "U",          "p-value", "\\|r\\|", "Effect"};
  out += md_row(thead) + md_rule(thead.size());
  for (const auto& t : b.tests) {
    std::vector<std::string> row{t.entry.name, std::string(to_string(t.entry.metric)), groups_label(t),
                                 bucket_label(t), std::to_string(t.n1), std::to_string(t.n2)};
    if (t.skipped) {
      row.insert(row.end(), {"-", "-", "-", "skipped: " + t.skip_reason});
    } else {
      row.push_back(format_fixed(std::min(t.test.u1, t.test.u2), 1));
      row.push_back(format_p_value(t.test.p_value));
      row.push_back(format_fixed(std::fabs(t.effect.r), 3));
      row.emplace_back(to_string(t.effect.label));
    }
    out += md_row(row);
  }
  out += "\nEffect size |r| bands: negligible below 0.1, small below 0.24, medium (also called "
         "moderate) below 0.37, large from 0.37.\n";
  return out;
}

std::vector<std::pair<std::string, std::string>> render_csv(const ReportBundle& b) {
  std::vector<std::pair<std::string, std::string>> files;

  std::string loc = csv_line({"bucket", "range_kloc", "projects", "header_mean", "header_median",
                              "nonheader_mean", "nonheader_median", "p_value"});
  for (const auto& row : b.localization) {
    loc += csv_line({bucket_key(row.bucket), std::string(range_label(row.bucket)),
                     std::to_string(row.projects), opt_exact(row.header.mean),
                     opt_exact(row.header.median), opt_exact(row.nonheader.mean),
                     opt_exact(row.nonheader.median), opt_exact(row.p_value)});
  }
  files.emplace_back("localization.csv", std::move(loc));
  files.emplace_back("header_ns.csv", share_csv(b.header_ns));
  files.emplace_back("nonheader_np.csv", share_csv(b.nonheader_np));
  files.emplace_back("nonheader_ns.csv", share_csv(b.nonheader_ns));

  for (const PatternTable& t : b.patterns) {
    std::vector<std::string> head{"succeeding"};
    for (StatementCategory c : kContextCategories) head.emplace_back(to_string(c));
    std::string out = csv_line(head);
    if (t.total > 0) {
      for (std::size_t s = 0; s < 8; ++s) {
        std::vector<std::string> row{std::string(to_string(kContextCategories[s]))};
        for (std::size_t q = 0; q < 8; ++q) row.push_back(format_exact(t.percent[s][q]));
        out += csv_line(row);
      }
    }
    files.emplace_back("pattern_" + lower(to_string(t.bucket)) + ".csv", std::move(out));
  }

  std::string tests = csv_line({"name", "metric", "group_a", "group_b", "bucket", "n1", "n2",
                                "skipped", "skip_reason", "u1", "u2", "p_value", "method", "r",
                                "effect", "reject"});
  for (const auto& t : b.tests) {
    std::vector<std::string> row{t.entry.name,
                                 std::string(to_string(t.entry.metric)),
                                 t.entry.group_a,
                                 t.entry.group_b,
                                 t.entry.bucket ? bucket_key(*t.entry.bucket) : "ALL",
                                 std::to_string(t.n1),
                                 std::to_string(t.n2),
                                 t.skipped ? "true" : "false",
                                 t.skip_reason};
    if (t.skipped) {
      row.insert(row.end(), 7, "");
    } else {
      row.insert(row.end(), {format_exact(t.test.u1), format_exact(t.test.u2),
                             format_exact(t.test.p_value), std::string(to_string(t.test.method)),
                             format_exact(t.effect.r), std::string(to_string(t.effect.label)),
                             t.reject ? "true" : "false"});
    }
    tests += csv_line(row);
  }
  files.emplace_back("tests.csv", std::move(tests));
  return files;
}

std::string render_json(const ReportBundle& b) {
  Json loc = Json::array();
  for (const auto& row : b.localization) {
    loc.push_back(Json{{"bucket", bucket_key(row.bucket)},
                       {"range_kloc", range_label(row.bucket)},
                       {"projects", row.projects},
                       {"header", aggregate_json(row.header)},
                       {"nonheader", aggregate_json(row.nonheader)},
                       {"p_value", optional_number(row.p_value)}});
  }
  Json patterns = Json::array();
  for (const PatternTable& t : b.patterns) {
    Json rows = Json::array();
    for (std::size_t s = 0; s < 8; ++s) {
      Json counts = Json::object();
      Json percent = Json::object();
      for (std::size_t q = 0; q < 8; ++q) {
        const std::string key(to_string(kContextCategories[q]));
        counts[key] = t.counts[s][q];
        percent[key] = t.percent[s][q];
      }
      rows.push_back(Json{{"succeeding", to_string(kContextCategories[s])},
                          {"counts_by_preceding", counts},
                          {"percent_by_preceding", percent}});
    }
    patterns.push_back(Json{{"bucket", bucket_key(t.bucket)},
                            {"range_kloc", range_label(t.bucket)},
                            {"projects", t.projects},
                            {"total", t.total},
                            {"rows", t.total ? rows : Json::array()}});
  }
  Json tests = Json::array();
  for (const auto& t : b.tests) tests.push_back(test_json(t));
  Json doc{{"schema", kReportSchema},
           {"significance_level", kSignificanceLevel},
           {"projects_scanned", b.projects_scanned},
           {"projects_analyzable", b.projects_analyzable},
           {"localization", std::move(loc)},
           {"header_ns", share_json(b.header_ns)},
           {"nonheader_np", share_json(b.nonheader_np)},
           {"nonheader_ns", share_json(b.nonheader_ns)},
           {"patterns", std::move(patterns)},
           {"tests", std::move(tests)}};
  return doc.dump(2) + "\n";
}

std::string metrics_document(const std::vector<ProjectSummary>& projects) {
  Json list = Json::array();
  for (const auto& p : projects) list.push_back(json_io::to_json(p));
  Json doc{{"schema", kMetricsSchema}, {"projects", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::vector<ProjectSummary> parse_metrics_document(std::string_view text) {
  try {
    Json doc = Json::parse(text.begin(), text.end());
    if (doc.at("schema") != kMetricsSchema) throw std::invalid_argument("unknown schema");
    std::vector<ProjectSummary> out;
    for (const auto& p : doc.at("projects")) out.push_back(json_io::summary_from_json(p));
    return out;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("metrics document: ") + e.what());
  }
}

std::string tests_document(const std::vector<TestResult>& results) {
  Json list = Json::array();
  for (const auto& t : results) list.push_back(test_json(t));
  Json doc{{"schema", kTestsSchema},
           {"significance_level", kSignificanceLevel},
           {"results", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::vector<TestResult> parse_tests_document(std::string_view text) {
  try {
    Json doc = Json::parse(text.begin(), text.end());
    if (doc.at("schema") != kTestsSchema) throw std::invalid_argument("unknown schema");
    std::vector<TestResult> out;
    for (const auto& t : doc.at("results")) out.push_back(test_from(t));
    return out;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("tests document: ") + e.what());
  }
}

}  // namespace satd
