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

// Normality screening, two-sample rank test, effect size, and the planned
// comparison suite.

#ifndef SATD_STATS_HPP_
#define SATD_STATS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satd/metrics.hpp"

namespace satd {

inline constexpr double kSignificanceLevel = 0.001;

struct NormalityResult {
  std::size_t n = 0;
  double a_squared = 0.0;           // raw statistic
  double a_squared_adjusted = 0.0;  // A² (1 + 0.75/n + 2.25/n²)
  double level = 0.05;
  double critical_value = 0.0;
  bool reject = false;  // adjusted statistic above the critical value

  friend bool operator==(const NormalityResult&, const NormalityResult&) = default;
};

// Anderson-Darling against a normal with mean and standard deviation (n - 1
// denominator) estimated from the sample. `level` is one of 0.15, 0.10,
// 0.05, 0.025, 0.01; other levels throw UsageError. Throws
// DegenerateSampleError for n < 8, zero variance or non-finite values.
NormalityResult anderson_darling(const std::vector<double>& sample, double level = 0.05);

// Critical value of the adjusted statistic at `level`; none if not tabled.
std::optional<double> anderson_darling_critical_value(double level);

enum class PValueMethod { kExact, kNormalApprox };

std::string_view to_string(PValueMethod method);

struct MannWhitneyResult {
  double u1 = 0.0;  // #(a > b) + ties / 2
  double u2 = 0.0;  // n1 n2 - u1
  double p_value = 1.0;
  PValueMethod method = PValueMethod::kExact;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

// Two-sided test. Exact null distribution when both groups have at most 10
// values and there are no ties; otherwise the normal approximation with tie
// correction and continuity correction. Throws UsageError for an empty group
// and DegenerateSampleError for non-finite values.
MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

// Exact two-sided p for U1 = u1 (a multiple of 0.5 is floored to the nearest
// attainable count) without ties.
double mann_whitney_exact_p(double u1, std::size_t n1, std::size_t n2);

enum class EffectLabel { kNegligible, kSmall, kMedium, kLarge };

std::string_view to_string(EffectLabel label);

// |r| < 0.1 negligible, < 0.24 small, < 0.37 medium, otherwise large.
EffectLabel effect_label(double r);

struct RankBiserial {
  double r = 0.0;  // +1 when every a exceeds every b
  EffectLabel label = EffectLabel::kNegligible;
};

// Throws UsageError for empty groups or U1 outside [0, n1 n2].
RankBiserial rank_biserial(double u1, std::size_t n1, std::size_t n2);

// ---- planned comparisons ----

enum class PlanMetric { kLocality, kHeaderSucceeding, kPreceding, kSucceeding };

std::string_view to_string(PlanMetric metric);
std::optional<PlanMetric> parse_plan_metric(std::string_view name);

struct PlanEntry {
  std::string name;
  PlanMetric metric = PlanMetric::kLocality;
  std::string group_a;  // HEADER / NON_HEADER, a HeaderKind, or a category
  std::string group_b;
  std::optional<SizeBucket> bucket;  // none: every project

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

// Lines of `name, metric, group_a, group_b, bucket`; '#' starts a comment.
// bucket is SMALL, MEDIUM, LARGE or ALL. Throws ConfigError with the line
// number on any malformed or unknown entry.
std::vector<PlanEntry> parse_plan(std::string_view content);
std::vector<PlanEntry> load_plan(const std::filesystem::path& file);

struct TestResult {
  PlanEntry entry;
  std::size_t n1 = 0;  // defined values in group a
  std::size_t n2 = 0;
  bool skipped = false;
  std::string skip_reason;
  // Valid only when not skipped.
  MannWhitneyResult test;
  RankBiserial effect;
  bool reject = false;  // p < kSignificanceLevel
  std::optional<NormalityResult> normality_a;
  std::optional<NormalityResult> normality_b;
};

// Per-project value of a plan metric for one group; none when undefined.
std::optional<double> group_value(const ProjectSummary& project, PlanMetric metric,
                                  const std::string& group);

std::vector<TestResult> hypothesis_suite(const std::vector<ProjectSummary>& projects,
                                         const std::vector<PlanEntry>& plan);

}  // namespace satd

#endif  // SATD_STATS_HPP_
