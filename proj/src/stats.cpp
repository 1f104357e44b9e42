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

#include "satd/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include "satd/errors.hpp"

namespace satd {
namespace {

struct CriticalValue {
  double level;
  double value;
};

// Adjusted A² critical values for a normal with both parameters estimated.
constexpr std::array<CriticalValue, 5> kAdCritical = {{
    {0.15, 0.576},
    {0.10, 0.656},
    {0.05, 0.787},
    {0.025, 0.918},
    {0.01, 1.092},
}};

void require_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw DegenerateSampleError("sample contains a non-finite value");
  }
}

// log of the standard normal CDF, accurate in both tails.
double log_phi(double z) { return std::log(0.5 * std::erfc(-z / std::sqrt(2.0))); }

// counts[k]: arrangements of n1 + n2 distinct values with U1 = k.
std::vector<double> u_distribution(std::size_t n1, std::size_t n2) {
  // f[m][n] holds the distribution for group sizes (m, n).
  std::vector<std::vector<std::vector<double>>> f(
      n1 + 1, std::vector<std::vector<double>>(n2 + 1));
  for (std::size_t m = 0; m <= n1; ++m) {
    for (std::size_t n = 0; n <= n2; ++n) {
      auto& cur = f[m][n];
      cur.assign(m * n + 1, 0.0);
      if (m == 0 || n == 0) {
        cur[0] = 1.0;
        continue;
      }
      // The largest value is in group a (adds n to U1) or in group b.
      const auto& with_a = f[m - 1][n];
      const auto& with_b = f[m][n - 1];
      for (std::size_t k = 0; k < with_a.size(); ++k) cur[k + n] += with_a[k];
      for (std::size_t k = 0; k < with_b.size(); ++k) cur[k] += with_b[k];
    }
  }
  return f[n1][n2];
}

struct Ranking {
  double rank_sum_a = 0.0;
  double tie_term = 0.0;  // Σ (t³ - t) over tie groups
  bool ties = false;
};

Ranking rank(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<std::pair<double, bool>> all;
  all.reserve(a.size() + b.size());
  for (double x : a) all.emplace_back(x, true);
  for (double x : b) all.emplace_back(x, false);
  std::sort(all.begin(), all.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Ranking out;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].first == all[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (all[k].second) out.rank_sum_a += mid;
    }
    if (t > 1) {
      out.ties = true;
      out.tie_term += t * t * t - t;
    }
    i = j;
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

bool valid_group(PlanMetric metric, const std::string& group) {
  switch (metric) {
    case PlanMetric::kLocality:
      return parse_locality(group).has_value();
    case PlanMetric::kHeaderSucceeding:
      return parse_header_kind(group).has_value();
    case PlanMetric::kPreceding:
    case PlanMetric::kSucceeding: {
      auto c = parse_category(group);
      return c && context_index(*c).has_value();
    }
  }
  return false;
}

}  // namespace

std::optional<double> anderson_darling_critical_value(double level) {
  for (const auto& c : kAdCritical) {
    if (std::abs(c.level - level) < 1e-12) return c.value;
  }
  return std::nullopt;
}

NormalityResult anderson_darling(const std::vector<double>& sample, double level) {
  const auto critical = anderson_darling_critical_value(level);
  if (!critical) throw UsageError("no Anderson-Darling critical value for this level");
  require_finite(sample);
  const std::size_t n = sample.size();
  if (n < 8) throw DegenerateSampleError("Anderson-Darling needs at least 8 values");

  std::vector<double> x = sample;
  std::sort(x.begin(), x.end());
  const double nd = static_cast<double>(n);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / nd;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (nd - 1.0));
  if (!(sd > 0.0) || x.front() == x.back()) {
    throw DegenerateSampleError("Anderson-Darling needs a sample with positive variance");
  }

  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double zi = (x[i] - mean) / sd;
    const double zr = (x[n - 1 - i] - mean) / sd;
    // ln(1 - Φ(z)) = ln Φ(-z)
    s += (2.0 * static_cast<double>(i) + 1.0) * (log_phi(zi) + log_phi(-zr));
  }
  NormalityResult r;
  r.n = n;
  r.a_squared = -nd - s / nd;
  r.a_squared_adjusted = r.a_squared * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
  r.level = level;
  r.critical_value = *critical;
  r.reject = r.a_squared_adjusted > *critical;
  return r;
}

std::string_view to_string(PValueMethod method) {
  return method == PValueMethod::kExact ? "exact" : "normal_approx";
}

double mann_whitney_exact_p(double u1, std::size_t n1, std::size_t n2) {
  const std::vector<double> counts = u_distribution(n1, n2);
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  const auto k = static_cast<std::size_t>(std::floor(u1));
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (j <= k) lower += counts[j];
    if (j >= k) upper += counts[j];
  }
  return std::min(1.0, 2.0 * std::min(lower, upper) / total);
}

MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw UsageError("Mann-Whitney U needs two non-empty groups");
  require_finite(a);
  require_finite(b);
  MannWhitneyResult r;
  r.n1 = a.size();
  r.n2 = b.size();
  const double n1 = static_cast<double>(r.n1);
  const double n2 = static_cast<double>(r.n2);
  const Ranking ranking = rank(a, b);
  r.u1 = ranking.rank_sum_a - n1 * (n1 + 1.0) / 2.0;
  r.u2 = n1 * n2 - r.u1;

  if (r.n1 <= 10 && r.n2 <= 10 && !ranking.ties) {
    r.method = PValueMethod::kExact;
    r.p_value = mann_whitney_exact_p(r.u1, r.n1, r.n2);
    return r;
  }
  r.method = PValueMethod::kNormalApprox;
  const double n = n1 + n2;
  const double mean = n1 * n2 / 2.0;
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - ranking.tie_term / (n * (n - 1.0)));
  if (!(var > 0.0)) {
    r.p_value = 1.0;
    return r;
  }
  const double z = std::max(0.0, std::abs(r.u1 - mean) - 0.5) / std::sqrt(var);
  r.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return r;
}

std::string_view to_string(EffectLabel label) {
  switch (label) {
    case EffectLabel::kNegligible:
      return "negligible";
    case EffectLabel::kSmall:
      return "small";
    case EffectLabel::kMedium:
      return "medium";
    case EffectLabel::kLarge:
      return "large";
  }
  return "negligible";
}

EffectLabel effect_label(double r) {
  const double m = std::abs(r);
  if (m < 0.1) return EffectLabel::kNegligible;
  if (m < 0.24) return EffectLabel::kSmall;
  if (m < 0.37) return EffectLabel::kMedium;
  return EffectLabel::kLarge;
}

RankBiserial rank_biserial(double u1, std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw UsageError("rank-biserial needs non-empty groups");
  const double nn = static_cast<double>(n1) * static_cast<double>(n2);
  if (!(u1 >= 0.0 && u1 <= nn)) throw UsageError("U1 outside [0, n1*n2]");
  // One rounding: (2U - n1 n2) is exact for half-integer U.
  const double r = (2.0 * u1 - nn) / nn;
  return {r, effect_label(r)};
}

std::string_view to_string(PlanMetric metric) {
  switch (metric) {
    case PlanMetric::kLocality:
      return "locality";
    case PlanMetric::kHeaderSucceeding:
      return "header_succeeding";
    case PlanMetric::kPreceding:
      return "preceding";
    case PlanMetric::kSucceeding:
      return "succeeding";
  }
  return "locality";
}

std::optional<PlanMetric> parse_plan_metric(std::string_view name) {
  for (PlanMetric m : {PlanMetric::kLocality, PlanMetric::kHeaderSucceeding,
                       PlanMetric::kPreceding, PlanMetric::kSucceeding}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<PlanEntry> parse_plan(std::string_view content) {
  std::vector<PlanEntry> plan;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ConfigError("plan line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 5) fail("expected 5 comma-separated fields, got " + std::to_string(fields.size()));
    PlanEntry e;
    e.name = fields[0];
    if (e.name.empty()) fail("empty comparison name");
    auto metric = parse_plan_metric(fields[1]);
    if (!metric) fail("unknown metric '" + fields[1] + "'");
    e.metric = *metric;
    e.group_a = fields[2];
    e.group_b = fields[3];
    for (const auto& g : {e.group_a, e.group_b}) {
      if (!valid_group(e.metric, g)) fail("group '" + g + "' is not valid for " + fields[1]);
    }
    if (fields[4] != "ALL") {
      e.bucket = parse_size_bucket(fields[4]);
      if (!e.bucket) fail("unknown bucket '" + fields[4] + "'");
    }
    for (const auto& prior : plan) {
      if (prior.name == e.name) fail("duplicate comparison name '" + e.name + "'");
    }
    plan.push_back(std::move(e));
  }
  return plan;
}

std::vector<PlanEntry> load_plan(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read plan file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_plan(buf.str());
}

std::optional<double> group_value(const ProjectSummary& project, PlanMetric metric,
                                  const std::string& group) {
  const MetricSet& m = project.metrics;
  switch (metric) {
    case PlanMetric::kLocality: {
      auto loc = parse_locality(group);
      if (!loc) break;
      return (*loc == Locality::kHeader ? m.header : m.nonheader).value();
    }
    case PlanMetric::kHeaderSucceeding: {
      auto kind = parse_header_kind(group);
      if (!kind) break;
      return m.header_succeeding[static_cast<std::size_t>(*kind)].value();
    }
    case PlanMetric::kPreceding:
    case PlanMetric::kSucceeding: {
      auto c = parse_category(group);
      auto slot = c ? context_index(*c) : std::nullopt;
      if (!slot) break;
      return (metric == PlanMetric::kPreceding ? m.preceding : m.succeeding)[*slot].value();
    }
  }
  throw ConfigError("group '" + group + "' is not valid for " + std::string(to_string(metric)));
}

std::vector<TestResult> hypothesis_suite(const std::vector<ProjectSummary>& projects,
                                         const std::vector<PlanEntry>& plan) {
  std::vector<TestResult> results;
  for (const auto& entry : plan) {
    TestResult t;
    t.entry = entry;
    std::vector<double> a;
    std::vector<double> b;
    for (const auto& p : projects) {
      if (!p.size.analyzable) continue;
      if (entry.bucket && p.size.bucket != *entry.bucket) continue;
      if (auto v = group_value(p, entry.metric, entry.group_a)) a.push_back(*v);
      if (auto v = group_value(p, entry.metric, entry.group_b)) b.push_back(*v);
    }
    t.n1 = a.size();
    t.n2 = b.size();
    if (a.size() < 2 || b.size() < 2) {
      t.skipped = true;
      t.skip_reason = "fewer than 2 defined values in a group";
      results.push_back(std::move(t));
      continue;
    }
    t.test = mann_whitney_u(a, b);
    t.effect = rank_biserial(t.test.u1, t.n1, t.n2);
    t.reject = t.test.p_value < kSignificanceLevel;
    auto normality = [](const std::vector<double>& v) -> std::optional<NormalityResult> {
      try {
        return anderson_darling(v);
      } catch (const DegenerateSampleError&) {
        return std::nullopt;
      }
    };
    t.normality_a = normality(a);
    t.normality_b = normality(b);
    results.push_back(std::move(t));
  }
  return results;
}

}  // namespace satd
