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

#include <algorithm>
#include <numeric>

#include "satd/errors.hpp"

namespace satd {
namespace {

std::optional<std::size_t> context_slot(const std::optional<StatementContext>& ctx) {
  if (!ctx) return std::nullopt;
  return context_index(ctx->category);
}

const std::optional<StatementContext>& neighbour(const CommentContextRecord& r,
                                                 ContextDirection direction) {
  return direction == ContextDirection::kPreceding ? r.preceding : r.succeeding;
}

}  // namespace

std::string_view to_string(ContextDirection direction) {
  return direction == ContextDirection::kPreceding ? "preceding" : "succeeding";
}

Proportion locality_counts(const std::vector<CommentContextRecord>& records, Locality locality) {
  Proportion p;
  for (const auto& r : records) {
    if (r.locality == locality) p.add(r.label.is_satd());
  }
  return p;
}

std::optional<double> n_locality(const std::vector<CommentContextRecord>& records,
                                 Locality locality) {
  return locality_counts(records, locality).value();
}

Proportion context_counts(const std::vector<CommentContextRecord>& records,
                          ContextDirection direction, ContextKey key) {
  Proportion p;
  if (const auto* header = std::get_if<HeaderKind>(&key)) {
    if (direction != ContextDirection::kSucceeding) {
      throw UsageError("header kinds only have a succeeding context");
    }
    for (const auto& r : records) {
      if (!r.is_header()) throw UsageError("header-kind density over a NON_HEADER record");
      if (r.header_kind == *header) p.add(r.label.is_satd());
    }
    return p;
  }
  const auto slot = context_index(std::get<StatementCategory>(key));
  for (const auto& r : records) {
    if (r.is_header()) continue;
    if (context_slot(neighbour(r, direction)) == slot) p.add(r.label.is_satd());
  }
  return p;
}

std::optional<double> n_context(const std::vector<CommentContextRecord>& records,
                                ContextDirection direction, ContextKey key) {
  return context_counts(records, direction, key).value();
}

std::optional<double> n_pattern(const std::vector<CommentContextRecord>& records,
                                StatementCategory preceding, StatementCategory succeeding) {
  return compute_metrics(records).n_pattern(preceding, succeeding);
}

std::optional<double> MetricSet::n_pattern(StatementCategory preceding,
                                           StatementCategory succeeding) const {
  if (pattern_total == 0) return std::nullopt;
  auto p = context_index(preceding);
  auto s = context_index(succeeding);
  if (!p || !s) return 0.0;
  return static_cast<double>(pattern[*s][*p]) / static_cast<double>(pattern_total);
}

MetricSet compute_metrics(const std::vector<CommentContextRecord>& records) {
  MetricSet m;
  for (const auto& r : records) {
    const bool satd = r.label.is_satd();
    if (r.is_header()) {
      m.header.add(satd);
      m.header_succeeding[static_cast<std::size_t>(*r.header_kind)].add(satd);
      continue;
    }
    m.nonheader.add(satd);
    const auto p = context_slot(r.preceding);
    const auto s = context_slot(r.succeeding);
    (p ? m.preceding[*p] : m.preceding_excluded).add(satd);
    (s ? m.succeeding[*s] : m.succeeding_excluded).add(satd);
    if (satd && p && s) {
      ++m.pattern[*s][*p];
      ++m.pattern_total;
    }
  }
  return m;
}

std::string_view to_string(SizeBucket bucket) {
  switch (bucket) {
    case SizeBucket::kSmall:
      return "SMALL";
    case SizeBucket::kMedium:
      return "MEDIUM";
    case SizeBucket::kLarge:
      return "LARGE";
  }
  return "SMALL";
}

std::optional<SizeBucket> parse_size_bucket(std::string_view name) {
  for (SizeBucket b : kSizeBuckets) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

std::string_view range_label(SizeBucket bucket) {
  switch (bucket) {
    case SizeBucket::kSmall:
      return "1-100";
    case SizeBucket::kMedium:
      return "100-1000";
    case SizeBucket::kLarge:
      return ">1000";
  }
  return "1-100";
}

SizeBucket bucket_for(std::size_t code_lines) {
  if (code_lines <= 100'000) return SizeBucket::kSmall;
  if (code_lines <= 1'000'000) return SizeBucket::kMedium;
  return SizeBucket::kLarge;
}

ProjectSize size_project(const std::vector<std::size_t>& code_line_counts) {
  ProjectSize s;
  s.files = code_line_counts.size();
  s.code_lines = std::accumulate(code_line_counts.begin(), code_line_counts.end(), std::size_t{0});
  s.kloc = static_cast<double>(s.code_lines) / 1000.0;
  s.bucket = bucket_for(s.code_lines);
  s.analyzable = s.code_lines > 0;
  return s;
}

ProjectSize size_project(const std::vector<SourceFile>& files) {
  std::vector<std::size_t> counts;
  counts.reserve(files.size());
  for (const auto& f : files) counts.push_back(f.code_line_count());
  return size_project(counts);
}

ProjectSummary summarize_project(std::string project, const ProjectSize& size,
                                 const std::vector<CommentContextRecord>& records) {
  return ProjectSummary{std::move(project), size, compute_metrics(records)};
}

Aggregate aggregate(const std::vector<std::optional<double>>& values) {
  std::vector<double> v;
  for (const auto& x : values) {
    if (x) v.push_back(*x);
  }
  Aggregate a;
  a.n = v.size();
  if (v.empty()) return a;
  // Sorted summation keeps the mean independent of input order.
  std::sort(v.begin(), v.end());
  a.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  const std::size_t mid = v.size() / 2;
  a.median = v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
  return a;
}

}  // namespace satd
