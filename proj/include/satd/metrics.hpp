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

// Normalized SATD density metrics and project sizing.

#ifndef SATD_METRICS_HPP_
#define SATD_METRICS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "satd/record.hpp"
#include "satd/source_file.hpp"
#include "satd/taxonomy.hpp"

namespace satd {

// SATD count over comment count. value() is undefined for an empty
// denominator.
struct Proportion {
  std::size_t satd = 0;
  std::size_t total = 0;

  void add(bool is_satd) {
    ++total;
    satd += is_satd;
  }
  std::optional<double> value() const {
    if (total == 0) return std::nullopt;
    return static_cast<double>(satd) / static_cast<double>(total);
  }

  friend bool operator==(const Proportion&, const Proportion&) = default;
};

enum class ContextDirection { kPreceding, kSucceeding };
using ContextKey = std::variant<StatementCategory, HeaderKind>;

std::string_view to_string(ContextDirection direction);

Proportion locality_counts(const std::vector<CommentContextRecord>& records, Locality locality);
std::optional<double> n_locality(const std::vector<CommentContextRecord>& records,
                                 Locality locality);

// Category keys count NON_HEADER records only; HEADER records in the input
// are skipped. HeaderKind keys take the succeeding direction over HEADER
// records and throw UsageError for NON_HEADER input or the preceding
// direction. A MISC key counts the excluded bucket: MISC or absent context.
Proportion context_counts(const std::vector<CommentContextRecord>& records,
                          ContextDirection direction, ContextKey key);
std::optional<double> n_context(const std::vector<CommentContextRecord>& records,
                                ContextDirection direction, ContextKey key);

// Share of qualifying NON_HEADER SATD records with this (preceding,
// succeeding) pair. Qualifying means both contexts are among the eight
// context categories. Undefined when nothing qualifies.
std::optional<double> n_pattern(const std::vector<CommentContextRecord>& records,
                                StatementCategory preceding, StatementCategory succeeding);

// Per-project metric values, kept as counts so ratios and pooled sums can be
// derived without loss.
struct MetricSet {
  Proportion header;
  Proportion nonheader;
  std::array<Proportion, 8> preceding;   // by context_index
  std::array<Proportion, 8> succeeding;  // by context_index
  Proportion preceding_excluded;         // MISC or no neighbour
  Proportion succeeding_excluded;
  std::array<Proportion, 6> header_succeeding;  // by HeaderKind
  // pattern[s][p]: SATD count with succeeding s and preceding p.
  std::array<std::array<std::size_t, 8>, 8> pattern{};
  std::size_t pattern_total = 0;

  std::optional<double> n_pattern(StatementCategory preceding, StatementCategory succeeding) const;

  friend bool operator==(const MetricSet&, const MetricSet&) = default;
};

MetricSet compute_metrics(const std::vector<CommentContextRecord>& records);

enum class SizeBucket { kSmall, kMedium, kLarge };

inline constexpr std::array<SizeBucket, 3> kSizeBuckets = {SizeBucket::kSmall, SizeBucket::kMedium,
                                                           SizeBucket::kLarge};

std::string_view to_string(SizeBucket bucket);
std::optional<SizeBucket> parse_size_bucket(std::string_view name);
// Range label used in tables, e.g. "1-100".
std::string_view range_label(SizeBucket bucket);

// Upper-inclusive: up to 100 KLOC is SMALL, up to 1000 KLOC MEDIUM.
SizeBucket bucket_for(std::size_t code_lines);

struct ProjectSize {
  std::size_t files = 0;
  std::size_t code_lines = 0;
  double kloc = 0.0;
  SizeBucket bucket = SizeBucket::kSmall;
  bool analyzable = false;  // at least one code line

  friend bool operator==(const ProjectSize&, const ProjectSize&) = default;
};

ProjectSize size_project(const std::vector<std::size_t>& code_line_counts);
ProjectSize size_project(const std::vector<SourceFile>& files);

struct ProjectSummary {
  std::string project;
  ProjectSize size;
  MetricSet metrics;

  std::size_t cmt_h() const { return metrics.header.total; }
  std::size_t satd_h() const { return metrics.header.satd; }
  std::size_t cmt_nh() const { return metrics.nonheader.total; }
  std::size_t satd_nh() const { return metrics.nonheader.satd; }

  friend bool operator==(const ProjectSummary&, const ProjectSummary&) = default;
};

ProjectSummary summarize_project(std::string project, const ProjectSize& size,
                                 const std::vector<CommentContextRecord>& records);

// Mean and median of the defined values; undefined entries are skipped.
struct Aggregate {
  std::size_t n = 0;
  std::optional<double> mean;
  std::optional<double> median;
};

Aggregate aggregate(const std::vector<std::optional<double>>& values);

}  // namespace satd

#endif  // SATD_METRICS_HPP_
