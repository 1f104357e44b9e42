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

// SATD labelling: keyword rules for Easy-To-Find debt and ingestion of
// externally produced labels.

#ifndef SATD_SATD_DETECTOR_HPP_
#define SATD_SATD_DETECTOR_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satd/record.hpp"

namespace satd {

enum class MatchMode { kWord, kSubstring };

std::string_view to_string(MatchMode mode);
std::optional<MatchMode> parse_match_mode(std::string_view name);

struct Pattern {
  std::string id;
  MatchMode mode = MatchMode::kWord;
  std::string text;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Ordered patterns; earlier patterns win. Ids are unique and texts non-empty.
class PatternSet {
 public:
  // The task tags todo, fixme, hack and xxx, all word-mode.
  static PatternSet defaults();

  // Parses `id<TAB>mode<TAB>text` lines; blank lines and lines starting with
  // '#' are ignored. Throws ConfigError naming the offending line.
  static PatternSet parse(std::string_view content, std::string version);
  static PatternSet load(const std::filesystem::path& file);

  PatternSet(std::vector<Pattern> patterns, std::string version);

  // This set followed by `extra`. Throws ConfigError on a repeated id.
  PatternSet extended(const PatternSet& extra) const;

  const std::vector<Pattern>& patterns() const { return patterns_; }
  const std::string& version() const { return version_; }
  bool empty() const { return patterns_.empty(); }

 private:
  std::vector<Pattern> patterns_;
  std::string version_;
};

// ASCII case-insensitive. A word-mode match must not touch a letter, digit or
// underscore on either side.
bool matches(const Pattern& pattern, std::string_view text);

// SATD/ETF with the first matching pattern, otherwise NOT_SATD.
// Throws UsageError when `patterns` is empty.
SatdLabel match_etf(std::string_view text, const PatternSet& patterns);

// One row of an external label table. A row addresses a comment either by
// (project, file, line), where any line of a merged comment matches, or by
// comment_hash().
struct ExternalLabel {
  std::string project;
  std::string file;
  int line = 0;
  std::string hash;
  SatdKind kind = SatdKind::kNone;
  std::string provenance;  // free-form origin of the label, may be empty

  friend bool operator==(const ExternalLabel&, const ExternalLabel&) = default;
};

using ExternalLabelTable = std::vector<ExternalLabel>;

struct LabelApplication {
  std::size_t matched = 0;
  std::vector<ExternalLabel> unmatched;
};

// Overwrites the label of every addressed record with the external one.
// Throws IngestionError listing keys that occur more than once.
LabelApplication apply_external_labels(std::vector<CommentContextRecord>& records,
                                       const ExternalLabelTable& labels);

}  // namespace satd

#endif  // SATD_SATD_DETECTOR_HPP_
