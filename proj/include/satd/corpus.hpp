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

// Corpus walking, the per-project JSON-lines cache, and ingestion of
// externally labelled data.

#ifndef SATD_CORPUS_HPP_
#define SATD_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satd/metrics.hpp"
#include "satd/record.hpp"
#include "satd/satd_detector.hpp"

namespace satd {

namespace fs = std::filesystem;

// Maps a logical column name (e.g. "line") to the header used in a CSV.
// Unmapped columns use their logical name.
class ColumnMapping {
 public:
  ColumnMapping() = default;
  explicit ColumnMapping(std::map<std::string, std::string> names) : names_(std::move(names)) {}

  // Parses "logical=actual" pairs separated by commas. Throws ConfigError.
  static ColumnMapping parse(std::string_view spec);

  const std::string& column(const std::string& logical) const;
  const std::map<std::string, std::string>& names() const { return names_; }

 private:
  std::map<std::string, std::string> names_;
};

struct RejectedRow {
  int line = 0;  // physical CSV line
  std::string reason;
};

struct LabelTableLoad {
  ExternalLabelTable table;
  std::size_t rows_read = 0;
  std::vector<RejectedRow> rejects;
};

// Required columns: project, file, line, label. Optional: comment_hash and
// provenance. Rows with a bad line number or label value are rejected and
// reported; a missing required column or a repeated (project, file, line)
// key throws IngestionError.
LabelTableLoad parse_external_labels(std::string_view csv, const ColumnMapping& columns = {});
LabelTableLoad load_external_labels(const fs::path& file, const ColumnMapping& columns = {});

enum class ProjectMode {
  kSubdirectories,  // each immediate subdirectory of a root is a project
  kRoot,            // each root is a project
};

// Pre-linked comment records exported by another tool, with per-project
// sizes. Used instead of walking sources when set.
struct ExportSource {
  fs::path records_csv;
  fs::path projects_csv;
  ColumnMapping columns;
};

struct CorpusConfig {
  std::vector<fs::path> roots;
  std::vector<std::string> include = {"**/*.java"};
  std::vector<std::string> exclude;
  std::optional<fs::path> patterns_file;  // appended to the default patterns
  std::optional<fs::path> labels_file;
  ColumnMapping label_columns;
  std::optional<ExportSource> export_source;
  unsigned workers = 1;
  fs::path cache_dir;
  ProjectMode project_mode = ProjectMode::kSubdirectories;
  std::size_t warn_threshold = 0;

  // Throws ConfigError.
  void validate() const;
};

// JSON config. Relative paths resolve against `base_dir`; an absent
// "cache_dir" falls back to $SATD_SCOPE_CACHE. Throws ConfigError.
CorpusConfig parse_corpus_config(std::string_view json, const fs::path& base_dir);
CorpusConfig load_corpus_config(const fs::path& file);

struct ScanWarning {
  std::string project;
  std::string file;
  std::string message;

  friend bool operator==(const ScanWarning&, const ScanWarning&) = default;
};

struct ProjectScan {
  ProjectSummary summary;
  std::vector<CommentContextRecord> records;  // ordered by (file, start_line)
  std::vector<std::string> files;             // project-relative, sorted
  std::vector<ScanWarning> warnings;
  bool from_cache = false;
};

struct CorpusScan {
  std::vector<ProjectScan> projects;  // sorted by project name
  std::vector<ScanWarning> warnings;
  std::vector<Diagnostic> diagnostics;
  std::size_t label_rows = 0;
  std::size_t labels_matched = 0;
  std::vector<ExternalLabel> labels_unmatched;
  std::vector<RejectedRow> label_rejects;
};

// Called once per project, in project order, after its cache is written.
using ProjectSink = std::function<void(const ProjectScan&)>;

// Scans every project and writes <cache>/<project>.records.jsonl,
// <cache>/<project>.summary.json and the <cache>/corpus.json index. A project
// whose cached summary matches the current file contents and settings is
// loaded from the cache; a cache that fails verification is rebuilt. When a
// sink is given, per-project records are handed to it and not retained.
CorpusScan scan_corpus(const CorpusConfig& config, const ProjectSink& sink = {});

// Summaries of the projects listed in the cache index. Throws ConfigError
// naming the scan command when there is no usable cache.
std::vector<ProjectSummary> load_cached_summaries(const fs::path& cache_dir);

// Verified records of one cached project. Throws ConfigError.
std::vector<CommentContextRecord> load_cached_records(const fs::path& cache_dir,
                                                      const std::string& project);

}  // namespace satd

#endif  // SATD_CORPUS_HPP_
