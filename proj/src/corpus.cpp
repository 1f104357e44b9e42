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

#include "satd/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json_io.hpp"
#include "satd/context_linker.hpp"
#include "satd/errors.hpp"
#include "satd/scanner.hpp"
#include "satd/source_file.hpp"
#include "satd/text_util.hpp"

namespace satd {
namespace {

using json_io::Json;

constexpr std::string_view kSummarySchema = "satd-scope/summary/1";
constexpr std::string_view kIndexSchema = "satd-scope/corpus/1";

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FileError(file.string(), "cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw FileError(file.string(), "read error");
  return bytes;
}

// Writes through a temporary file so a crash never leaves a half-written
// cache file under the final name.
void write_file(const fs::path& file, std::string_view bytes) {
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError(tmp.string(), "cannot write file");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FileError(tmp.string(), "write error");
  }
  fs::rename(tmp, file);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Cache file stem for a project name: bytes outside [A-Za-z0-9_.-] and a
// leading '.' are percent-encoded.
std::string cache_stem(const std::string& project) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (std::size_t i = 0; i < project.size(); ++i) {
    const unsigned char c = project[i];
    const bool plain = std::isalnum(c) || c == '_' || c == '-' || (c == '.' && i > 0);
    if (plain) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

fs::path records_path(const fs::path& cache, const std::string& project) {
  return cache / (cache_stem(project) + ".records.jsonl");
}

fs::path summary_path(const fs::path& cache, const std::string& project) {
  return cache / (cache_stem(project) + ".summary.json");
}

// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
  const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// CSV helpers shared by label and export ingestion.

struct CsvTable {
  std::map<std::string, std::size_t> header;
  std::vector<CsvRow> rows;
  std::vector<int> lines;

  std::optional<std::size_t> index(const ColumnMapping& columns, const std::string& logical) const {
    auto it = header.find(columns.column(logical));
    if (it == header.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require(const ColumnMapping& columns, const std::string& logical,
                      const std::string& what) const {
    auto i = index(columns, logical);
    if (!i) {
      throw IngestionError(what + ": missing required column '" + columns.column(logical) + "'");
    }
    return *i;
  }
};

CsvTable read_csv_table(std::string_view text, const std::string& what) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  CsvParseResult parsed = parse_csv(text);
  if (!parsed.error.empty()) {
    throw IngestionError(what + ": line " + std::to_string(parsed.error_line) + ": " + parsed.error);
  }
  if (parsed.rows.empty()) throw IngestionError(what + ": missing header row");
  CsvTable table;
  for (std::size_t i = 0; i < parsed.rows[0].size(); ++i) {
    table.header.emplace(trim(parsed.rows[0][i]), i);
  }
  for (std::size_t r = 1; r < parsed.rows.size(); ++r) {
    const CsvRow& row = parsed.rows[r];
    if (row.size() == 1 && trim(row[0]).empty()) continue;  // blank line
    table.rows.push_back(row);
    table.lines.push_back(parsed.row_lines[r]);
  }
  return table;
}

std::string upper_token(std::string_view s) {
  std::string out = trim(s);
  for (char& c : out) {
    if (c == '-' || c == ' ') c = '_';
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Project discovery.

struct ProjectDir {
  std::string name;
  fs::path dir;
};

std::vector<ProjectDir> discover_projects(const CorpusConfig& config) {
  std::vector<ProjectDir> projects;
  for (const auto& root : config.roots) {
    if (config.project_mode == ProjectMode::kRoot) {
      fs::path canonical = fs::weakly_canonical(root);
      projects.push_back({canonical.filename().string(), root});
      continue;
    }
    std::vector<ProjectDir> found;
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_directory()) found.push_back({entry.path().filename().string(), entry.path()});
    }
    std::sort(found.begin(), found.end(),
              [](const ProjectDir& a, const ProjectDir& b) { return a.name < b.name; });
    projects.insert(projects.end(), found.begin(), found.end());
  }
  std::set<std::string> seen;
  for (const auto& p : projects) {
    if (!seen.insert(p.name).second) throw ConfigError("duplicate project name: " + p.name);
  }
  std::sort(projects.begin(), projects.end(),
            [](const ProjectDir& a, const ProjectDir& b) { return a.name < b.name; });
  return projects;
}

bool selected(const CorpusConfig& config, const std::string& rel) {
  if (rel.size() < 5 || rel.compare(rel.size() - 5, 5, ".java") != 0) return false;
  bool included = false;
  for (const auto& g : config.include) included = included || glob_match(g, rel);
  if (!included) return false;
  for (const auto& g : config.exclude) {
    if (glob_match(g, rel)) return false;
  }
  return true;
}

// Sorted project-relative paths of the files to scan. Symlinked directories
// are not followed.
std::vector<std::string> list_files(const CorpusConfig& config, const fs::path& dir,
                                    std::vector<ScanWarning>& warnings, const std::string& project) {
  std::vector<std::string> files;
  std::error_code ec;
  fs::recursive_directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    warnings.push_back({project, "", "cannot list directory: " + ec.message()});
    return files;
  }
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      warnings.push_back({project, "", "directory walk error: " + ec.message()});
      break;
    }
    // A dangling .java symlink is listed so that it surfaces as unreadable.
    std::error_code type_ec;
    if (!it->is_regular_file(type_ec) && !it->is_symlink(type_ec)) continue;
    std::string rel = it->path().lexically_relative(dir).generic_string();
    if (selected(config, rel)) files.push_back(std::move(rel));
  }
  std::sort(files.begin(), files.end());
  return files;
}

// ---------------------------------------------------------------------------
// Cache.

struct FileState {
  std::string path;
  std::size_t bytes = 0;
  std::string content_hash;
  std::string error;
  std::string content;  // dropped once scanned
};

Json manifest_json(const std::vector<FileState>& files, const std::vector<std::size_t>* code_lines) {
  Json manifest = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const FileState& f = files[i];
    if (!f.error.empty()) {
      manifest.push_back(Json{{"path", f.path}, {"error", f.error}});
      continue;
    }
    Json entry{{"path", f.path}, {"bytes", f.bytes}, {"content_hash", f.content_hash}};
    if (code_lines) entry["code_lines"] = (*code_lines)[i];
    manifest.push_back(std::move(entry));
  }
  return manifest;
}

Json warnings_json(const std::vector<ScanWarning>& warnings) {
  Json out = Json::array();
  for (const auto& w : warnings) out.push_back(Json{{"file", w.file}, {"message", w.message}});
  return out;
}

Json diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    out.push_back(Json{{"file", d.file}, {"line", d.line}, {"message", d.message}});
  }
  return out;
}

struct CachedProject {
  ProjectScan scan;
  std::vector<Diagnostic> diagnostics;
};

std::string records_bytes(const std::vector<CommentContextRecord>& records) {
  std::string out;
  for (const auto& r : records) out += json_io::record_line(r);
  return out;
}

std::vector<CommentContextRecord> parse_records(std::string_view bytes) {
  std::vector<CommentContextRecord> records;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) throw std::invalid_argument("truncated records file");
    records.push_back(json_io::parse_record_line(bytes.substr(start, nl - start)));
    start = nl + 1;
  }
  return records;
}

// Loads a project from the cache when its stored manifest and settings match.
// Any mismatch or verification failure yields nullopt.
std::optional<CachedProject> try_cache(const fs::path& cache, const std::string& project,
                                       const std::string& settings_hash,
                                       const std::vector<FileState>& files) {
  try {
    const fs::path summary_file = summary_path(cache, project);
    const fs::path rec_file = records_path(cache, project);
    if (!fs::exists(summary_file) || !fs::exists(rec_file)) return std::nullopt;
    Json summary = Json::parse(read_file(summary_file));
    if (summary.at("schema") != kSummarySchema || summary.at("project") != project ||
        summary.at("settings_hash") != settings_hash) {
      return std::nullopt;
    }
    const Json& manifest = summary.at("manifest");
    Json current = manifest_json(files, nullptr);
    if (manifest.size() != current.size()) return std::nullopt;
    std::vector<std::size_t> code_lines;
    for (std::size_t i = 0; i < current.size(); ++i) {
      Json stored = manifest[i];
      if (stored.contains("code_lines")) {
        code_lines.push_back(stored.at("code_lines").get<std::size_t>());
        stored.erase("code_lines");
      }
      if (stored != current[i]) return std::nullopt;
    }
    const std::string bytes = read_file(rec_file);
    const Json& rec_info = summary.at("records");
    if (rec_info.at("content_hash") != hex64(fnv1a(bytes))) return std::nullopt;
    std::vector<CommentContextRecord> records = parse_records(bytes);
    if (records.size() != rec_info.at("count").get<std::size_t>()) return std::nullopt;
    for (const auto& r : records) {
      if (r.project != project) return std::nullopt;
    }

    ProjectSize size = size_project(code_lines);
    ProjectSummary fresh = summarize_project(project, size, records);
    if (fresh != json_io::summary_from_json(summary)) return std::nullopt;

    CachedProject out;
    out.scan.summary = std::move(fresh);
    out.scan.records = std::move(records);
    for (const auto& f : files) out.scan.files.push_back(f.path);
    for (const auto& w : summary.at("warnings")) {
      out.scan.warnings.push_back(
          {project, w.at("file").get<std::string>(), w.at("message").get<std::string>()});
    }
    for (const auto& d : summary.at("diagnostics")) {
      out.diagnostics.push_back({d.at("file").get<std::string>(), d.at("line").get<int>(),
                                 d.at("message").get<std::string>()});
    }
    out.scan.from_cache = true;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void write_cache(const fs::path& cache, const ProjectScan& scan, const std::string& settings_hash,
                 const Json& manifest, const std::vector<Diagnostic>& diagnostics) {
  const std::string bytes = records_bytes(scan.records);
  Json summary{{"schema", kSummarySchema},
               {"project", scan.summary.project},
               {"settings_hash", settings_hash},
               {"records",
                Json{{"file", records_path(cache, scan.summary.project).filename().string()},
                     {"count", scan.records.size()},
                     {"content_hash", hex64(fnv1a(bytes))}}},
               {"manifest", manifest},
               {"warnings", warnings_json(scan.warnings)},
               {"diagnostics", diagnostics_json(diagnostics)}};
  Json body = json_io::to_json(scan.summary);
  summary["size"] = body["size"];
  summary["metrics"] = body["metrics"];
  write_file(records_path(cache, scan.summary.project), bytes);
  write_file(summary_path(cache, scan.summary.project), summary.dump(2) + "\n");
}

void write_index(const fs::path& cache, const std::vector<std::string>& projects,
                 std::string_view source) {
  Json list = Json::array();
  for (const auto& p : projects) {
    list.push_back(Json{{"project", p}, {"summary", summary_path(cache, p).filename().string()}});
  }
  Json index{{"schema", kIndexSchema}, {"source", source}, {"projects", std::move(list)}};
  write_file(cache / "corpus.json", index.dump(2) + "\n");
}

std::string settings_hash(const PatternSet& patterns,
                          const ExternalLabelTable& labels) {
  std::ostringstream s;
  s << kSummarySchema << '\n';
  for (const auto& p : patterns.patterns()) {
    s << "pattern\t" << p.id << '\t' << to_string(p.mode) << '\t' << p.text << '\n';
  }
  for (const auto& l : labels) {
    s << "label\t" << l.file << '\t' << l.line << '\t' << l.hash << '\t' << to_string(l.kind)
      << '\n';
  }
  return hex64(fnv1a(s.str()));
}

// ---------------------------------------------------------------------------
// Source scanning.

struct FileScan {
  std::vector<CommentContextRecord> records;
  std::vector<Diagnostic> diagnostics;
  std::size_t code_lines = 0;
  std::string error;
};

FileScan scan_file(const FileState& state, const PatternSet& patterns, const std::string& project) {
  FileScan out;
  try {
    SourceFile source = SourceFile::from_text(state.path, state.content);
    ScannedFile scanned(source);
    out.records = link(scanned, patterns, project);
    out.diagnostics = scanned.diagnostics();
    out.code_lines = source.code_line_count();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

PatternSet effective_patterns(const CorpusConfig& config) {
  PatternSet patterns = PatternSet::defaults();
  if (config.patterns_file) patterns = patterns.extended(PatternSet::load(*config.patterns_file));
  return patterns;
}

void emit(CorpusScan& result, ProjectScan&& scan, std::vector<Diagnostic>&& diagnostics,
          const ProjectSink& sink) {
  result.warnings.insert(result.warnings.end(), scan.warnings.begin(), scan.warnings.end());
  result.diagnostics.insert(result.diagnostics.end(), diagnostics.begin(), diagnostics.end());
  if (sink) {
    sink(scan);
    scan.records.clear();
    scan.records.shrink_to_fit();
  }
  result.projects.push_back(std::move(scan));
}

CorpusScan scan_sources(const CorpusConfig& config, const ProjectSink& sink) {
  const PatternSet patterns = effective_patterns(config);
  LabelTableLoad labels;
  if (config.labels_file) labels = load_external_labels(*config.labels_file, config.label_columns);

  std::map<std::string, ExternalLabelTable> labels_by_project;
  for (const auto& l : labels.table) labels_by_project[l.project].push_back(l);

  CorpusScan result;
  result.label_rows = labels.rows_read;
  result.label_rejects = labels.rejects;

  fs::create_directories(config.cache_dir);
  std::vector<std::string> names;
  for (const auto& project : discover_projects(config)) {
    const ExternalLabelTable& project_labels = labels_by_project[project.name];
    const std::string settings = settings_hash(patterns, project_labels);

    std::vector<ScanWarning> warnings;
    std::vector<std::string> rels = list_files(config, project.dir, warnings, project.name);
    std::vector<FileState> files(rels.size());
    parallel_for(rels.size(), config.workers, [&](std::size_t i) {
      FileState& f = files[i];
      f.path = rels[i];
      try {
        f.content = read_file(project.dir / rels[i]);
        f.bytes = f.content.size();
        f.content_hash = hex64(fnv1a(f.content));
      } catch (const std::exception&) {
        f.error = "unreadable file";
      }
    });
    names.push_back(project.name);

    if (warnings.empty()) {
      if (auto cached = try_cache(config.cache_dir, project.name, settings, files)) {
        if (!project_labels.empty()) {
          // Re-applying is a no-op on the cached labels; it recovers the counts.
          LabelApplication applied = apply_external_labels(cached->scan.records, project_labels);
          result.labels_matched += applied.matched;
          for (auto& u : applied.unmatched) result.labels_unmatched.push_back(std::move(u));
        }
        emit(result, std::move(cached->scan), std::move(cached->diagnostics), sink);
        continue;
      }
    }

    std::vector<FileScan> scans(files.size());
    parallel_for(files.size(), config.workers, [&](std::size_t i) {
      if (files[i].error.empty()) scans[i] = scan_file(files[i], patterns, project.name);
      files[i].content.clear();
      files[i].content.shrink_to_fit();
    });

    ProjectScan scan;
    std::vector<Diagnostic> diagnostics;
    std::vector<std::size_t> code_lines;
    for (std::size_t i = 0; i < files.size(); ++i) {
      scan.files.push_back(files[i].path);
      if (files[i].error.empty() && !scans[i].error.empty()) files[i].error = scans[i].error;
      if (!files[i].error.empty()) {
        warnings.push_back({project.name, files[i].path, files[i].error});
        code_lines.push_back(0);
        continue;
      }
      code_lines.push_back(scans[i].code_lines);
      for (auto& r : scans[i].records) scan.records.push_back(std::move(r));
      for (auto& d : scans[i].diagnostics) diagnostics.push_back(std::move(d));
    }
    // Files are visited in path order and comments in position order, so
    // records are already sorted by (file, start_line).
    if (!project_labels.empty()) {
      LabelApplication applied = apply_external_labels(scan.records, project_labels);
      result.labels_matched += applied.matched;
      for (auto& u : applied.unmatched) result.labels_unmatched.push_back(std::move(u));
    }
    std::vector<std::size_t> readable_lines;
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (files[i].error.empty()) readable_lines.push_back(code_lines[i]);
    }
    scan.summary = summarize_project(project.name, size_project(readable_lines), scan.records);
    scan.warnings = std::move(warnings);
    write_cache(config.cache_dir, scan, settings, manifest_json(files, &code_lines), diagnostics);
    emit(result, std::move(scan), std::move(diagnostics), sink);
  }
  // Labels for projects that were not scanned at all.
  std::set<std::string> scanned(names.begin(), names.end());
  for (const auto& [project, rows] : labels_by_project) {
    if (scanned.count(project)) continue;
    result.labels_unmatched.insert(result.labels_unmatched.end(), rows.begin(), rows.end());
  }
  write_index(config.cache_dir, names, "sources");
  return result;
}

// ---------------------------------------------------------------------------
// Export ingestion.

std::optional<std::string> cell(const CsvRow& row, std::optional<std::size_t> index) {
  if (!index || *index >= row.size()) return std::nullopt;
  return trim(row[*index]);
}

std::optional<StatementContext> export_context(const std::string& value, bool& ok) {
  if (value.empty()) return std::nullopt;
  auto kind = parse_statement_kind(value);
  if (!kind) {
    ok = false;
    return std::nullopt;
  }
  return StatementContext(*kind);
}

CorpusScan scan_export(const CorpusConfig& config, const ProjectSink& sink) {
  const ExportSource& src = *config.export_source;
  const ColumnMapping& columns = src.columns;
  CorpusScan result;

  const CsvTable projects = read_csv_table(read_file(src.projects_csv), "projects export");
  const std::size_t p_name = projects.require(columns, "project", "projects export");
  const auto p_lines = projects.index(columns, "code_lines");
  const auto p_kloc = projects.index(columns, "kloc");
  const auto p_files = projects.index(columns, "files");
  if (!p_lines && !p_kloc) {
    throw IngestionError("projects export: missing required column '" +
                         columns.column("code_lines") + "' (or '" + columns.column("kloc") + "')");
  }
  std::map<std::string, ProjectSize> sizes;
  for (std::size_t r = 0; r < projects.rows.size(); ++r) {
    const CsvRow& row = projects.rows[r];
    const std::string name = cell(row, p_name).value_or("");
    std::optional<double> lines;
    if (auto v = cell(row, p_lines); v && !v->empty()) {
      if (auto n = parse_int(*v); n && *n >= 0) lines = *n;
    } else if (auto k = cell(row, p_kloc); k && !k->empty()) {
      try {
        std::size_t used = 0;
        double kloc = std::stod(*k, &used);
        if (used == k->size() && kloc >= 0) lines = std::llround(kloc * 1000.0);
      } catch (const std::exception&) {
      }
    }
    if (name.empty() || !lines) {
      result.label_rejects.push_back({projects.lines[r], "projects export: bad project row"});
      continue;
    }
    ProjectSize size = size_project(std::vector<std::size_t>{static_cast<std::size_t>(*lines)});
    size.files = 0;
    if (auto f = cell(row, p_files); f && !f->empty()) {
      if (auto n = parse_int(*f); n && *n >= 0) size.files = static_cast<std::size_t>(*n);
    }
    if (!sizes.emplace(name, size).second) {
      throw IngestionError("projects export: duplicate project '" + name + "'");
    }
  }

  const CsvTable records = read_csv_table(read_file(src.records_csv), "records export");
  const std::string what = "records export";
  const std::size_t c_project = records.require(columns, "project", what);
  const std::size_t c_file = records.require(columns, "file", what);
  const std::size_t c_line = records.require(columns, "line", what);
  const std::size_t c_locality = records.require(columns, "locality", what);
  const std::size_t c_label = records.require(columns, "label", what);
  const auto c_header_kind = records.index(columns, "header_kind");
  const auto c_preceding = records.index(columns, "preceding");
  const auto c_succeeding = records.index(columns, "succeeding");
  const auto c_text = records.index(columns, "comment");

  std::map<std::string, std::vector<CommentContextRecord>> by_project;
  for (std::size_t r = 0; r < records.rows.size(); ++r) {
    const CsvRow& row = records.rows[r];
    const int line_no = records.lines[r];
    auto reject = [&](const std::string& why) { result.label_rejects.push_back({line_no, why}); };
    CommentContextRecord rec;
    rec.project = cell(row, c_project).value_or("");
    rec.file = cell(row, c_file).value_or("");
    auto line = parse_int(cell(row, c_line).value_or(""));
    if (rec.project.empty() || rec.file.empty() || !line || *line < 1) {
      reject("bad project, file or line");
      continue;
    }
    auto locality = parse_locality(upper_token(cell(row, c_locality).value_or("")));
    auto kind = parse_satd_kind(upper_token(cell(row, c_label).value_or("")));
    if (!locality || !kind) {
      reject("bad locality or label value");
      continue;
    }
    bool ok = true;
    rec.locality = *locality;
    if (rec.is_header()) {
      rec.header_kind = parse_header_kind(upper_token(cell(row, c_header_kind).value_or("")));
      ok = rec.header_kind.has_value();
    }
    rec.preceding = export_context(cell(row, c_preceding).value_or(""), ok);
    rec.succeeding = export_context(cell(row, c_succeeding).value_or(""), ok);
    if (!ok) {
      reject("bad header kind or statement kind");
      continue;
    }
    rec.span.file = rec.file;
    rec.span.start_line = rec.span.end_line = *line;
    rec.span.text = cell(row, c_text).value_or("");
    rec.label = SatdLabel::external(*kind);
    by_project[rec.project].push_back(std::move(rec));
  }
  result.label_rows = records.rows.size();

  std::set<std::string> names;
  for (const auto& [name, size] : sizes) names.insert(name);
  for (const auto& [name, recs] : by_project) {
    if (!sizes.count(name)) {
      result.warnings.push_back({name, "", "project missing from projects export; skipped"});
    }
  }
  fs::create_directories(config.cache_dir);
  const std::string settings = hex64(fnv1a(std::string(kSummarySchema) + "\texport"));
  std::vector<std::string> order(names.begin(), names.end());
  for (const auto& name : order) {
    ProjectScan scan;
    scan.records = std::move(by_project[name]);
    std::stable_sort(scan.records.begin(), scan.records.end(),
                     [](const CommentContextRecord& a, const CommentContextRecord& b) {
                       return std::tie(a.file, a.span.start_line) < std::tie(b.file, b.span.start_line);
                     });
    for (const auto& r : scan.records) {
      if (scan.files.empty() || scan.files.back() != r.file) scan.files.push_back(r.file);
    }
    scan.summary = summarize_project(name, sizes[name], scan.records);
    write_cache(config.cache_dir, scan, settings, Json::array(), {});
    emit(result, std::move(scan), {}, sink);
  }
  write_index(config.cache_dir, order, "export");
  return result;
}

std::vector<std::string> string_list(const Json& j, const std::string& key) {
  if (!j.is_array()) throw ConfigError("config: '" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ConfigError("config: '" + key + "' must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

ColumnMapping mapping_from(const Json& j, const std::string& key) {
  if (!j.is_object()) throw ConfigError("config: '" + key + "' must be an object");
  std::map<std::string, std::string> names;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ConfigError("config: '" + key + "." + k + "' must be a string");
    names[k] = v.get<std::string>();
  }
  return ColumnMapping(std::move(names));
}

}  // namespace

// ---------------------------------------------------------------------------

ColumnMapping ColumnMapping::parse(std::string_view spec) {
  std::map<std::string, std::string> names;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string pair = trim(spec.substr(start, comma - start));
    start = comma + 1;
    if (pair.empty()) continue;
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size()) {
      throw ConfigError("column mapping: expected logical=actual, got '" + pair + "'");
    }
    names[trim(pair.substr(0, eq))] = trim(pair.substr(eq + 1));
  }
  return ColumnMapping(std::move(names));
}

const std::string& ColumnMapping::column(const std::string& logical) const {
  auto it = names_.find(logical);
  return it == names_.end() ? logical : it->second;
}

LabelTableLoad parse_external_labels(std::string_view csv, const ColumnMapping& columns) {
  const std::string what = "label table";
  const CsvTable table = read_csv_table(csv, what);
  const std::size_t c_project = table.require(columns, "project", what);
  const std::size_t c_file = table.require(columns, "file", what);
  const std::size_t c_line = table.require(columns, "line", what);
  const std::size_t c_label = table.require(columns, "label", what);
  const auto c_hash = table.index(columns, "comment_hash");
  const auto c_provenance = table.index(columns, "provenance");

  LabelTableLoad out;
  out.rows_read = table.rows.size();
  std::map<std::tuple<std::string, std::string, int>, int> seen;
  std::vector<std::string> duplicates;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const CsvRow& row = table.rows[r];
    const int line_no = table.lines[r];
    if (row.size() != table.header.size()) {
      out.rejects.push_back({line_no, "expected " + std::to_string(table.header.size()) +
                                          " fields, got " + std::to_string(row.size())});
      continue;
    }
    ExternalLabel label;
    label.project = trim(row[c_project]);
    label.file = trim(row[c_file]);
    label.hash = cell(row, c_hash).value_or("");
    label.provenance = cell(row, c_provenance).value_or("");
    auto line = parse_int(trim(row[c_line]));
    const std::string label_text = trim(row[c_label]);
    auto kind = label_text == "NOT_SATD" ? std::nullopt : parse_satd_kind(label_text);
    if (label.project.empty() || label.file.empty()) {
      out.rejects.push_back({line_no, "empty project or file"});
      continue;
    }
    if (!line || *line < 1) {
      out.rejects.push_back({line_no, "bad line number '" + trim(row[c_line]) + "'"});
      continue;
    }
    if (!kind) {
      out.rejects.push_back({line_no, "bad label value '" + label_text + "'"});
      continue;
    }
    label.line = *line;
    label.kind = *kind;
    auto [it, fresh] = seen.emplace(std::tuple{label.project, label.file, label.line}, line_no);
    if (!fresh) {
      duplicates.push_back(label.project + ":" + label.file + ":" + std::to_string(label.line));
      continue;
    }
    out.table.push_back(std::move(label));
  }
  if (!duplicates.empty()) {
    std::string msg = "label table: duplicate key";
    for (const auto& d : duplicates) msg += " " + d;
    throw IngestionError(msg);
  }
  return out;
}

LabelTableLoad load_external_labels(const fs::path& file, const ColumnMapping& columns) {
  std::string text;
  try {
    text = read_file(file);
  } catch (const FileError& e) {
    throw IngestionError(std::string("label table: ") + e.what());
  }
  return parse_external_labels(text, columns);
}

void CorpusConfig::validate() const {
  if (workers < 1) throw ConfigError("config: workers must be at least 1");
  if (cache_dir.empty()) {
    throw ConfigError("config: no cache directory; set cache_dir or SATD_SCOPE_CACHE");
  }
  if (export_source) return;
  if (roots.empty()) throw ConfigError("config: roots must not be empty");
  for (const auto& root : roots) {
    if (!fs::is_directory(root)) throw ConfigError("config: root does not exist: " + root.string());
  }
  if (include.empty()) throw ConfigError("config: include must not be empty");
}

CorpusConfig parse_corpus_config(std::string_view text, const fs::path& base_dir) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  static const std::set<std::string> kKeys = {
      "roots",   "include", "exclude",   "patterns",     "labels",        "label_columns",
      "export",  "workers", "cache_dir", "project_mode", "warn_threshold"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) throw ConfigError("config: unknown key '" + key + "'");
  }
  auto resolve = [&](const Json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError("config: '" + key + "' must be a string");
    fs::path p = v.get<std::string>();
    return p.is_absolute() ? p : base_dir / p;
  };

  CorpusConfig c;
  if (j.contains("roots")) {
    for (const auto& r : string_list(j["roots"], "roots")) c.roots.push_back(resolve(r, "roots"));
  }
  if (j.contains("include")) c.include = string_list(j["include"], "include");
  if (j.contains("exclude")) c.exclude = string_list(j["exclude"], "exclude");
  if (j.contains("patterns")) c.patterns_file = resolve(j["patterns"], "patterns");
  if (j.contains("labels")) c.labels_file = resolve(j["labels"], "labels");
  if (j.contains("label_columns")) c.label_columns = mapping_from(j["label_columns"], "label_columns");
  if (j.contains("export")) {
    const Json& e = j["export"];
    if (!e.is_object() || !e.contains("records") || !e.contains("projects")) {
      throw ConfigError("config: 'export' needs 'records' and 'projects'");
    }
    ExportSource src;
    src.records_csv = resolve(e["records"], "export.records");
    src.projects_csv = resolve(e["projects"], "export.projects");
    if (e.contains("columns")) src.columns = mapping_from(e["columns"], "export.columns");
    c.export_source = std::move(src);
  }
  if (j.contains("workers")) {
    if (!j["workers"].is_number_integer() || j["workers"].get<long long>() < 1) {
      throw ConfigError("config: workers must be an integer of at least 1");
    }
    c.workers = j["workers"].get<unsigned>();
  }
  if (j.contains("warn_threshold")) {
    if (!j["warn_threshold"].is_number_integer() || j["warn_threshold"].get<long long>() < 0) {
      throw ConfigError("config: warn_threshold must be a non-negative integer");
    }
    c.warn_threshold = j["warn_threshold"].get<std::size_t>();
  }
  if (j.contains("project_mode")) {
    const Json& m = j["project_mode"];
    if (m == "subdirs") {
      c.project_mode = ProjectMode::kSubdirectories;
    } else if (m == "root") {
      c.project_mode = ProjectMode::kRoot;
    } else {
      throw ConfigError("config: project_mode must be \"subdirs\" or \"root\"");
    }
  }
  if (j.contains("cache_dir")) {
    c.cache_dir = resolve(j["cache_dir"], "cache_dir");
  } else if (const char* env = std::getenv("SATD_SCOPE_CACHE"); env && *env) {
    c.cache_dir = env;
  }
  c.validate();
  return c;
}

CorpusConfig load_corpus_config(const fs::path& file) {
  std::string text;
  try {
    text = read_file(file);
  } catch (const FileError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_corpus_config(text, file.parent_path());
}

CorpusScan scan_corpus(const CorpusConfig& config, const ProjectSink& sink) {
  config.validate();
  return config.export_source ? scan_export(config, sink) : scan_sources(config, sink);
}

std::vector<ProjectSummary> load_cached_summaries(const fs::path& cache_dir) {
  const fs::path index_file = cache_dir / "corpus.json";
  const std::string hint = "; run `satd-scope scan --config <file>` to build it";
  if (!fs::exists(index_file)) {
    throw ConfigError("no scan cache in " + cache_dir.string() + hint);
  }
  std::vector<ProjectSummary> out;
  try {
    Json index = Json::parse(read_file(index_file));
    if (index.at("schema") != kIndexSchema) throw std::invalid_argument("unknown index schema");
    for (const auto& entry : index.at("projects")) {
      const std::string project = entry.at("project").get<std::string>();
      Json summary = Json::parse(read_file(summary_path(cache_dir, project)));
      if (summary.at("schema") != kSummarySchema || summary.at("project") != project) {
        throw std::invalid_argument("summary does not match index for " + project);
      }
      const std::string bytes = read_file(records_path(cache_dir, project));
      if (summary.at("records").at("content_hash") != hex64(fnv1a(bytes))) {
        throw std::invalid_argument("records file of " + project + " fails verification");
      }
      out.push_back(json_io::summary_from_json(summary));
    }
  } catch (const std::exception& e) {
    throw ConfigError("scan cache in " + cache_dir.string() + " is unusable (" + e.what() + ")" +
                      hint);
  }
  return out;
}

std::vector<CommentContextRecord> load_cached_records(const fs::path& cache_dir,
                                                      const std::string& project) {
  try {
    Json summary = Json::parse(read_file(summary_path(cache_dir, project)));
    const std::string bytes = read_file(records_path(cache_dir, project));
    if (summary.at("records").at("content_hash") != hex64(fnv1a(bytes))) {
      throw std::invalid_argument("records file fails verification");
    }
    return parse_records(bytes);
  } catch (const std::exception& e) {
    throw ConfigError("cached records of " + project + " are unusable (" + e.what() +
                      "); run `satd-scope scan --config <file>` again");
  }
}

}  // namespace satd
