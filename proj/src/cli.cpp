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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>

#include "CLI11.hpp"
#include "satd/corpus.hpp"
#include "satd/errors.hpp"
#include "satd/report.hpp"
#include "satd/stats.hpp"

namespace satd::cli {
namespace {

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + file.string());
  out << text;
  if (!out) throw ConfigError("write failed: " + file.string());
}

std::string read_text(const fs::path& file, const std::string& what) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + what + " " + file.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct ScanArgs {
  std::string config;
  unsigned workers = 0;
};

struct AnalyzeArgs {
  std::string cache;
  std::string plan;
  std::string out = ".";
};

struct ReportArgs {
  std::string metrics;
  std::string tests;
  std::vector<std::string> formats;
  std::string out = ".";
};

int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err) {
  CorpusConfig config = load_corpus_config(args.config);
  if (args.workers > 0) config.workers = args.workers;
  std::size_t records = 0;
  CorpusScan scan = scan_corpus(config, [&](const ProjectScan& p) { records += p.records.size(); });
  std::size_t cached = 0;
  for (const auto& p : scan.projects) cached += p.from_cache;

  for (const auto& w : scan.warnings) {
    err << "warning: " << w.project << (w.file.empty() ? "" : "/" + w.file) << ": " << w.message
        << "\n";
  }
  for (const auto& r : scan.label_rejects) {
    err << "warning: rejected input row at line " << r.line << ": " << r.reason << "\n";
  }
  for (const auto& l : scan.labels_unmatched) {
    err << "note: label did not match a comment: " << l.project << ":" << l.file << ":" << l.line
        << "\n";
  }
  out << "scanned " << scan.projects.size() << " projects (" << cached << " from cache), "
      << records << " comments, " << scan.diagnostics.size() << " diagnostics, "
      << scan.warnings.size() << " warnings\n";
  if (scan.label_rows > 0) {
    out << "external rows: " << scan.label_rows << " read, " << scan.label_rejects.size()
        << " rejected, " << scan.labels_matched << " labels matched\n";
  }
  out << "cache: " << config.cache_dir.string() << "\n";
  if (scan.warnings.size() > config.warn_threshold) {
    err << "error: " << scan.warnings.size() << " warnings exceed the threshold of "
        << config.warn_threshold << "\n";
    return kExitWarnings;
  }
  return kExitOk;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  std::string cache = args.cache;
  if (cache.empty()) {
    const char* env = std::getenv("SATD_SCOPE_CACHE");
    if (!env || !*env) {
      throw ConfigError("no cache directory: pass --cache or set SATD_SCOPE_CACHE "
                        "(produced by `satd-scope scan --config <file>`)");
    }
    cache = env;
  }
  const std::vector<PlanEntry> plan = load_plan(args.plan);
  const std::vector<ProjectSummary> projects = load_cached_summaries(cache);
  const std::vector<TestResult> results = hypothesis_suite(projects, plan);

  fs::create_directories(args.out);
  write_text(fs::path(args.out) / "metrics.json", metrics_document(projects));
  write_text(fs::path(args.out) / "tests.json", tests_document(results));
  std::size_t skipped = 0, rejected = 0;
  for (const auto& r : results) {
    skipped += r.skipped;
    rejected += r.reject;
  }
  out << "analyzed " << projects.size() << " projects; " << results.size() << " tests, "
      << rejected << " significant, " << skipped << " skipped\n";
  return kExitOk;
}

int cmd_report(const ReportArgs& args, std::ostream& out) {
  const fs::path metrics_path = args.metrics;
  const std::vector<ProjectSummary> projects =
      parse_metrics_document(read_text(metrics_path, "metrics file"));
  std::vector<TestResult> tests;
  fs::path tests_path = args.tests;
  if (tests_path.empty()) tests_path = metrics_path.parent_path() / "tests.json";
  if (fs::exists(tests_path)) {
    tests = parse_tests_document(read_text(tests_path, "tests file"));
  } else if (!args.tests.empty()) {
    throw ConfigError("tests file not found: " + args.tests);
  }

  bool md = false, csv = false, json = false;
  std::vector<std::string> formats = args.formats;
  if (formats.empty()) formats = {"md"};
  for (const auto& f : formats) {
    if (f == "md") {
      md = true;
    } else if (f == "csv") {
      csv = true;
    } else if (f == "json") {
      json = true;
    } else {
      throw ConfigError("unknown format '" + f + "' (expected md, csv or json)");
    }
  }

  const ReportBundle bundle = build_report(projects, tests);
  const fs::path dir = args.out;
  fs::create_directories(dir);
  std::size_t written = 0;
  if (md) {
    write_text(dir / "report.md", render_markdown(bundle));
    ++written;
  }
  if (csv) {
    for (const auto& [name, text] : render_csv(bundle)) {
      write_text(dir / name, text);
      ++written;
    }
  }
  if (json) {
    write_text(dir / "report.json", render_json(bundle));
    ++written;
  }
  out << "wrote " << written << " files to " << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locate self-admitted technical debt in Java code and relate it to code context"};
  app.name(args.empty() ? "satd-scope" : args[0]);
  app.require_subcommand(1);

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "Scan projects and write the per-project cache");
  scan->add_option("--config", scan_args.config, "Corpus configuration (JSON)")->required();
  scan->add_option("--workers", scan_args.workers, "Override the configured worker count")
      ->check(CLI::PositiveNumber);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Compute metrics and run the planned tests");
  analyze->add_option("--cache", analyze_args.cache, "Cache directory (default $SATD_SCOPE_CACHE)");
  analyze->add_option("--plan", analyze_args.plan, "Comparison plan file")->required();
  analyze->add_option("--out", analyze_args.out, "Output directory")
      ->capture_default_str();

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "Render tables from metrics.json");
  report->add_option("--metrics", report_args.metrics, "metrics.json from analyze")->required();
  report->add_option("--tests", report_args.tests, "tests.json (default: next to metrics.json)");
  report->add_option("--format", report_args.formats, "md, csv or json; repeatable")
      ->delimiter(',');
  report->add_option("--out", report_args.out, "Output directory")
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("satd-scope");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*scan) return cmd_scan(scan_args, out, err);
    if (*analyze) return cmd_analyze(analyze_args, out);
    return cmd_report(report_args, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IngestionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitWarnings;
  }
}

}  // namespace satd::cli
