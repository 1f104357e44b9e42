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

// Python bindings for scanning, statistics and reporting.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "satd/context_linker.hpp"
#include "satd/corpus.hpp"
#include "satd/errors.hpp"
#include "satd/report.hpp"
#include "satd/scanner.hpp"
#include "satd/source_file.hpp"
#include "satd/stats.hpp"

namespace py = pybind11;

namespace satd {
namespace {

py::object optional_name(const std::optional<StatementContext>& context) {
  if (!context) return py::none();
  return py::str(std::string(to_string(context->category)));
}

py::dict record_dict(const CommentContextRecord& r) {
  py::dict d;
  d["project"] = r.project;
  d["file"] = r.file;
  d["start_line"] = r.span.start_line;
  d["end_line"] = r.span.end_line;
  d["start_col"] = r.span.start_col;
  d["style"] = std::string(to_string(r.span.style));
  d["trailing"] = r.span.trailing;
  d["text"] = r.span.text;
  d["locality"] = std::string(to_string(r.locality));
  d["header_kind"] = r.header_kind ? py::object(py::str(std::string(to_string(*r.header_kind))))
                                   : py::object(py::none());
  d["preceding"] = optional_name(r.preceding);
  d["succeeding"] = optional_name(r.succeeding);
  d["preceding_kind"] = r.preceding ? py::object(py::str(std::string(to_string(r.preceding->kind))))
                                    : py::object(py::none());
  d["succeeding_kind"] = r.succeeding
                             ? py::object(py::str(std::string(to_string(r.succeeding->kind))))
                             : py::object(py::none());
  d["satd"] = r.label.is_satd();
  d["satd_kind"] = std::string(to_string(r.label.kind));
  d["matched_pattern"] = r.label.matched_pattern ? py::object(py::str(*r.label.matched_pattern))
                                                 : py::object(py::none());
  return d;
}

py::list scan_source(const std::string& path, const std::string& text,
                     const std::string& project) {
  const SourceFile file = SourceFile::from_text(path, text);
  const ScannedFile scanned(file);
  py::list out;
  for (const auto& r : link(scanned, PatternSet::defaults(), project)) out.append(record_dict(r));
  return out;
}

py::dict scan(const std::filesystem::path& config_file, std::optional<unsigned> workers) {
  CorpusConfig config = load_corpus_config(config_file);
  if (workers) config.workers = *workers;
  CorpusScan result;
  {
    py::gil_scoped_release release;
    result = scan_corpus(config, [](const ProjectScan&) {});
  }
  py::list projects, warnings;
  for (const auto& p : result.projects) {
    py::dict d;
    d["project"] = p.summary.project;
    d["comments"] = p.summary.cmt_h() + p.summary.cmt_nh();
    d["code_lines"] = p.summary.size.code_lines;
    d["from_cache"] = p.from_cache;
    projects.append(d);
  }
  for (const auto& w : result.warnings) {
    warnings.append(py::make_tuple(w.project, w.file, w.message));
  }
  py::dict out;
  out["cache_dir"] = config.cache_dir;
  out["projects"] = projects;
  out["warnings"] = warnings;
  out["diagnostics"] = result.diagnostics.size();
  return out;
}

py::tuple analyze(const std::filesystem::path& cache_dir, const std::filesystem::path& plan) {
  const auto projects = load_cached_summaries(cache_dir);
  const auto results = hypothesis_suite(projects, load_plan(plan));
  return py::make_tuple(metrics_document(projects), tests_document(results));
}

py::object render(const std::string& metrics_json, const std::string& tests_json,
                  const std::string& format) {
  const auto bundle = build_report(parse_metrics_document(metrics_json),
                                   tests_json.empty() ? std::vector<TestResult>{}
                                                      : parse_tests_document(tests_json));
  if (format == "md") return py::str(render_markdown(bundle));
  if (format == "json") return py::str(render_json(bundle));
  if (format == "csv") {
    py::dict files;
    for (const auto& [name, content] : render_csv(bundle)) files[py::str(name)] = content;
    return files;
  }
  throw UsageError("unknown report format: " + format);
}

}  // namespace
}  // namespace satd

PYBIND11_MODULE(_core, m) {
  using namespace satd;
  m.doc() = "SATD localization and context analysis for Java corpora.";

  auto base = py::register_exception<Error>(m, "SatdError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IngestionError>(m, "IngestionError", base.ptr());
  py::register_exception<FileError>(m, "FileError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DegenerateSampleError>(m, "DegenerateSampleError", PyExc_ValueError);

  m.def("scan_source", &scan_source, py::arg("path"), py::arg("text"), py::arg("project") = "",
        "Extract, localize and label the comments of one Java source text.");
  m.def("scan", &scan, py::arg("config"), py::arg("workers") = py::none(),
        "Scan the corpus described by a JSON config file into its cache.");
  m.def("analyze", &analyze, py::arg("cache_dir"), py::arg("plan"),
        "Return (metrics_json, tests_json) for a scanned cache and a test plan.");
  m.def("render_report", &render, py::arg("metrics_json"), py::arg("tests_json") = "",
        py::arg("format") = "md",
        "Render a report as Markdown or JSON text, or as a dict of CSV files.");

  m.def(
      "mann_whitney_u",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const auto r = mann_whitney_u(a, b);
        py::dict d;
        d["u1"] = r.u1;
        d["u2"] = r.u2;
        d["p_value"] = r.p_value;
        d["method"] = std::string(to_string(r.method));
        return d;
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "rank_biserial",
      [](double u1, std::size_t n1, std::size_t n2) {
        const auto r = rank_biserial(u1, n1, n2);
        return py::make_tuple(r.r, std::string(to_string(r.label)));
      },
      py::arg("u1"), py::arg("n1"), py::arg("n2"));
  m.def(
      "anderson_darling",
      [](const std::vector<double>& sample, double level) {
        const auto r = anderson_darling(sample, level);
        py::dict d;
        d["a_squared"] = r.a_squared;
        d["a_squared_adjusted"] = r.a_squared_adjusted;
        d["critical_value"] = r.critical_value;
        d["reject"] = r.reject;
        return d;
      },
      py::arg("sample"), py::arg("level") = 0.05);
}
