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

#include "json_io.hpp"

#include <stdexcept>

namespace satd::json_io {
namespace {

template <typename T, typename Parse>
T parse_enum(const Json& j, Parse parse, const char* what) {
  auto value = parse(j.get<std::string>());
  if (!value) throw std::invalid_argument(std::string("bad ") + what + ": " + j.dump());
  return *value;
}

Json proportion(const Proportion& p) { return Json{{"satd", p.satd}, {"total", p.total}}; }

Proportion proportion_from(const Json& j) {
  Proportion p;
  p.satd = j.at("satd").get<std::size_t>();
  p.total = j.at("total").get<std::size_t>();
  if (p.satd > p.total) throw std::invalid_argument("satd count exceeds total");
  return p;
}

Json context(const std::optional<StatementContext>& ctx) {
  if (!ctx) return nullptr;
  return Json{{"kind", to_string(ctx->kind)}, {"category", to_string(ctx->category)}};
}

std::optional<StatementContext> context_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return StatementContext(parse_enum<StatementKind>(j.at("kind"), parse_statement_kind, "kind"));
}

}  // namespace

Json optional_number(const std::optional<double>& value) {
  if (!value) return nullptr;
  return *value;
}

Json to_json(const CommentContextRecord& r) {
  Json label{{"status", to_string(r.label.status)},
             {"kind", to_string(r.label.kind)},
             {"source", r.label.source ? Json(to_string(*r.label.source)) : Json(nullptr)},
             {"pattern", r.label.matched_pattern ? Json(*r.label.matched_pattern) : Json(nullptr)}};
  return Json{{"project", r.project},
              {"file", r.file},
              {"start_line", r.span.start_line},
              {"end_line", r.span.end_line},
              {"start_col", r.span.start_col},
              {"style", to_string(r.span.style)},
              {"trailing", r.span.trailing},
              {"locality", to_string(r.locality)},
              {"header_kind", r.header_kind ? Json(to_string(*r.header_kind)) : Json(nullptr)},
              {"preceding", context(r.preceding)},
              {"succeeding", context(r.succeeding)},
              {"label", std::move(label)},
              {"text", r.span.text}};
}

CommentContextRecord record_from_json(const Json& j) {
  CommentContextRecord r;
  r.project = j.at("project").get<std::string>();
  r.file = j.at("file").get<std::string>();
  r.span.file = r.file;
  r.span.start_line = j.at("start_line").get<int>();
  r.span.end_line = j.at("end_line").get<int>();
  r.span.start_col = j.at("start_col").get<int>();
  r.span.style = parse_enum<CommentStyle>(j.at("style"), parse_comment_style, "style");
  r.span.trailing = j.at("trailing").get<bool>();
  r.span.text = j.at("text").get<std::string>();
  r.locality = parse_enum<Locality>(j.at("locality"), parse_locality, "locality");
  if (!j.at("header_kind").is_null()) {
    r.header_kind = parse_enum<HeaderKind>(j.at("header_kind"), parse_header_kind, "header kind");
  }
  if (r.header_kind.has_value() != r.is_header()) {
    throw std::invalid_argument("header_kind must be present exactly for HEADER records");
  }
  r.preceding = context_from(j.at("preceding"));
  r.succeeding = context_from(j.at("succeeding"));
  const Json& label = j.at("label");
  r.label.status = parse_enum<SatdStatus>(label.at("status"), parse_satd_status, "status");
  r.label.kind = parse_enum<SatdKind>(label.at("kind"), parse_satd_kind, "label kind");
  if (!label.at("source").is_null()) {
    r.label.source = parse_enum<LabelSource>(label.at("source"), parse_label_source, "source");
  }
  if (!label.at("pattern").is_null()) r.label.matched_pattern = label.at("pattern").get<std::string>();
  if ((r.label.status == SatdStatus::kNotSatd) != (r.label.kind == SatdKind::kNone)) {
    throw std::invalid_argument("label status and kind disagree");
  }
  return r;
}

Json to_json(const MetricSet& m) {
  Json preceding = Json::object();
  Json succeeding = Json::object();
  Json pattern = Json::object();
  for (std::size_t i = 0; i < kContextCategories.size(); ++i) {
    const std::string name(to_string(kContextCategories[i]));
    preceding[name] = proportion(m.preceding[i]);
    succeeding[name] = proportion(m.succeeding[i]);
    Json row = Json::object();
    for (std::size_t p = 0; p < kContextCategories.size(); ++p) {
      row[std::string(to_string(kContextCategories[p]))] = m.pattern[i][p];
    }
    pattern[name] = std::move(row);
  }
  Json header_succeeding = Json::object();
  for (std::size_t k = 0; k < kHeaderKinds.size(); ++k) {
    header_succeeding[std::string(to_string(kHeaderKinds[k]))] = proportion(m.header_succeeding[k]);
  }
  return Json{{"header", proportion(m.header)},
              {"nonheader", proportion(m.nonheader)},
              {"preceding", std::move(preceding)},
              {"succeeding", std::move(succeeding)},
              {"preceding_excluded", proportion(m.preceding_excluded)},
              {"succeeding_excluded", proportion(m.succeeding_excluded)},
              {"header_succeeding", std::move(header_succeeding)},
              {"pattern_by_succeeding", std::move(pattern)},
              {"pattern_total", m.pattern_total}};
}

MetricSet metrics_from_json(const Json& j) {
  MetricSet m;
  m.header = proportion_from(j.at("header"));
  m.nonheader = proportion_from(j.at("nonheader"));
  std::size_t pattern_sum = 0;
  for (std::size_t i = 0; i < kContextCategories.size(); ++i) {
    const std::string name(to_string(kContextCategories[i]));
    m.preceding[i] = proportion_from(j.at("preceding").at(name));
    m.succeeding[i] = proportion_from(j.at("succeeding").at(name));
    const Json& row = j.at("pattern_by_succeeding").at(name);
    for (std::size_t p = 0; p < kContextCategories.size(); ++p) {
      m.pattern[i][p] = row.at(std::string(to_string(kContextCategories[p]))).get<std::size_t>();
      pattern_sum += m.pattern[i][p];
    }
  }
  m.preceding_excluded = proportion_from(j.at("preceding_excluded"));
  m.succeeding_excluded = proportion_from(j.at("succeeding_excluded"));
  for (std::size_t k = 0; k < kHeaderKinds.size(); ++k) {
    m.header_succeeding[k] =
        proportion_from(j.at("header_succeeding").at(std::string(to_string(kHeaderKinds[k]))));
  }
  m.pattern_total = j.at("pattern_total").get<std::size_t>();
  if (pattern_sum != m.pattern_total) throw std::invalid_argument("pattern grid does not sum to total");
  return m;
}

Json to_json(const ProjectSize& s) {
  return Json{{"files", s.files},
              {"code_lines", s.code_lines},
              {"kloc", s.kloc},
              {"bucket", to_string(s.bucket)},
              {"analyzable", s.analyzable}};
}

ProjectSize size_from_json(const Json& j) {
  ProjectSize s;
  s.files = j.at("files").get<std::size_t>();
  s.code_lines = j.at("code_lines").get<std::size_t>();
  s.kloc = j.at("kloc").get<double>();
  s.bucket = parse_enum<SizeBucket>(j.at("bucket"), parse_size_bucket, "bucket");
  s.analyzable = j.at("analyzable").get<bool>();
  return s;
}

Json to_json(const ProjectSummary& s) {
  return Json{{"project", s.project}, {"size", to_json(s.size)}, {"metrics", to_json(s.metrics)}};
}

ProjectSummary summary_from_json(const Json& j) {
  return ProjectSummary{j.at("project").get<std::string>(), size_from_json(j.at("size")),
                        metrics_from_json(j.at("metrics"))};
}

std::string record_line(const CommentContextRecord& record) {
  Json row = to_json(record);
  row["row_hash"] = hex64(fnv1a(row.dump()));
  return row.dump() + "\n";
}

CommentContextRecord parse_record_line(std::string_view line) {
  Json row = Json::parse(line.begin(), line.end());
  if (!row.is_object() || !row.contains("row_hash")) throw std::invalid_argument("row without hash");
  const std::string stored = row.at("row_hash").get<std::string>();
  row.erase("row_hash");
  if (hex64(fnv1a(row.dump())) != stored) throw std::invalid_argument("row hash mismatch");
  return record_from_json(row);
}

}  // namespace satd::json_io
