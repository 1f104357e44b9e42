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

// The per-comment analysis record and its SATD label.

#ifndef SATD_RECORD_HPP_
#define SATD_RECORD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "satd/scanner.hpp"
#include "satd/taxonomy.hpp"

namespace satd {

enum class SatdStatus { kNotSatd, kSatd };
enum class SatdKind { kEtf, kHtfNoisy, kHtfValidated, kNone };
enum class LabelSource { kRule, kExternal };

// status == kNotSatd exactly when kind == kNone. A rule label is always an
// ETF match carrying its pattern id. Comments that no rule matched and no
// external table mentions carry no source.
struct SatdLabel {
  SatdStatus status = SatdStatus::kNotSatd;
  SatdKind kind = SatdKind::kNone;
  std::optional<LabelSource> source;
  std::optional<std::string> matched_pattern;

  bool is_satd() const { return status == SatdStatus::kSatd; }

  static SatdLabel not_satd() { return {}; }
  static SatdLabel rule(std::string pattern_id) {
    return {SatdStatus::kSatd, SatdKind::kEtf, LabelSource::kRule, std::move(pattern_id)};
  }
  static SatdLabel external(SatdKind kind) {
    return {kind == SatdKind::kNone ? SatdStatus::kNotSatd : SatdStatus::kSatd, kind,
            LabelSource::kExternal, std::nullopt};
  }

  friend bool operator==(const SatdLabel&, const SatdLabel&) = default;
};

enum class Locality { kHeader, kNonHeader };

struct CommentContextRecord {
  std::string project;
  std::string file;
  CommentSpan span;
  Locality locality = Locality::kNonHeader;
  std::optional<HeaderKind> header_kind;  // present exactly for kHeader
  std::optional<StatementContext> preceding;
  std::optional<StatementContext> succeeding;
  SatdLabel label;

  bool is_header() const { return locality == Locality::kHeader; }

  friend bool operator==(const CommentContextRecord&, const CommentContextRecord&) = default;
};

std::string_view to_string(SatdStatus status);
std::string_view to_string(SatdKind kind);
std::string_view to_string(LabelSource source);
std::string_view to_string(Locality locality);

std::optional<SatdStatus> parse_satd_status(std::string_view name);
// Accepts ETF, HTF_NOISY, HTF_VALIDATED, NONE and NOT_SATD (as NONE).
std::optional<SatdKind> parse_satd_kind(std::string_view name);
std::optional<LabelSource> parse_label_source(std::string_view name);
std::optional<Locality> parse_locality(std::string_view name);

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

// Content-derived identity of a comment: project, file, start line and text.
std::string comment_hash(const CommentContextRecord& record);

}  // namespace satd

#endif  // SATD_RECORD_HPP_
