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

#include "satd/record.hpp"

#include <cstdio>

namespace satd {

std::string_view to_string(SatdStatus status) {
  return status == SatdStatus::kSatd ? "SATD" : "NOT_SATD";
}

std::string_view to_string(SatdKind kind) {
  switch (kind) {
    case SatdKind::kEtf:
      return "ETF";
    case SatdKind::kHtfNoisy:
      return "HTF_NOISY";
    case SatdKind::kHtfValidated:
      return "HTF_VALIDATED";
    case SatdKind::kNone:
      return "NONE";
  }
  return "NONE";
}

std::string_view to_string(LabelSource source) {
  return source == LabelSource::kRule ? "rule" : "external";
}

std::string_view to_string(Locality locality) {
  return locality == Locality::kHeader ? "HEADER" : "NON_HEADER";
}

std::optional<SatdStatus> parse_satd_status(std::string_view name) {
  if (name == "SATD") return SatdStatus::kSatd;
  if (name == "NOT_SATD") return SatdStatus::kNotSatd;
  return std::nullopt;
}

std::optional<SatdKind> parse_satd_kind(std::string_view name) {
  if (name == "ETF") return SatdKind::kEtf;
  if (name == "HTF_NOISY") return SatdKind::kHtfNoisy;
  if (name == "HTF_VALIDATED") return SatdKind::kHtfValidated;
  if (name == "NONE" || name == "NOT_SATD") return SatdKind::kNone;
  return std::nullopt;
}

std::optional<LabelSource> parse_label_source(std::string_view name) {
  if (name == "rule") return LabelSource::kRule;
  if (name == "external") return LabelSource::kExternal;
  return std::nullopt;
}

std::optional<Locality> parse_locality(std::string_view name) {
  if (name == "HEADER") return Locality::kHeader;
  if (name == "NON_HEADER") return Locality::kNonHeader;
  return std::nullopt;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string comment_hash(const CommentContextRecord& record) {
  std::string key = record.project;
  key += '\0';
  key += record.file;
  key += '\0';
  key += std::to_string(record.span.start_line);
  key += '\0';
  key += record.span.text;
  return hex64(fnv1a(key));
}

}  // namespace satd
