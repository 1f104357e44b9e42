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

// JSON forms of records, metric sets and project summaries. Field order is
// fixed so serialized output is byte-stable.

#ifndef SATD_SRC_JSON_IO_HPP_
#define SATD_SRC_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "satd/metrics.hpp"
#include "satd/record.hpp"

namespace satd::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const CommentContextRecord& record);
Json to_json(const MetricSet& metrics);
Json to_json(const ProjectSize& size);
Json to_json(const ProjectSummary& summary);

// These throw nlohmann::json::exception or std::invalid_argument on a
// malformed document.
CommentContextRecord record_from_json(const Json& j);
MetricSet metrics_from_json(const Json& j);
ProjectSize size_from_json(const Json& j);
ProjectSummary summary_from_json(const Json& j);

// One JSON-lines row: the record object with a trailing "row_hash" over the
// rest of the row, newline-terminated.
std::string record_line(const CommentContextRecord& record);

// Parses a row and checks its hash. Throws std::invalid_argument when the
// row does not verify.
CommentContextRecord parse_record_line(std::string_view line);

// Null for an undefined value.
Json optional_number(const std::optional<double>& value);

}  // namespace satd::json_io

#endif  // SATD_SRC_JSON_IO_HPP_
