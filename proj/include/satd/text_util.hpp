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

// Small text utilities for the corpus layer: path globs and CSV.

#ifndef SATD_TEXT_UTIL_HPP_
#define SATD_TEXT_UTIL_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace satd {

// Glob over '/'-separated relative paths. '*' and '?' stay within one path
// segment; '**' spans segments, and "**/" also matches zero segments.
bool glob_match(std::string_view pattern, std::string_view path);

using CsvRow = std::vector<std::string>;

struct CsvParseResult {
  std::vector<CsvRow> rows;
  std::vector<int> row_lines;  // 1-based physical line where each row starts
  std::string error;           // non-empty when the input is not valid CSV
  int error_line = 0;
};

// RFC 4180: comma separated, '"' quoting with "" escapes, CRLF or LF.
CsvParseResult parse_csv(std::string_view text);

// Quotes a field when it contains a comma, quote, or line break.
std::string csv_field(std::string_view value);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace satd

#endif  // SATD_TEXT_UTIL_HPP_
