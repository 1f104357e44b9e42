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

#ifndef SATD_SOURCE_FILE_HPP_
#define SATD_SOURCE_FILE_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace satd {

// Replaces invalid UTF-8 sequences with U+FFFD and drops a leading BOM.
std::string decode_utf8_lossy(std::string_view bytes);

// An immutable Java source file. Lines are the physical '\n'-separated lines
// with any trailing '\r' removed.
class SourceFile {
 public:
  // `path` must end in ".java". Throws std::invalid_argument otherwise.
  static SourceFile from_text(std::string path, std::string_view bytes);

  // Reads `file` from disk; `path` is the project-relative name recorded on
  // every comment. Throws FileError when the file cannot be read.
  static SourceFile load(const std::filesystem::path& file, std::string path);

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }
  const std::vector<std::string>& lines() const { return lines_; }
  std::size_t line_count() const { return lines_.size(); }
  // Lines holding at least one non-comment token.
  std::size_t code_line_count() const { return code_line_count_; }

 private:
  SourceFile(std::string path, std::string text);

  std::string path_;
  std::string text_;
  std::vector<std::string> lines_;
  std::size_t code_line_count_ = 0;
};

}  // namespace satd

#endif  // SATD_SOURCE_FILE_HPP_
