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

#include "satd/source_file.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

#include "java_lexer.hpp"
#include "satd/errors.hpp"

namespace satd {
namespace {

constexpr std::string_view kReplacement = "\xEF\xBF\xBD";

// Length of the valid UTF-8 sequence starting at bytes[i], or 0 if invalid.
std::size_t utf8_sequence_length(std::string_view bytes, std::size_t i) {
  auto b = [&](std::size_t k) { return static_cast<unsigned char>(bytes[k]); };
  unsigned char c = b(i);
  if (c < 0x80) return 1;
  std::size_t len;
  unsigned char lo = 0x80, hi = 0xBF;
  if (c >= 0xC2 && c <= 0xDF) {
    len = 2;
  } else if (c >= 0xE0 && c <= 0xEF) {
    len = 3;
    if (c == 0xE0) lo = 0xA0;
    if (c == 0xED) hi = 0x9F;
  } else if (c >= 0xF0 && c <= 0xF4) {
    len = 4;
    if (c == 0xF0) lo = 0x90;
    if (c == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }
  if (i + len > bytes.size()) return 0;
  if (b(i + 1) < lo || b(i + 1) > hi) return 0;
  for (std::size_t k = 2; k < len; ++k) {
    if (b(i + k) < 0x80 || b(i + k) > 0xBF) return 0;
  }
  return len;
}

}  // namespace

std::string decode_utf8_lossy(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  std::string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    std::size_t len = utf8_sequence_length(bytes, i);
    if (len == 0) {
      out.append(kReplacement);
      ++i;
    } else {
      out.append(bytes.substr(i, len));
      i += len;
    }
  }
  return out;
}

SourceFile::SourceFile(std::string path, std::string text)
    : path_(std::move(path)), text_(std::move(text)) {
  if (path_.size() < 5 || path_.compare(path_.size() - 5, 5, ".java") != 0) {
    throw std::invalid_argument("not a Java source path: " + path_);
  }
  std::size_t start = 0;
  while (start < text_.size()) {
    std::size_t nl = text_.find('\n', start);
    std::size_t end = nl == std::string::npos ? text_.size() : nl;
    std::string line = text_.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines_.push_back(std::move(line));
    if (nl == std::string::npos) break;
    start = nl + 1;
  }

  std::vector<bool> is_code(lines_.size() + 2, false);
  for (const auto& tok : lexer::lex(text_).tokens) {
    if (tok.is_comment()) continue;
    for (int l = tok.line; l <= tok.end_line && l < static_cast<int>(is_code.size()); ++l) {
      is_code[l] = true;
    }
  }
  for (std::size_t l = 1; l <= lines_.size(); ++l) {
    if (is_code[l]) ++code_line_count_;
  }
}

SourceFile SourceFile::from_text(std::string path, std::string_view bytes) {
  return SourceFile(std::move(path), decode_utf8_lossy(bytes));
}

SourceFile SourceFile::load(const std::filesystem::path& file, std::string path) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FileError(path, "cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw FileError(path, "read error");
  return from_text(std::move(path), bytes);
}

}  // namespace satd
