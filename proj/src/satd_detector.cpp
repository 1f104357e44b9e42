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

#include "satd/satd_detector.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "satd/errors.hpp"

namespace satd {
namespace {

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool equal_at(std::string_view text, std::size_t at, std::string_view needle) {
  for (std::size_t i = 0; i < needle.size(); ++i) {
    if (lower(text[at + i]) != lower(needle[i])) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void validate(const std::vector<Pattern>& patterns) {
  std::set<std::string> ids;
  for (const auto& p : patterns) {
    if (p.id.empty()) throw ConfigError("pattern with empty id");
    if (p.text.empty()) throw ConfigError("pattern '" + p.id + "' has empty text");
    if (!ids.insert(p.id).second) throw ConfigError("duplicate pattern id '" + p.id + "'");
  }
}

}  // namespace

std::string_view to_string(MatchMode mode) {
  return mode == MatchMode::kWord ? "word" : "substring";
}

std::optional<MatchMode> parse_match_mode(std::string_view name) {
  if (name == "word") return MatchMode::kWord;
  if (name == "substring") return MatchMode::kSubstring;
  return std::nullopt;
}

PatternSet::PatternSet(std::vector<Pattern> patterns, std::string version)
    : patterns_(std::move(patterns)), version_(std::move(version)) {
  validate(patterns_);
}

PatternSet PatternSet::defaults() {
  return PatternSet({{"todo", MatchMode::kWord, "TODO"},
                     {"fixme", MatchMode::kWord, "FIXME"},
                     {"hack", MatchMode::kWord, "HACK"},
                     {"xxx", MatchMode::kWord, "XXX"}},
                    "default-1");
}

PatternSet PatternSet::parse(std::string_view content, std::string version) {
  std::vector<Pattern> patterns;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= content.size()) {
    std::size_t nl = content.find('\n', start);
    std::string_view line =
        content.substr(start, nl == std::string_view::npos ? content.npos : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": expected id<TAB>mode<TAB>text");
    }
    auto mode = parse_match_mode(trim(line.substr(t1 + 1, t2 - t1 - 1)));
    if (!mode) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": mode must be 'word' or 'substring'");
    }
    patterns.push_back({std::string(trim(line.substr(0, t1))), *mode,
                        std::string(trim(line.substr(t2 + 1)))});
  }
  try {
    return PatternSet(std::move(patterns), std::move(version));
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("pattern file: ") + e.what());
  }
}

PatternSet PatternSet::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read pattern file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  return parse(content, file.filename().string() + "@" + hex64(fnv1a(content)).substr(0, 8));
}

PatternSet PatternSet::extended(const PatternSet& extra) const {
  std::vector<Pattern> all = patterns_;
  all.insert(all.end(), extra.patterns_.begin(), extra.patterns_.end());
  return PatternSet(std::move(all), version_ + "+" + extra.version_);
}

bool matches(const Pattern& pattern, std::string_view text) {
  const std::string_view needle = pattern.text;
  if (needle.empty() || needle.size() > text.size()) return false;
  for (std::size_t at = 0; at + needle.size() <= text.size(); ++at) {
    if (!equal_at(text, at, needle)) continue;
    if (pattern.mode == MatchMode::kSubstring) return true;
    const bool left_ok = at == 0 || !word_char(text[at - 1]);
    const std::size_t end = at + needle.size();
    const bool right_ok = end == text.size() || !word_char(text[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

SatdLabel match_etf(std::string_view text, const PatternSet& patterns) {
  if (patterns.empty()) throw UsageError("match_etf needs at least one pattern");
  for (const auto& p : patterns.patterns()) {
    if (matches(p, text)) return SatdLabel::rule(p.id);
  }
  return SatdLabel::not_satd();
}

LabelApplication apply_external_labels(std::vector<CommentContextRecord>& records,
                                       const ExternalLabelTable& labels) {
  using LineKey = std::tuple<std::string, std::string, int>;
  std::map<LineKey, std::size_t> by_line;
  std::map<std::string, std::size_t> by_hash;
  std::vector<std::string> duplicates;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    if (!l.hash.empty()) {
      if (!by_hash.emplace(l.hash, i).second) duplicates.push_back("hash " + l.hash);
    } else if (!by_line.emplace(LineKey{l.project, l.file, l.line}, i).second) {
      duplicates.push_back(l.project + ":" + l.file + ":" + std::to_string(l.line));
    }
  }
  if (!duplicates.empty()) {
    std::string msg = "duplicate label keys:";
    for (const auto& d : duplicates) msg += " " + d;
    throw IngestionError(msg);
  }

  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_file;
  std::map<std::string, std::size_t> hash_to_record;
  for (std::size_t r = 0; r < records.size(); ++r) {
    by_file[{records[r].project, records[r].file}].push_back(r);
    if (!by_hash.empty()) hash_to_record.emplace(comment_hash(records[r]), r);
  }

  // Record addressed by a label: an exact start-line hit beats a line that
  // falls inside a merged comment.
  auto target = [&](const ExternalLabel& l) -> std::optional<std::size_t> {
    if (!l.hash.empty()) {
      auto it = hash_to_record.find(l.hash);
      return it == hash_to_record.end() ? std::nullopt : std::optional(it->second);
    }
    auto it = by_file.find({l.project, l.file});
    if (it == by_file.end()) return std::nullopt;
    std::optional<std::size_t> inside;
    for (std::size_t r : it->second) {
      const CommentSpan& span = records[r].span;
      if (span.start_line == l.line) return r;
      if (!inside && span.start_line <= l.line && l.line <= span.end_line) inside = r;
    }
    return inside;
  };

  LabelApplication result;
  for (const auto& l : labels) {
    auto r = target(l);
    if (!r) {
      result.unmatched.push_back(l);
      continue;
    }
    records[*r].label = SatdLabel::external(l.kind);
    ++result.matched;
  }
  return result;
}

}  // namespace satd
