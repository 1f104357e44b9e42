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

#include "satd/context_linker.hpp"

#include "satd/errors.hpp"

namespace satd {
namespace {

CommentContextRecord link_one(const ScannedFile& scanned, std::size_t index,
                              const PatternSet& patterns, const std::string& project) {
  const CommentSpan& span = scanned.comments()[index];
  CommentContextRecord r;
  r.project = project;
  r.file = scanned.path();
  r.span = span;
  r.preceding = scanned.preceding(index);
  r.succeeding = scanned.succeeding(index);
  if (!span.trailing) r.header_kind = scanned.header_construct(index);
  r.locality = r.header_kind ? Locality::kHeader : Locality::kNonHeader;
  r.label = match_etf(span.text, patterns);
  return r;
}

}  // namespace

std::vector<CommentContextRecord> link(const ScannedFile& scanned, const PatternSet& patterns,
                                       const std::string& project) {
  std::vector<CommentContextRecord> out;
  out.reserve(scanned.comments().size());
  for (std::size_t i = 0; i < scanned.comments().size(); ++i) {
    out.push_back(link_one(scanned, i, patterns, project));
  }
  return out;
}

std::vector<CommentContextRecord> link(const SourceFile& file,
                                       const std::vector<CommentSpan>& comments,
                                       const PatternSet& patterns, const std::string& project) {
  ScannedFile scanned(file);
  std::vector<CommentContextRecord> out;
  out.reserve(comments.size());
  for (const auto& c : comments) {
    auto index = scanned.find_comment(c.start_line, c.start_col);
    if (!index) {
      throw UsageError(file.path() + ": comment at line " + std::to_string(c.start_line) +
                       " does not belong to this file");
    }
    out.push_back(link_one(scanned, *index, patterns, project));
  }
  return out;
}

}  // namespace satd
