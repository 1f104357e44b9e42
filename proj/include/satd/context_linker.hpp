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

// Joins scanner output into one CommentContextRecord per logical comment.

#ifndef SATD_CONTEXT_LINKER_HPP_
#define SATD_CONTEXT_LINKER_HPP_

#include <string>
#include <vector>

#include "satd/record.hpp"
#include "satd/satd_detector.hpp"
#include "satd/scanner.hpp"
#include "satd/source_file.hpp"

namespace satd {

// A comment is HEADER when it is not trailing and precedes a header
// construct; otherwise NON_HEADER with both neighbours filled in. Header
// records keep their neighbours too, but metrics ignore the preceding one.
// Labels come from `patterns`; external labels are applied afterwards.
std::vector<CommentContextRecord> link(const ScannedFile& scanned, const PatternSet& patterns,
                                       const std::string& project);

// Convenience overload for an explicit comment list, which must come from
// extract_comments(file). Throws UsageError for a foreign comment.
std::vector<CommentContextRecord> link(const SourceFile& file,
                                       const std::vector<CommentSpan>& comments,
                                       const PatternSet& patterns, const std::string& project);

}  // namespace satd

#endif  // SATD_CONTEXT_LINKER_HPP_
