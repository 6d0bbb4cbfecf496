// Copyright 2026 The ifcpp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IFCPP_METRICS_METRICS_HPP_
#define IFCPP_METRICS_METRICS_HPP_

#include <string>
#include <vector>

// Annotation and API-usage counting over a source tree. Counts are exact
// token matches over non-comment, non-literal source text (the shared lexer
// guarantees that), so a mention in a comment or string never counts.

namespace ifcpp {

struct ApiUsageCounts {
  int declassify = 0;
  int fcall_mcall = 0;
  int pc_block = 0;
  int relabel = 0;
  int unchecked = 0;
  // Lines containing at least one labeling token (Labeled, label_new,
  // lift_public): the label-annotation footprint of the tree.
  int labeled_annotations = 0;

  std::vector<std::string> scanned_files;
  std::vector<std::string> skipped_files;
};

// Counts over one source text.
ApiUsageCounts count_api_usage_in_source(const std::string& source);

// Counts over a file or a directory tree (C++ sources and headers only).
// Unreadable files are listed in skipped_files; counts still cover the rest.
ApiUsageCounts count_api_usage(const std::string& path);

std::string counts_to_json(const ApiUsageCounts& counts);

}  // namespace ifcpp

#endif  // IFCPP_METRICS_METRICS_HPP_
