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

#include "metrics/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "support/lexer.hpp"
#include "support/subprocess.hpp"

namespace ifcpp {

namespace {

bool is_source_file(const std::filesystem::path& p) {
  static const std::set<std::string> exts = {".cpp", ".cc", ".cxx", ".hpp",
                                             ".h",   ".hh", ".ipp"};
  return exts.count(p.extension().string()) > 0;
}

}  // namespace

ApiUsageCounts count_api_usage_in_source(const std::string& source) {
  ApiUsageCounts counts;
  std::set<int> annotated_lines;
  for (const Token& t : lex(source)) {
    if (t.kind != TokenKind::kIdentifier) continue;
    if (t.text == "declassify") ++counts.declassify;
    if (t.text == "fcall" || t.text == "mcall") ++counts.fcall_mcall;
    if (t.text == "pc_block") ++counts.pc_block;
    if (t.text == "relabel") ++counts.relabel;
    if (t.text == "unchecked_operation") ++counts.unchecked;
    if (t.text == "Labeled" || t.text == "label_new" ||
        t.text == "lift_public") {
      annotated_lines.insert(t.line);
    }
  }
  counts.labeled_annotations = static_cast<int>(annotated_lines.size());
  return counts;
}

ApiUsageCounts count_api_usage(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) {
    throw std::runtime_error("metrics: no such path: " + path);
  }

  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (entry.is_regular_file() && is_source_file(entry.path())) {
        files.push_back(entry.path().string());
      }
    }
  } else {
    files.push_back(path);
  }
  std::sort(files.begin(), files.end());

  ApiUsageCounts total;
  for (const std::string& file : files) {
    try {
      ApiUsageCounts one = count_api_usage_in_source(read_file(file));
      total.declassify += one.declassify;
      total.fcall_mcall += one.fcall_mcall;
      total.pc_block += one.pc_block;
      total.relabel += one.relabel;
      total.unchecked += one.unchecked;
      total.labeled_annotations += one.labeled_annotations;
      total.scanned_files.push_back(file);
    } catch (const std::exception&) {
      total.skipped_files.push_back(file);
    } catch (const LexError&) {
      total.skipped_files.push_back(file);
    }
  }
  return total;
}

std::string counts_to_json(const ApiUsageCounts& counts) {
  nlohmann::json j;
  j["declassify"] = counts.declassify;
  j["fcall_mcall"] = counts.fcall_mcall;
  j["pc_block"] = counts.pc_block;
  j["relabel"] = counts.relabel;
  j["unchecked_operation"] = counts.unchecked;
  j["labeled_annotations"] = counts.labeled_annotations;
  j["scanned_files"] = counts.scanned_files;
  j["skipped_files"] = counts.skipped_files;
  return j.dump(2);
}

}  // namespace ifcpp
