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

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "metrics/metrics.hpp"

int main(int argc, char** argv) {
  CLI::App app{"metrics - annotation and API usage counts for IFC sources"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "count API usage under a path");
  std::string path;
  bool as_json = false;
  count->add_option("path", path, "file or directory")->required();
  count->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    ifcpp::ApiUsageCounts counts = ifcpp::count_api_usage(path);
    if (as_json) {
      std::cout << ifcpp::counts_to_json(counts) << "\n";
    } else {
      std::printf("declassify            %d\n", counts.declassify);
      std::printf("fcall/mcall           %d\n", counts.fcall_mcall);
      std::printf("pc_block              %d\n", counts.pc_block);
      std::printf("relabel               %d\n", counts.relabel);
      std::printf("unchecked_operation   %d\n", counts.unchecked);
      std::printf("labeled annotations   %d\n", counts.labeled_annotations);
      std::printf("files scanned         %zu\n", counts.scanned_files.size());
      if (!counts.skipped_files.empty()) {
        std::printf("skipped files:\n");
        for (const auto& f : counts.skipped_files) {
          std::printf("  %s\n", f.c_str());
        }
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 0;
}
