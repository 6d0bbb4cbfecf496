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

// Corpus harness CLI: `run` compiles every manifest case in isolation and
// checks verdicts, diagnostics, and runtime oracles; `bench` measures the
// clean-build overhead of an instrumented project over its baseline.

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "harness/bench.hpp"
#include "harness/corpus.hpp"

namespace {

std::string executable_dir() {
  char buf[4096];
  ssize_t n = ::readlink("/proc/self/exe", buf, sizeof(buf) - 1);
  if (n <= 0) return ".";
  buf[n] = '\0';
  return std::filesystem::path(buf).parent_path().string();
}

ifcpp::ToolchainConfig make_config(const std::string& cxx,
                                   const std::vector<std::string>& includes,
                                   const std::string& ifcpp_bin) {
  ifcpp::ToolchainConfig config;
  config.cxx = cxx;
  config.include_dirs = includes;
  config.ifcpp_bin =
      ifcpp_bin.empty() ? executable_dir() + "/ifcpp" : ifcpp_bin;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus - verification harness for the IFC library"};
  app.require_subcommand(1);

  std::string cxx, ifcpp_bin;
  std::vector<std::string> includes;
  bool as_json = false;
  app.add_option("--cxx", cxx, "host compiler (default: $CXX or c++)");
  app.add_option("-I,--include", includes, "include directories");
  app.add_option("--ifcpp", ifcpp_bin,
                 "rewriter binary (default: next to this one)");
  app.add_flag("--json", as_json, "emit JSON instead of text");

  auto* run = app.add_subcommand("run", "run a corpus manifest");
  run->fallthrough();
  std::string manifest, filter;
  int jobs = 0;
  bool check_fixes = false;
  run->add_option("manifest", manifest, "manifest file")->required();
  run->add_option("--filter", filter, "only cases of this category");
  run->add_option("--jobs", jobs, "parallel workers (default: all cores)");
  run->add_flag("--check-fixes", check_fixes,
                "also verify each reject case compiles once its in-file fix "
                "is applied");

  auto* bench = app.add_subcommand(
      "bench", "measure clean-build overhead: project vs baseline");
  bench->fallthrough();
  std::string project_dir, baseline_dir;
  int reps = 5;
  bench->add_option("project", project_dir, "instrumented project directory")
      ->required();
  bench->add_option("baseline", baseline_dir, "baseline project directory")
      ->required();
  bench->add_option("--reps", reps, "repetitions (minimum 5)");

  CLI11_PARSE(app, argc, argv);

  try {
    ifcpp::ToolchainConfig config = make_config(cxx, includes, ifcpp_bin);
    if (run->parsed()) {
      auto cases = ifcpp::parse_manifest(manifest);
      ifcpp::CorpusReport report =
          ifcpp::run_corpus(config, cases, filter, jobs);
      if (as_json) {
        std::cout << ifcpp::report_to_json(report) << "\n";
      } else {
        std::cout << ifcpp::format_report(report);
      }
      bool ok = report.all_passed();
      if (check_fixes) {
        for (const auto& [name, result] : ifcpp::run_fix_checks(config, cases)) {
          const auto& [fixed_ok, detail] = result;
          if (!as_json) {
            std::cout << (fixed_ok ? "PASS" : "FAIL") << " fix:" << name
                      << (fixed_ok ? "" : "  " + detail) << "\n";
          }
          ok = ok && fixed_ok;
        }
      }
      return ok ? 0 : 1;
    }
    if (bench->parsed()) {
      ifcpp::BenchResult result = ifcpp::measure_compile_overhead(
          config, project_dir, baseline_dir, reps);
      if (as_json) {
        std::cout << ifcpp::bench_to_json(result) << "\n";
      } else {
        std::printf(
            "baseline median %.3fs, project median %.3fs, overhead %+.2f%%\n",
            result.baseline_median, result.project_median,
            result.overhead * 100.0);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  return 0;
}
