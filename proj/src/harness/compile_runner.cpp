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

#include "harness/compile_runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "support/subprocess.hpp"

namespace ifcpp {

namespace fs = std::filesystem;

std::string ToolchainConfig::compiler() const {
  if (!cxx.empty()) return cxx;
  if (const char* env = std::getenv("CXX"); env && *env) return env;
  return "c++";
}

std::vector<std::string> list_case_sources(const std::string& dir) {
  std::vector<std::string> sources;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name.size() > 4 && name.substr(name.size() - 4) == ".cpp") {
      sources.push_back(entry.path().string());
    }
  }
  std::sort(sources.begin(), sources.end());
  return sources;
}

CompileOutcome compile_sources(const ToolchainConfig& config,
                               const std::vector<std::string>& sources,
                               const std::string& work_dir, bool link,
                               const std::string& out_name) {
  CompileOutcome outcome;
  std::vector<std::string> compile_inputs;
  std::vector<std::string> surface_includes;

  auto is_surface = [](const std::string& path) {
    return path.size() > 8 &&
           path.substr(path.size() - 8) == ".ifc.cpp";
  };

  for (const std::string& src : sources) {
    if (!is_surface(src)) {
      compile_inputs.push_back(src);
      continue;
    }
    // The expanded file lives in work_dir; keep quoted includes resolving
    // against the original source directory.
    surface_includes.push_back(fs::path(src).parent_path().string());
    // Surface syntax: expand through the rewriter first.
    std::string stem = fs::path(src).stem().stem().string();
    std::string expanded = work_dir + "/" + stem + ".rewritten.cpp";
    RunResult rr = run_process(
        {config.ifcpp_bin, "rewrite", src, "-o", expanded});
    outcome.seconds += rr.seconds;
    if (!rr.started) {
      outcome.log += "harness: cannot execute rewriter '" + config.ifcpp_bin +
                     "'\n";
      return outcome;
    }
    if (rr.exit_code != 0) {
      outcome.log += rr.err + rr.out;
      return outcome;  // compile-time rejection by the rewriter
    }
    compile_inputs.push_back(expanded);
  }

  std::vector<std::string> argv = {config.compiler(), "-std=c++20"};
  for (const std::string& inc : config.include_dirs) {
    argv.push_back("-I" + inc);
  }
  for (const std::string& inc : surface_includes) {
    argv.push_back("-I" + inc);
  }
  for (const std::string& flag : config.extra_flags) argv.push_back(flag);
  if (link) {
    outcome.binary = work_dir + "/" + out_name;
    argv.push_back("-o");
    argv.push_back(outcome.binary);
  } else {
    argv.push_back("-fsyntax-only");
  }
  for (const std::string& in : compile_inputs) argv.push_back(in);

  RunResult cc = run_process(argv);
  outcome.seconds += cc.seconds;
  if (!cc.started) {
    outcome.log += "harness: cannot execute compiler '" + config.compiler() +
                   "'\n";
    return outcome;
  }
  outcome.log += cc.err + cc.out;
  outcome.ok = cc.exit_code == 0;
  if (!outcome.ok) outcome.binary.clear();
  return outcome;
}

}  // namespace ifcpp
