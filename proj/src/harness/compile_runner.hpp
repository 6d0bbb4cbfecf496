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

#ifndef IFCPP_HARNESS_COMPILE_RUNNER_HPP_
#define IFCPP_HARNESS_COMPILE_RUNNER_HPP_

#include <string>
#include <vector>

// Drives the two-step pipeline for one isolated compilation unit set:
// `ifcpp rewrite` for *.ifc.cpp sources (surface syntax), then the host
// compiler. A rewriter rejection and a compiler rejection are both
// compile-time rejections; the combined log carries the diagnostics.

namespace ifcpp {

struct ToolchainConfig {
  std::string cxx;                        // host compiler; empty = $CXX or c++
  std::string ifcpp_bin;                  // rewriter binary, for .ifc.cpp
  std::vector<std::string> include_dirs;  // -I
  std::vector<std::string> extra_flags;

  std::string compiler() const;
};

struct CompileOutcome {
  bool ok = false;
  std::string log;      // rewriter + compiler stderr
  double seconds = 0;   // rewrite + compile wall clock
  std::string binary;   // populated when linking
};

// Compiles `sources` (absolute or cwd-relative paths) in isolation.
// If `link` is false the compiler runs syntax-plus-codegen checks only.
// Artifacts are placed under `work_dir`, which must exist.
CompileOutcome compile_sources(const ToolchainConfig& config,
                               const std::vector<std::string>& sources,
                               const std::string& work_dir, bool link,
                               const std::string& out_name);

// Lists *.cpp and *.ifc.cpp files directly inside `dir`, sorted.
std::vector<std::string> list_case_sources(const std::string& dir);

}  // namespace ifcpp

#endif  // IFCPP_HARNESS_COMPILE_RUNNER_HPP_
