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

#ifndef IFCPP_HARNESS_BENCH_HPP_
#define IFCPP_HARNESS_BENCH_HPP_

#include <string>
#include <vector>

#include "harness/compile_runner.hpp"

// Compile-overhead measurement: clean builds of an instrumented project and
// its unannotated baseline, interleaved, medians over >= 5 repetitions.
// The instrumented build time includes the rewrite step, since that is part
// of its build.

namespace ifcpp {

struct BenchResult {
  std::vector<double> project_runs;
  std::vector<double> baseline_runs;
  double project_median = 0;
  double baseline_median = 0;
  // (project median / baseline median) - 1
  double overhead = 0;
};

// Both directories hold a flat set of *.cpp / *.ifc.cpp sources building one
// executable. Throws on reps < 5 or on a failing build (with the log).
BenchResult measure_compile_overhead(const ToolchainConfig& config,
                                     const std::string& project_dir,
                                     const std::string& baseline_dir,
                                     int repetitions);

std::string bench_to_json(const BenchResult& result);

}  // namespace ifcpp

#endif  // IFCPP_HARNESS_BENCH_HPP_
