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

#include "harness/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "support/subprocess.hpp"

namespace ifcpp {

namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

double one_clean_build(const ToolchainConfig& config, const std::string& dir) {
  std::vector<std::string> sources = list_case_sources(dir);
  if (sources.empty()) {
    throw std::runtime_error("bench: no sources in " + dir);
  }
  std::string work = make_temp_dir("ifc_bench_");
  CompileOutcome out = compile_sources(config, sources, work, true, "prog");
  if (!out.ok) {
    throw std::runtime_error("bench: build failed for " + dir + ":\n" +
                             out.log);
  }
  return out.seconds;
}

}  // namespace

BenchResult measure_compile_overhead(const ToolchainConfig& config,
                                     const std::string& project_dir,
                                     const std::string& baseline_dir,
                                     int repetitions) {
  if (repetitions < 5) {
    throw std::runtime_error(
        "bench: at least 5 repetitions are required for a stable median");
  }
  BenchResult result;
  // Interleave so drift affects both sides alike; a warm-up build of each
  // side is discarded.
  one_clean_build(config, baseline_dir);
  one_clean_build(config, project_dir);
  for (int r = 0; r < repetitions; ++r) {
    result.baseline_runs.push_back(one_clean_build(config, baseline_dir));
    result.project_runs.push_back(one_clean_build(config, project_dir));
  }
  result.baseline_median = median(result.baseline_runs);
  result.project_median = median(result.project_runs);
  result.overhead = result.project_median / result.baseline_median - 1.0;
  return result;
}

std::string bench_to_json(const BenchResult& result) {
  nlohmann::json j;
  j["project_runs"] = result.project_runs;
  j["baseline_runs"] = result.baseline_runs;
  j["project_median"] = result.project_median;
  j["baseline_median"] = result.baseline_median;
  j["overhead"] = result.overhead;
  return j.dump(2);
}

}  // namespace ifcpp
