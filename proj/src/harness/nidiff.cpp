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

#include "harness/nidiff.hpp"

#include <algorithm>

#include "support/subprocess.hpp"

namespace ifcpp {

const char* to_string(NidiffVerdict verdict) {
  switch (verdict) {
    case NidiffVerdict::kIndistinguishable:
      return "indistinguishable";
    case NidiffVerdict::kLeak:
      return "leak";
    case NidiffVerdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

NidiffResult noninterference_diff(const std::string& program,
                                  const std::string& secret_a,
                                  const std::string& secret_b,
                                  const std::string& public_input) {
  NidiffResult result;

  auto run_with = [&](const std::string& secret, RunResult* out) {
    std::vector<std::string> argv = {program, secret};
    if (!public_input.empty()) argv.push_back(public_input);
    *out = run_process(argv);
    return out->started && out->exit_code == 0;
  };

  RunResult a, b;
  if (!run_with(secret_a, &a)) {
    result.detail = "run with secret A failed (exit " +
                    std::to_string(a.exit_code) + "):\n" + a.err;
    return result;
  }
  if (!run_with(secret_b, &b)) {
    result.detail = "run with secret B failed (exit " +
                    std::to_string(b.exit_code) + "):\n" + b.err;
    return result;
  }

  if (a.out == b.out) {
    result.verdict = NidiffVerdict::kIndistinguishable;
    return result;
  }
  std::size_t limit = std::min(a.out.size(), b.out.size());
  std::size_t i = 0;
  while (i < limit && a.out[i] == b.out[i]) ++i;
  result.verdict = NidiffVerdict::kLeak;
  result.divergence_offset = static_cast<long>(i);
  result.detail = "public output diverges at byte " + std::to_string(i);
  return result;
}

}  // namespace ifcpp
