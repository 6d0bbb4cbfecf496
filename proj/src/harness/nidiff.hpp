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

#ifndef IFCPP_HARNESS_NIDIFF_HPP_
#define IFCPP_HARNESS_NIDIFF_HPP_

#include <string>

// Paired-execution noninterference check: run a program twice varying only
// the secret input file and compare every byte of public output. For a
// declassify-free, unchecked-free program the two transcripts must be
// identical; the first divergent byte pinpoints a leak.

namespace ifcpp {

enum class NidiffVerdict {
  kIndistinguishable,
  kLeak,
  kInconclusive,  // a run failed; see detail
};

struct NidiffResult {
  NidiffVerdict verdict = NidiffVerdict::kInconclusive;
  long divergence_offset = -1;  // byte offset of the first difference
  std::string detail;
};

// Invokes `program <secret_file> [<public_file>]`; stdout is the public
// channel under comparison.
NidiffResult noninterference_diff(const std::string& program,
                                  const std::string& secret_a,
                                  const std::string& secret_b,
                                  const std::string& public_input = "");

const char* to_string(NidiffVerdict verdict);

}  // namespace ifcpp

#endif  // IFCPP_HARNESS_NIDIFF_HPP_
