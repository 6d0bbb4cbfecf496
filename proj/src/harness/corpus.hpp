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

#ifndef IFCPP_HARNESS_CORPUS_HPP_
#define IFCPP_HARNESS_CORPUS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "harness/compile_runner.hpp"

// The corpus runner: compiles many small programs in isolation and asserts
// accept/reject verdicts, diagnostic substrings, and runtime oracles.
//
// Manifest, one case per line:
//   <name> <dir> <accept|reject> ["<diagnostic substring>"] [<category>]
// Case directory contents:
//   *.cpp / *.ifc.cpp      the program (surface sources are rewritten first)
//   expected_stdout.txt    optional runtime oracle (byte-exact stdout)
//   secret_a.txt ...       optional inputs, passed as argv (see run_args)
// Reject cases carry an in-file fix annotation on the offending line:
//   // ifc-fix: remove            delete the line
//   // ifc-fix: replace <text>    substitute the line
// so the suite can prove each rejection is load-bearing: with the fix
// applied, the case must compile.

namespace ifcpp {

struct CorpusCase {
  std::string name;
  std::string dir;
  bool expect_accept = false;
  std::string diagnostic;  // substring expected in the rejection log
  std::string category;
};

enum class CaseStatus {
  kPass,
  kWrongVerdict,
  kWrongDiagnostic,
  kRuntimeMismatch,
  kHarnessError,
};

const char* to_string(CaseStatus status);

struct CaseOutcome {
  CaseStatus status = CaseStatus::kHarnessError;
  std::string detail;
  double seconds = 0;
};

struct CorpusReport {
  std::vector<std::pair<CorpusCase, CaseOutcome>> results;
  double total_seconds = 0;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
  // category -> (pass, fail)
  std::map<std::string, std::pair<int, int>> per_category() const;
};

std::vector<CorpusCase> parse_manifest(const std::string& manifest_path);

// Runs every case (optionally filtered by category) with `jobs` parallel
// workers; the report preserves manifest order.
CorpusReport run_corpus(const ToolchainConfig& config,
                        const std::vector<CorpusCase>& cases,
                        const std::string& filter_category = "",
                        int jobs = 0);

// For each reject case, applies its in-file fix annotation and re-checks
// that the fixed program compiles. Returns per-case (name, ok, detail).
std::vector<std::pair<std::string, std::pair<bool, std::string>>>
run_fix_checks(const ToolchainConfig& config,
               const std::vector<CorpusCase>& cases);

// argv tail for running a linked accept case: secret_a.txt and public.txt
// when present in the case directory.
std::vector<std::string> run_args(const std::string& case_dir);

std::string report_to_json(const CorpusReport& report);
std::string format_report(const CorpusReport& report);

}  // namespace ifcpp

#endif  // IFCPP_HARNESS_CORPUS_HPP_
