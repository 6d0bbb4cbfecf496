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

#include "harness/nidiff.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nidiff - paired-execution noninterference check"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a program with two secrets");
  std::string program, secret_a, secret_b, public_input;
  run->add_option("program", program, "program to execute")->required();
  run->add_option("--secret-a", secret_a, "first secret input file")
      ->required();
  run->add_option("--secret-b", secret_b, "second secret input file")
      ->required();
  run->add_option("--public", public_input, "shared public input file");

  CLI11_PARSE(app, argc, argv);

  ifcpp::NidiffResult result =
      ifcpp::noninterference_diff(program, secret_a, secret_b, public_input);
  std::printf("%s", ifcpp::to_string(result.verdict));
  if (result.verdict == ifcpp::NidiffVerdict::kLeak) {
    std::printf(" at byte %ld", result.divergence_offset);
  }
  std::printf("\n");
  if (!result.detail.empty()) {
    std::fprintf(stderr, "%s\n", result.detail.c_str());
  }
  switch (result.verdict) {
    case ifcpp::NidiffVerdict::kIndistinguishable:
      return 0;
    case ifcpp::NidiffVerdict::kLeak:
      return 1;
    case ifcpp::NidiffVerdict::kInconclusive:
      return 2;
  }
  return 2;
}
