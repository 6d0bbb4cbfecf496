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

// The ifcpp driver: `rewrite` expands the pc_block / fcall / mcall surface
// forms into library calls (the step that runs before the host compiler),
// and `lattice` generates a type-level lattice header from a spec file.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "lattice/lattice_spec.hpp"
#include "rewrite/rewriter.hpp"
#include "support/subprocess.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ifcpp - static information-flow toolchain for C++"};
  app.require_subcommand(1);

  auto* rewrite = app.add_subcommand(
      "rewrite", "Expand IFC surface syntax into plain C++");
  std::string input, output, plan_path;
  std::vector<std::string> extra_allow;
  rewrite->add_option("input", input, "source file")->required();
  rewrite->add_option("-o,--output", output, "output file (default: stdout)");
  rewrite->add_option("--plan", plan_path, "write the rewrite plan as JSON");
  rewrite->add_option("--allow", extra_allow,
                      "extra side-effect-free callee names");

  auto* lattice = app.add_subcommand(
      "lattice", "Generate a type-level lattice header from a spec file");
  std::string spec_path, header_out, ns;
  lattice->add_option("spec", spec_path, "lattice spec file")->required();
  lattice->add_option("-o,--output", header_out,
                      "output header (default: stdout)");
  lattice->add_option("--namespace", ns, "namespace for the generated tags");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rewrite->parsed()) {
      ifcpp::RewriteOptions options;
      options.filename = input;
      options.extra_allow = extra_allow;
      ifcpp::RewriteResult result =
          ifcpp::rewrite_source(ifcpp::read_file(input), options);
      if (output.empty()) {
        std::cout << result.text;
      } else {
        ifcpp::write_file(output, result.text);
      }
      if (!plan_path.empty()) {
        ifcpp::write_file(plan_path, ifcpp::plan_to_json(result.plan));
      }
    } else if (lattice->parsed()) {
      ifcpp::LatticeSpec spec =
          ifcpp::parse_lattice_spec(ifcpp::read_file(spec_path));
      std::string header = ifcpp::generate_lattice_header(spec, ns);
      if (header_out.empty()) {
        std::cout << header;
      } else {
        ifcpp::write_file(header_out, header);
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 0;
}
