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

#ifndef IFCPP_LATTICE_LATTICE_SPEC_HPP_
#define IFCPP_LATTICE_LATTICE_SPEC_HPP_

#include <ifc/reflect.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// A declared security lattice: level names, covering edges, and the bottom.
// lattice_oracle() validates the declaration and derives the full flows-to
// closure and join table by brute force (graph reachability plus explicit
// minimal-upper-bound search). It is the independent reference the
// type-level encoding is tested against, and the input to the header
// generator that automates the hand encoding.

namespace ifcpp {

struct LatticeSpec {
  std::vector<std::string> levels;
  std::vector<std::pair<std::string, std::string>> edges;  // (lower, upper)
  std::string bottom;
};

class LatticeSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format, one declaration per line:
//   level <name>
//   edge <lower> <upper>
//   bottom <name>
// Blank lines and lines starting with '#' are ignored.
LatticeSpec parse_lattice_spec(const std::string& text);

// Validates the spec and computes the reference tables. Rejections name the
// offending level or pair: unknown/duplicate names, cycles, a bottom that
// does not reach every level, or a pair without a least upper bound.
ifc::LatticeTable lattice_oracle(const LatticeSpec& spec);

// Emits a C++ header encoding the lattice at the type level: one tag struct
// per level (the bottom is aliased to ifc::Public), one FlowsTo entry per
// non-reflexive closure pair, and the full pairwise join table. `ns` may be
// empty for the global namespace.
std::string generate_lattice_header(const LatticeSpec& spec,
                                    const std::string& ns);

}  // namespace ifcpp

#endif  // IFCPP_LATTICE_LATTICE_SPEC_HPP_
