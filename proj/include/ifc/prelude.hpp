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

#ifndef IFC_PRELUDE_HPP_
#define IFC_PRELUDE_HPP_

// Single include for programs using the library: the default diamond
// lattice, labeled values, call-lifting combinators, pc machinery, and the
// two token-level escape hatches below. Sources that use the pc_block /
// fcall / mcall surface forms additionally go through `ifcpp rewrite`
// before compilation.

#include <ifc/chain.hpp>
#include <ifc/diamond.hpp>
#include <ifc/labeled.hpp>
#include <ifc/lattice.hpp>
#include <ifc/pc.hpp>

// Marks a function definition as side-effect free. Compiles to nothing; the
// ifcpp rewriter reads the marker and verifies the function body (no writes
// to non-local state, only vetted callees) before admitting calls to it
// inside a pc_block.
#define side_effect_free_attr

// Escape hatch: the wrapped expression compiles and runs with no flow or
// side-effect checking. The metrics tool counts every use.
#define unchecked_operation(...) (__VA_ARGS__)

#endif  // IFC_PRELUDE_HPP_
