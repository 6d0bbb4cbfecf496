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

#ifndef IFCPP_REWRITE_REWRITER_HPP_
#define IFCPP_REWRITE_REWRITER_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Source-to-source expansion of the surface forms
//
//   pc_block { (LABEL) { ... } }
//   fcall(f(a, b))        fcall(f(a)?)        fcall(f(mut_ref(a), b))
//   mcall(recv.m(a))      mcall(recv.field)   mcall(recv.m()?)
//
// into calls on the ifc library, the same way a macro expander would run
// before the compiler. Everything outside these forms is copied through
// byte for byte. Inside a pc_block the rewriter:
//   - rewrites every branch/loop condition through inspect_condition and
//     rebuilds the pc witness with join_labels, shadowed per branch scope;
//   - rewrites every assignment statement to secure_assign;
//   - vets every call against the side-effect allowlist, functions marked
//     side_effect_free_attr (whose bodies are checked recursively), or an
//     unchecked_operation escape;
//   - rejects early exits that would leave a raised-pc region.
//
// The accepted statement subset inside pc_block: declarations, expression
// statements, assignments (plain `=`), if/else, while, range-for over
// unlabeled ranges, nested blocks and nested pc_blocks. Anything else is
// rejected with a diagnostic rather than passed through unchecked.

namespace ifcpp {

class RewriteError : public std::runtime_error {
 public:
  RewriteError(const std::string& file, int line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) +
                           ": error: " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct ConditionSite {
  int line = 0;
  std::string text;
};

struct AssignSite {
  int line = 0;
  std::string target;
};

struct CallSite {
  int line = 0;
  std::string callee;
  std::string vetted_via;  // "allowlist" | "attribute" | "library" | "unchecked"
};

// Structured description of one pc_block expansion.
struct BlockPlan {
  int line = 0;
  std::string label;
  std::vector<ConditionSite> conditions;
  std::vector<AssignSite> assignments;
  std::vector<CallSite> calls;
};

// One fcall / mcall expansion.
struct CallPlan {
  int line = 0;
  std::string kind;  // "function" | "method-chain" | "field-access"
  std::string root;  // callee text (function) or receiver text (method/field)
  int arg_count = 0;
  bool fallible = false;
};

struct RewritePlan {
  std::vector<BlockPlan> blocks;
  std::vector<CallPlan> calls;
  std::vector<std::string> attributed_functions;
};

struct RewriteOptions {
  std::string filename = "<input>";
  std::vector<std::string> extra_allow;
};

struct RewriteResult {
  std::string text;
  RewritePlan plan;
};

RewriteResult rewrite_source(const std::string& source,
                             const RewriteOptions& options);

// The shipped side-effect allowlist: pure arithmetic helpers, option/result
// accessors, immutable collection reads, and the library's own operations.
const std::set<std::string>& default_allowlist();

// Serializes a plan as JSON (used by `ifcpp rewrite --plan`).
std::string plan_to_json(const RewritePlan& plan);

}  // namespace ifcpp

#endif  // IFCPP_REWRITE_REWRITER_HPP_
