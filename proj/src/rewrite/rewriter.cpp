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

#include "rewrite/rewriter.hpp"

#include <json.hpp>

#include <map>
#include <optional>

#include "support/lexer.hpp"

namespace ifcpp {

namespace {

const std::set<std::string>& control_keywords() {
  static const std::set<std::string> kw = {
      "if",       "else",        "while",       "for",
      "switch",   "return",      "sizeof",      "alignof",
      "decltype", "noexcept",    "requires",    "static_cast",
      "dynamic_cast", "const_cast", "reinterpret_cast", "co_await",
      "co_yield", "case",        "default",     "new",
      "delete",   "throw",       "do",          "goto",
      "true",     "false",       "nullptr",     "this",
      "operator", "template",    "typename",    "using",
      "namespace", "struct",     "class",       "enum",
      "public",   "private",     "protected",   "catch",
      "try",      "const",       "constexpr",   "static",
      "inline",   "void",        "auto",
  };
  return kw;
}

const std::set<std::string>& decl_keywords() {
  static const std::set<std::string> kw = {
      "auto",     "const",    "constexpr", "bool",  "char",
      "short",    "int",      "long",      "float", "double",
      "unsigned", "signed",   "using",     "typename",
      "wchar_t",  "char8_t",  "char16_t",  "char32_t",
  };
  return kw;
}

const std::set<std::string>& assign_ops() {
  static const std::set<std::string> ops = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
  };
  return ops;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

const std::set<std::string>& default_allowlist() {
  static const std::set<std::string> allow = {
      // pure arithmetic / comparison helpers
      "abs", "min", "max", "clamp",
      // option / result accessors
      "has_value", "value", "value_or",
      // immutable collection reads and iteration
      "get", "at", "size", "length", "len", "contains", "count", "find",
      "empty", "begin", "end", "cbegin", "cend", "front", "back",
      "first", "second",
      // library operations usable without qualification
      "relabel", "declassify", "label_new", "lift_public", "chain",
      "chain_mut", "read",
  };
  return allow;
}

namespace {

struct PcContext {
  std::string pc_var;
  int depth = 0;
  std::size_t plan_index = 0;
  std::vector<std::string> loop_pc;  // pc var at each enclosing in-block loop
  bool vet = true;
};

class Rewriter {
 public:
  Rewriter(const std::string& source, const RewriteOptions& options)
      : src_(source), opts_(options) {
    try {
      toks_ = lex(src_);
    } catch (const LexError& e) {
      throw RewriteError(opts_.filename, e.line, e.message);
    }
    allow_ = default_allowlist();
    allow_.insert(opts_.extra_allow.begin(), opts_.extra_allow.end());
  }

  RewriteResult run() {
    collect_attributed_functions();
    RewriteResult result;
    result.text = walk_expr(0, toks_.size() - 1, nullptr);
    result.plan = std::move(plan_);
    return result;
  }

 private:
  struct AttrFn {
    std::size_t params_open = 0;
    std::size_t body_open = 0;
    std::size_t body_close = 0;
    int line = 0;
    enum State { kUnvetted, kInProgress, kVetted } state = kUnvetted;
  };

  [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
    int line = i < toks_.size() ? toks_[i].line : 0;
    throw RewriteError(opts_.filename, line, msg);
  }

  const Token& tok(std::size_t i) const {
    return toks_[i < toks_.size() ? i : toks_.size() - 1];
  }

  // Raw source text covering tokens [lo, hi), including the whitespace and
  // comments that follow each token.
  std::string raw(std::size_t lo, std::size_t hi) const {
    if (lo >= hi) return "";
    std::size_t a = toks_[lo].offset;
    std::size_t b = hi < toks_.size() ? toks_[hi].offset : src_.size();
    return std::string(src_.substr(a, b - a));
  }

  std::string fresh(const char* stem) {
    return std::string("__ifc_") + stem + std::to_string(counter_++);
  }

  static bool is_open(const Token& t) {
    return t.kind == TokenKind::kPunct &&
           (t.text == "(" || t.text == "[" || t.text == "{");
  }
  static bool is_close(const Token& t) {
    return t.kind == TokenKind::kPunct &&
           (t.text == ")" || t.text == "]" || t.text == "}");
  }

  // Last token index (inclusive) of a qualified name starting at i.
  std::size_t qualified_name_end(std::size_t i) const {
    std::size_t j = i;
    while (tok(j + 1).is("::") &&
           tok(j + 2).kind == TokenKind::kIdentifier) {
      j += 2;
    }
    return j;
  }

  // If `open` indexes a '<' that closes before `limit` and is immediately
  // followed by '(', returns the index of the matching '>'. Otherwise 0.
  std::size_t try_template_args(std::size_t open, std::size_t limit) const {
    int angle = 0;
    int paren = 0;
    for (std::size_t j = open; j < limit; ++j) {
      const Token& t = tok(j);
      if (t.kind != TokenKind::kPunct) continue;
      if (t.text == "(" || t.text == "[") ++paren;
      if (t.text == ")" || t.text == "]") {
        if (paren == 0) return 0;
        --paren;
      }
      if (t.text == ";" || t.text == "{" || t.text == "}") return 0;
      if (paren > 0) continue;
      if (t.text == "<") ++angle;
      if (t.text == "<<") angle += 2;
      if (t.text == ">") {
        --angle;
        if (angle == 0) return tok(j + 1).is("(") ? j : 0;
        if (angle < 0) return 0;
      }
      if (t.text == ">>") {
        angle -= 2;
        if (angle == 0) return tok(j + 1).is("(") ? j : 0;
        if (angle < 0) return 0;
      }
    }
    return 0;
  }

  // ---- side_effect_free_attr collection and vetting ------------------------

  void collect_attributed_functions() {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (!toks_[i].is_identifier("side_effect_free_attr")) continue;
      std::size_t j = i + 1;
      while (j < toks_.size() && !tok(j).is("(") && !tok(j).is(";") &&
             !tok(j).is("{")) {
        ++j;
      }
      if (!tok(j).is("(") || tok(j - 1).kind != TokenKind::kIdentifier) {
        fail(i, "side_effect_free_attr must precede a function definition");
      }
      std::string name(tok(j - 1).text);
      AttrFn fn;
      fn.params_open = j;
      fn.line = toks_[i].line;
      std::size_t close = matching_close(toks_, j);
      if (close >= toks_.size()) fail(j, "unbalanced parameter list");
      std::size_t k = close + 1;
      while (k < toks_.size() && !tok(k).is("{") && !tok(k).is(";")) ++k;
      if (tok(k).is("{")) {
        fn.body_open = k;
        fn.body_close = matching_close(toks_, k);
        if (fn.body_close >= toks_.size()) fail(k, "unbalanced function body");
      }
      attr_fns_[name] = fn;
      plan_.attributed_functions.push_back(name);
    }
  }

  // Checks one attributed function: no writes outside its own locals, no
  // persistent state, and every callee vetted in turn. Token-level and
  // deliberately conservative; what it cannot see, it rejects.
  void vet_attributed_function(const std::string& name, std::size_t use_site) {
    auto it = attr_fns_.find(name);
    if (it == attr_fns_.end()) {
      fail(use_site, "internal: unknown attributed function '" + name + "'");
    }
    AttrFn& fn = it->second;
    if (fn.state == AttrFn::kVetted || fn.state == AttrFn::kInProgress) return;
    if (fn.body_open == 0) {
      fail(use_site, "side_effect_free_attr function '" + name +
                         "' has no definition in this file, so its body "
                         "cannot be checked");
    }
    fn.state = AttrFn::kInProgress;

    std::vector<std::set<std::string>> scopes(1);
    std::set<std::string> banned;  // mutable-reference parameters

    // Parameters.
    std::size_t pclose = matching_close(toks_, fn.params_open);
    std::size_t plo = fn.params_open + 1;
    while (plo < pclose) {
      std::size_t phi = plo;
      int depth = 0;
      while (phi < pclose) {
        const Token& t = tok(phi);
        if (is_open(t)) ++depth;
        if (is_close(t)) --depth;
        if (depth == 0 && t.is(",")) break;
        ++phi;
      }
      bool has_ref = false, has_const = false;
      std::size_t last_ident = 0;
      for (std::size_t j = plo; j < phi; ++j) {
        if (tok(j).is("&") || tok(j).is("&&")) has_ref = true;
        if (tok(j).is_identifier("const")) has_const = true;
        if (tok(j).is("=")) break;
        if (tok(j).kind == TokenKind::kIdentifier) last_ident = j;
      }
      if (last_ident != 0) {
        std::string pname(tok(last_ident).text);
        if (has_ref && !has_const) {
          banned.insert(pname);
        } else {
          scopes[0].insert(pname);
        }
      }
      plo = phi + 1;
    }

    vet_body(fn.body_open + 1, fn.body_close, scopes, banned);
    fn.state = AttrFn::kVetted;
  }

  bool is_local(const std::vector<std::set<std::string>>& scopes,
                const std::string& name) const {
    for (const auto& s : scopes) {
      if (s.count(name)) return true;
    }
    return false;
  }

  void vet_body(std::size_t lo, std::size_t hi,
                std::vector<std::set<std::string>>& scopes,
                const std::set<std::string>& banned) {
    std::vector<std::string> pending;  // names declared in loop headers
    std::size_t i = lo;
    while (i < hi) {
      const Token& t = tok(i);
      if (t.is("{")) {
        std::size_t close = matching_close(toks_, i);
        scopes.emplace_back(pending.begin(), pending.end());
        pending.clear();
        vet_body(i + 1, close, scopes, banned);
        scopes.pop_back();
        i = close + 1;
        continue;
      }
      if (t.is_identifier("static") || t.is_identifier("thread_local")) {
        fail(i, "side_effect_free_attr function '" + current_vet_name(i) +
                    "' declares persistent state");
      }
      if (t.is_identifier("new") || t.is_identifier("delete")) {
        fail(i, "allocation inside a side_effect_free_attr function is not "
                "supported");
      }
      if (t.is("[") && !follows_primary(i)) {
        fail(i, "lambda expressions inside a side_effect_free_attr function "
                "are not supported");
      }
      if (t.is_identifier("for") && tok(i + 1).is("(")) {
        std::size_t close = matching_close(toks_, i + 1);
        // Range-for introduces a loop variable for the body scope.
        for (std::size_t j = i + 2; j < close; ++j) {
          if (tok(j).is(":") ) {
            for (std::size_t k = j; k > i + 1; --k) {
              if (tok(k).kind == TokenKind::kIdentifier) {
                pending.push_back(std::string(tok(k).text));
                break;
              }
            }
            break;
          }
          if (tok(j).is(";")) break;  // classic for; init handled as stmt
        }
        i += 2;
        continue;
      }
      if (t.is("++") || t.is("--")) {
        std::size_t operand =
            tok(i + 1).kind == TokenKind::kIdentifier ? i + 1 : i - 1;
        check_write_target(operand, operand + 1, scopes, banned);
        ++i;
        continue;
      }
      if (t.kind == TokenKind::kPunct && assign_ops().count(std::string(t.text))) {
        // Find the start of this statement-ish segment to classify the LHS.
        std::size_t start = i;
        int depth = 0;
        while (start > lo) {
          const Token& p = tok(start - 1);
          if (is_close(p)) ++depth;
          if (is_open(p)) {
            if (depth == 0) break;
            --depth;
          }
          if (depth == 0 &&
              (p.is(";") || p.is("{") || p.is("}") || p.is(",") || p.is(":")))
            break;
          --start;
        }
        if (is_declaration(start, i)) {
          std::size_t last_ident = 0;
          for (std::size_t k = start; k < i; ++k) {
            if (tok(k).kind == TokenKind::kIdentifier) last_ident = k;
          }
          if (last_ident) scopes.back().insert(std::string(tok(last_ident).text));
        } else {
          check_write_target(start, i, scopes, banned);
        }
        ++i;
        continue;
      }
      if (t.kind == TokenKind::kIdentifier) {
        std::size_t consumed = vet_call_at(i, hi, /*pc=*/nullptr,
                                           /*in_attr_fn=*/true);
        if (consumed) {
          i = consumed;
          continue;
        }
      }
      ++i;
    }
    (void)banned;
  }

  std::string current_vet_name(std::size_t i) const {
    for (const auto& [name, fn] : attr_fns_) {
      if (fn.body_open < i && i < fn.body_close) return name;
    }
    return "?";
  }

  void check_write_target(std::size_t lo, std::size_t hi,
                          const std::vector<std::set<std::string>>& scopes,
                          const std::set<std::string>& banned) {
    // Root of the written lvalue must be a function-local name.
    if (tok(lo).is("*") || tok(lo).is("(")) {
      fail(lo, "side_effect_free_attr function '" + current_vet_name(lo) +
                   "' writes through a pointer or reference");
    }
    if (tok(lo).kind != TokenKind::kIdentifier) {
      fail(lo, "unsupported assignment target in a side_effect_free_attr "
               "function");
    }
    std::string root(tok(lo).text);
    if (banned.count(root)) {
      fail(lo, "side_effect_free_attr function '" + current_vet_name(lo) +
                   "' writes through mutable-reference parameter '" + root +
                   "'");
    }
    if (!is_local(scopes, root)) {
      fail(lo, "side_effect_free_attr function '" + current_vet_name(lo) +
                   "' writes to non-local state '" + root + "'");
    }
    (void)hi;
  }

  bool follows_primary(std::size_t i) const {
    if (i == 0) return false;
    const Token& p = toks_[i - 1];
    return p.kind == TokenKind::kIdentifier ||
           p.kind == TokenKind::kNumber || p.kind == TokenKind::kString ||
           p.is(")") || p.is("]");
  }

  // ---- call classification --------------------------------------------------

  // If token i begins a call expression, classifies/vets it and returns the
  // index to resume from (the token after the callee name and template args,
  // i.e. the opening parenthesis). Returns 0 if this is not a call head.
  //
  // `pc` non-null: vetting for a pc_block (records into the block plan).
  // `in_attr_fn`: vetting inside a side_effect_free_attr body.
  std::size_t vet_call_at(std::size_t i, std::size_t hi, PcContext* pc,
                          bool in_attr_fn) {
    const Token& t = toks_[i];
    if (t.kind != TokenKind::kIdentifier) return 0;
    std::string first(t.text);
    if (control_keywords().count(first)) return 0;

    bool is_method = i > 0 && (toks_[i - 1].is(".") || toks_[i - 1].is("->"));
    std::size_t name_end = is_method ? i : qualified_name_end(i);
    std::size_t after = name_end + 1;
    if (tok(after).is("<")) {
      std::size_t close_angle = try_template_args(after, hi);
      if (close_angle) after = close_angle + 1;
    }
    if (!tok(after).is("(")) return 0;

    std::string full = trim(raw(i, name_end + 1));
    std::string last(tok(name_end).text);
    std::string via;
    if (full.rfind("ifc::", 0) == 0 || full.rfind("__ifc_", 0) == 0) {
      via = "library";
    } else if (allow_.count(last)) {
      via = "allowlist";
    } else if (!is_method && attr_fns_.count(full)) {
      vet_attributed_function(full, i);
      via = "attribute";
    } else {
      fail(i, "call to '" + full + "' inside " +
                  (in_attr_fn ? std::string("a side_effect_free_attr function")
                              : std::string("pc_block")) +
                  " is not verified side-effect-free; mark the callee "
                  "side_effect_free_attr, use an allowlisted operation, or "
                  "wrap the call in unchecked_operation");
    }
    if (pc) {
      plan_.blocks[pc->plan_index].calls.push_back(
          CallSite{toks_[i].line, full, via});
    }
    return after;
  }

  // ---- expression walking ---------------------------------------------------

  // Copies tokens [lo, hi) while expanding fcall/mcall/unchecked_operation
  // and, when `pc` is set, enforcing the pc_block expression rules.
  std::string walk_expr(std::size_t lo, std::size_t hi, PcContext* pc) {
    std::string out;
    std::size_t emit = lo;
    int depth = 0;
    std::size_t i = lo;
    while (i < hi) {
      const Token& t = toks_[i];
      if (t.kind == TokenKind::kPunct) {
        if (pc && depth == 0 && assign_ops().count(std::string(t.text))) {
          fail(i, "assignment in expression position inside pc_block is not "
                  "supported");
        }
        if (pc && pc->vet && (t.is("++") || t.is("--"))) {
          fail(i, "increment/decrement inside pc_block is not supported; "
                  "write it as an assignment statement (x = x + 1)");
        }
        if (pc && pc->vet && t.is("(") && i > lo && toks_[i - 1].is(")")) {
          fail(i, "indirect call inside pc_block is not supported");
        }
        if (pc && pc->vet && t.is("[") && !follows_primary(i)) {
          fail(i, "lambda expressions inside pc_block are not supported");
        }
        if (is_open(t)) ++depth;
        if (is_close(t)) --depth;
        ++i;
        continue;
      }
      if (t.kind == TokenKind::kIdentifier) {
        if (t.text == "pc_block" && tok(i + 1).is("{")) {
          if (pc) {
            // Inside a pc_block, nested blocks arrive via the statement
            // parser; hitting one here means expression position.
            fail(i, "pc_block is a statement and cannot appear in an "
                    "expression");
          }
          out += raw(emit, i);
          i = transform_pc_block(i, nullptr, &out);
          emit = i;
          continue;
        }
        if (t.text == "mut_ref") {
          fail(i, "mut_ref is only meaningful directly as an fcall argument");
        }
        if (t.text == "fcall" && tok(i + 1).is("(")) {
          out += raw(emit, i);
          i = transform_fcall(i, pc, &out);
          emit = i;
          continue;
        }
        if (t.text == "mcall" && tok(i + 1).is("(")) {
          out += raw(emit, i);
          i = transform_mcall(i, pc, &out);
          emit = i;
          continue;
        }
        if (t.text == "unchecked_operation" && tok(i + 1).is("(")) {
          std::size_t close = matching_close(toks_, i + 1);
          if (close >= toks_.size()) fail(i, "unbalanced unchecked_operation");
          if (pc) {
            plan_.blocks[pc->plan_index].calls.push_back(
                CallSite{t.line, "unchecked_operation", "unchecked"});
          }
          out += raw(emit, i) + "unchecked_operation(" +
                 walk_expr(i + 2, close, nullptr) + ")";
          i = close + 1;
          emit = i;
          continue;
        }
        if (pc && pc->vet) {
          std::size_t resume = vet_call_at(i, hi, pc, false);
          if (resume) {
            i = resume;
            continue;
          }
        }
        i = qualified_name_end(i) + 1;
        continue;
      }
      ++i;
    }
    out += raw(emit, hi);
    return out;
  }

  // ---- fcall / mcall --------------------------------------------------------

  // Splits [lo, hi) on top-level commas.
  std::vector<std::pair<std::size_t, std::size_t>> split_args(
      std::size_t lo, std::size_t hi) const {
    std::vector<std::pair<std::size_t, std::size_t>> args;
    if (lo >= hi) return args;
    int depth = 0;
    std::size_t start = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      const Token& t = tok(i);
      if (is_open(t)) ++depth;
      if (is_close(t)) --depth;
      if (depth == 0 && t.is(",")) {
        args.emplace_back(start, i);
        start = i + 1;
      }
    }
    args.emplace_back(start, hi);
    return args;
  }

  std::size_t transform_fcall(std::size_t i, PcContext* pc, std::string* out) {
    std::size_t open = i + 1;
    std::size_t close = matching_close(toks_, open);
    if (close >= toks_.size()) fail(i, "unbalanced fcall");
    std::size_t lo = open + 1;
    std::size_t hi = close;
    bool fallible = hi > lo && tok(hi - 1).is("?");
    if (fallible) --hi;
    if (lo >= hi) fail(i, "fcall expects a call expression: fcall(f(a, b))");

    // Locate the argument list: the last top-level parenthesized group,
    // which must end the expression.
    std::size_t args_open = toks_.size();
    int depth = 0;
    for (std::size_t j = lo; j < hi; ++j) {
      const Token& t = tok(j);
      if (t.is("(") && depth == 0) args_open = j;
      if (is_open(t)) ++depth;
      if (is_close(t)) --depth;
    }
    if (args_open >= toks_.size() || args_open == lo) {
      fail(i, "fcall expects a call expression: fcall(f(a, b))");
    }
    std::size_t args_close = matching_close(toks_, args_open);
    if (args_close != hi - 1) {
      fail(i, "fcall expects the argument list to end the expression; use "
              "mcall for method chains");
    }

    if (pc && pc->vet) vet_call_at(lo, args_open, pc, false);

    std::string callee = walk_expr(lo, args_open, pc);
    auto arg_ranges = split_args(args_open + 1, args_close);
    if (arg_ranges.size() == 1 && arg_ranges[0].first >= arg_ranges[0].second) {
      arg_ranges.clear();
    }

    struct Arg {
      std::string text;
      std::string name;
      bool mut = false;
    };
    std::vector<Arg> args;
    int mut_count = 0;
    for (auto [alo, ahi] : arg_ranges) {
      Arg a;
      if (tok(alo).is_identifier("mut_ref") && tok(alo + 1).is("(") &&
          matching_close(toks_, alo + 1) == ahi - 1) {
        a.mut = true;
        ++mut_count;
        a.text = walk_expr(alo + 2, ahi - 1, pc);
      } else {
        a.text = walk_expr(alo, ahi, pc);
      }
      a.name = fresh("v");
      args.push_back(std::move(a));
    }
    if (mut_count > 1) {
      fail(i, "at most one mut_ref argument per fcall");
    }

    std::string call = callee + "(";
    for (std::size_t k = 0; k < args.size(); ++k) {
      call += (k ? ", " : "") + args[k].name;
    }
    call += ")";

    std::string expr =
        fallible ? "ifc::detail::lift_fallible(" + call + ")"
                 : "ifc::detail::lift_public_call([&]() { return " + call +
                       "; })";
    // Wrap const chains innermost-last so argument expressions evaluate in
    // source order; a mut_ref chain goes outermost so the equality check
    // sees the join of all other argument labels.
    for (std::size_t k = args.size(); k-- > 0;) {
      if (args[k].mut) continue;
      expr = "ifc::chain((" + trim(args[k].text) + "), [&](auto&& " +
             args[k].name + ") { return " + expr + "; })";
    }
    for (const Arg& a : args) {
      if (!a.mut) continue;
      expr = "ifc::chain_mut((" + trim(a.text) + "), [&](auto& " + a.name +
             ") { return " + expr + "; })";
    }

    plan_.calls.push_back(CallPlan{toks_[i].line, "function", trim(raw(lo, args_open)),
                                   static_cast<int>(args.size()), fallible});
    *out += expr;
    return close + 1;
  }

  // Splits an mcall body into root and chain; flattens nested mcall roots.
  void parse_mcall_inner(std::size_t lo, std::size_t hi, std::string* root,
                         std::vector<std::pair<std::size_t, std::size_t>>* chain,
                         PcContext* pc) {
    int depth = 0;
    std::size_t split = toks_.size();
    for (std::size_t j = lo; j < hi; ++j) {
      const Token& t = tok(j);
      if (is_open(t)) ++depth;
      if (is_close(t)) --depth;
      if (depth == 0 && (t.is(".") || t.is("->"))) {
        split = j;
        break;
      }
    }
    if (split >= toks_.size()) {
      fail(lo, "mcall expects a method call or field access on a receiver");
    }
    if (tok(lo).is_identifier("mcall") && tok(lo + 1).is("(") &&
        matching_close(toks_, lo + 1) == split - 1) {
      // Nested mcall as the receiver: re-root to the innermost receiver and
      // splice the chains together.
      std::size_t inner_lo = lo + 2;
      std::size_t inner_hi = split - 1;
      if (inner_hi > inner_lo && tok(inner_hi - 1).is("?")) {
        fail(lo, "a fallible mcall cannot be chained further; bind it first");
      }
      parse_mcall_inner(inner_lo, inner_hi, root, chain, pc);
    } else {
      *root = walk_expr(lo, split, pc);
    }
    chain->emplace_back(split, hi);
  }

  std::size_t transform_mcall(std::size_t i, PcContext* pc, std::string* out) {
    std::size_t open = i + 1;
    std::size_t close = matching_close(toks_, open);
    if (close >= toks_.size()) fail(i, "unbalanced mcall");
    std::size_t lo = open + 1;
    std::size_t hi = close;
    bool fallible = hi > lo && tok(hi - 1).is("?");
    if (fallible) --hi;
    if (lo >= hi) fail(i, "mcall expects a method call or field access");

    std::string root;
    std::vector<std::pair<std::size_t, std::size_t>> chain_parts;
    parse_mcall_inner(lo, hi, &root, &chain_parts, pc);

    std::string chain_text;
    bool has_call = false;
    int segments = 0;
    for (auto [clo, chi] : chain_parts) {
      chain_text += walk_expr(clo, chi, pc);
      for (std::size_t j = clo; j < chi; ++j) {
        if (tok(j).is("(")) has_call = true;
        if (tok(j).is(".") || tok(j).is("->")) ++segments;
        std::size_t skip = is_open(tok(j)) ? matching_close(toks_, j) : j;
        if (skip > j) j = skip;
      }
    }

    std::string recv = fresh("r");
    std::string fn = fallible ? "ifc::detail::call_preserving_label_try"
                              : "ifc::detail::call_preserving_label";
    *out += fn + "((" + trim(root) + "), [&](auto&& " + recv + ") { return (" +
            recv + chain_text + "); })";

    plan_.calls.push_back(CallPlan{toks_[i].line,
                                   has_call ? "method-chain" : "field-access",
                                   trim(root), segments, fallible});
    return close + 1;
  }

  // ---- pc_block -------------------------------------------------------------

  std::size_t transform_pc_block(std::size_t i, PcContext* outer,
                                 std::string* out) {
    if (!tok(i + 1).is("{")) {
      fail(i, "pc_block syntax: pc_block { (LABEL) { ... } }");
    }
    std::size_t outer_close = matching_close(toks_, i + 1);
    if (outer_close >= toks_.size()) fail(i, "unbalanced pc_block");
    if (!tok(i + 2).is("(")) {
      fail(i, "pc_block expects a parenthesized label: pc_block { (LABEL) { ... } }");
    }
    std::size_t label_close = matching_close(toks_, i + 2);
    std::string label = trim(raw(i + 3, label_close));
    if (label.empty()) fail(i, "pc_block label is empty");
    if (!tok(label_close + 1).is("{")) {
      fail(i, "pc_block expects a braced body after the label");
    }
    std::size_t body_open = label_close + 1;
    std::size_t body_close = matching_close(toks_, body_open);
    if (body_close + 1 != outer_close) {
      fail(i, "unexpected tokens after the pc_block body");
    }

    plan_.blocks.push_back(BlockPlan{toks_[i].line, label, {}, {}, {}});
    PcContext ctx;
    ctx.pc_var = fresh("pc");
    ctx.depth = outer ? outer->depth + 1 : 0;
    ctx.plan_index = plan_.blocks.size() - 1;

    *out += "{ auto " + ctx.pc_var + " = ";
    if (outer) {
      *out += "ifc::detail::pc_enter_nested<" + label + ">(" + outer->pc_var +
              ");";
    } else {
      *out += "ifc::detail::pc_enter<" + label + ">();";
    }
    *out += " (void)" + ctx.pc_var + ";\n";
    *out += pc_statements(body_open + 1, body_close, ctx);
    *out += "}";
    return outer_close + 1;
  }

  std::string pc_statements(std::size_t lo, std::size_t hi, PcContext& ctx) {
    std::string out;
    std::size_t i = lo;
    while (i < hi) {
      i = pc_statement(i, hi, ctx, &out);
    }
    return out;
  }

  // Transforms the single statement starting at i; returns the next index.
  std::size_t pc_statement(std::size_t i, std::size_t hi, PcContext& ctx,
                           std::string* out) {
    const Token& t = tok(i);
    if (t.is(";")) {
      *out += raw(i, i + 1);
      return i + 1;
    }
    if (t.is("{")) {
      std::size_t close = matching_close(toks_, i);
      if (close >= toks_.size()) fail(i, "unbalanced block");
      *out += "{\n" + pc_statements(i + 1, close, ctx) + "}\n";
      return close + 1;
    }
    if (t.kind == TokenKind::kIdentifier) {
      std::string kw(t.text);
      if (kw == "pc_block") return transform_pc_block(i, &ctx, out);
      if (kw == "if") return transform_if(i, hi, ctx, out);
      if (kw == "while") return transform_while(i, hi, ctx, out);
      if (kw == "for") return transform_range_for(i, hi, ctx, out);
      if (kw == "return") {
        fail(i, "return inside pc_block is not allowed: leaving the block "
                "early is an implicit flow to the caller");
      }
      if (kw == "throw") {
        fail(i, "throw inside pc_block is not allowed: an exception is an "
                "early exit out of the block");
      }
      if (kw == "break" || kw == "continue") {
        if (!tok(i + 1).is(";")) fail(i, "expected ';' after " + kw);
        if (ctx.loop_pc.empty()) {
          fail(i, kw + " inside pc_block must target a loop inside the block");
        }
        *out += "ifc::detail::require_same_pc(" + ctx.pc_var + ", " +
                ctx.loop_pc.back() + "); " + kw + ";\n";
        return i + 2;
      }
      if (kw == "do" || kw == "switch" || kw == "goto" || kw == "try") {
        fail(i, "'" + kw + "' is not supported inside pc_block");
      }
      if (kw == "static" || kw == "thread_local") {
        fail(i, "persistent local state inside pc_block is not supported");
      }
    }
    if (t.is("++") || t.is("--")) {
      fail(i, "increment/decrement inside pc_block is not supported; write "
              "it as an assignment statement (x = x + 1)");
    }

    // Plain statement: declaration, assignment, or expression.
    std::size_t semi = i;
    int depth = 0;
    while (semi < hi) {
      const Token& s = tok(semi);
      if (is_open(s)) ++depth;
      if (is_close(s)) --depth;
      if (depth == 0 && s.is(";")) break;
      if (depth == 0 && s.is("{")) {
        fail(i, "unsupported statement inside pc_block");
      }
      ++semi;
    }
    if (semi >= hi) fail(i, "missing ';' inside pc_block");

    // First top-level assignment operator, if any.
    std::size_t eq = semi;
    depth = 0;
    for (std::size_t j = i; j < semi; ++j) {
      const Token& s = tok(j);
      if (is_open(s)) ++depth;
      if (is_close(s)) --depth;
      if (depth == 0 && s.kind == TokenKind::kPunct &&
          assign_ops().count(std::string(s.text))) {
        eq = j;
        break;
      }
    }

    if (eq == semi) {
      // Expression statement.
      *out += walk_expr(i, semi, &ctx) + ";\n";
      return semi + 1;
    }
    if (!tok(eq).is("=")) {
      fail(eq, "compound assignment inside pc_block is not supported; write "
               "x = x + e");
    }
    if (is_declaration(i, eq)) {
      *out += raw(i, eq + 1) + walk_expr(eq + 1, semi, &ctx) + ";\n";
      return semi + 1;
    }

    std::string target = walk_expr(i, eq, &ctx);
    std::string value = walk_expr(eq + 1, semi, &ctx);
    plan_.blocks[ctx.plan_index].assignments.push_back(
        AssignSite{t.line, trim(raw(i, eq))});
    *out += "ifc::detail::secure_assign(" + ctx.pc_var + ", " + trim(target) +
            ", (" + trim(value) + "));\n";
    return semi + 1;
  }

  bool is_declaration(std::size_t lo, std::size_t eq) const {
    if (lo >= eq) return false;
    if (tok(lo).kind == TokenKind::kIdentifier &&
        decl_keywords().count(std::string(tok(lo).text))) {
      return true;
    }
    // TYPE NAME = ... : ends with an identifier preceded by a type-ish
    // token, with no member access, indexing, or calls at the top level.
    if (tok(eq - 1).kind != TokenKind::kIdentifier) return false;
    int units = 0;
    int depth = 0;
    for (std::size_t j = lo; j < eq; ++j) {
      const Token& s = tok(j);
      if (is_open(s)) ++depth;
      if (is_close(s)) --depth;
      if (depth == 0 &&
          (s.is(".") || s.is("->") || s.is("[") || s.is("("))) {
        return false;
      }
      if (depth == 0 && s.kind == TokenKind::kIdentifier) ++units;
    }
    return units >= 2;
  }

  std::size_t transform_if(std::size_t i, std::size_t hi, PcContext& ctx,
                           std::string* out) {
    if (!tok(i + 1).is("(")) fail(i, "expected '(' after if");
    std::size_t copen = i + 1;
    std::size_t cclose = matching_close(toks_, copen);
    if (cclose >= toks_.size()) fail(i, "unbalanced if condition");

    std::string cond = walk_expr(copen + 1, cclose, &ctx);
    std::string cvar = fresh("c");
    std::string pcvar = fresh("pc");
    plan_.blocks[ctx.plan_index].conditions.push_back(
        ConditionSite{toks_[i].line, trim(raw(copen + 1, cclose))});

    PcContext inner = ctx;
    inner.pc_var = pcvar;
    inner.depth = ctx.depth + 1;

    std::string then_text;
    std::size_t next = pc_statement(cclose + 1, hi, inner, &then_text);

    std::string else_text;
    bool has_else = false;
    if (next < hi && tok(next).is_identifier("else")) {
      has_else = true;
      next = pc_statement(next + 1, hi, inner, &else_text);
    }

    *out += "{ auto " + cvar + " = ifc::detail::inspect_condition(" +
            ctx.pc_var + ", (" + trim(cond) + "));\n";
    *out += "auto " + pcvar + " = ifc::detail::join_labels(" + ctx.pc_var +
            ", " + cvar + "); (void)" + pcvar + ";\n";
    *out += "if (" + cvar + ".taken) {\n" + then_text + "}";
    if (has_else) {
      *out += " else {\n" + else_text + "}";
    }
    *out += " }\n";
    return next;
  }

  std::size_t transform_while(std::size_t i, std::size_t hi, PcContext& ctx,
                              std::string* out) {
    if (!tok(i + 1).is("(")) fail(i, "expected '(' after while");
    std::size_t copen = i + 1;
    std::size_t cclose = matching_close(toks_, copen);
    if (cclose >= toks_.size()) fail(i, "unbalanced while condition");

    std::string cond = walk_expr(copen + 1, cclose, &ctx);
    std::string cvar = fresh("c");
    std::string pcvar = fresh("pc");
    plan_.blocks[ctx.plan_index].conditions.push_back(
        ConditionSite{toks_[i].line, trim(raw(copen + 1, cclose))});

    PcContext inner = ctx;
    inner.pc_var = pcvar;
    inner.depth = ctx.depth + 1;
    inner.loop_pc.push_back(ctx.pc_var);

    std::string body_text;
    std::size_t next = pc_statement(cclose + 1, hi, inner, &body_text);

    *out += "while (true) {\n";
    *out += "auto " + cvar + " = ifc::detail::inspect_condition(" +
            ctx.pc_var + ", (" + trim(cond) + "));\n";
    *out += "if (!" + cvar + ".taken) break;\n";
    *out += "auto " + pcvar + " = ifc::detail::join_labels(" + ctx.pc_var +
            ", " + cvar + "); (void)" + pcvar + ";\n";
    *out += body_text;
    *out += "}\n";
    return next;
  }

  std::size_t transform_range_for(std::size_t i, std::size_t hi,
                                  PcContext& ctx, std::string* out) {
    if (!tok(i + 1).is("(")) fail(i, "expected '(' after for");
    std::size_t hopen = i + 1;
    std::size_t hclose = matching_close(toks_, hopen);
    if (hclose >= toks_.size()) fail(i, "unbalanced for header");

    std::size_t colon = toks_.size();
    int depth = 0;
    for (std::size_t j = hopen + 1; j < hclose; ++j) {
      const Token& s = tok(j);
      if (is_open(s)) ++depth;
      if (is_close(s)) --depth;
      if (depth == 0 && s.is(";")) {
        fail(i, "classic for loops are not supported inside pc_block; use "
                "while");
      }
      if (depth == 0 && s.is(":")) {
        colon = j;
        break;
      }
    }
    if (colon >= toks_.size()) {
      fail(i, "classic for loops are not supported inside pc_block; use "
              "while");
    }

    // The loop variable declaration copies through; the range expression is
    // walked (labeled containers are not iterable, so a labeled range is a
    // host type error on its own).
    std::string header =
        raw(hopen + 1, colon + 1) + walk_expr(colon + 1, hclose, &ctx);

    PcContext inner = ctx;
    inner.loop_pc.push_back(ctx.pc_var);
    std::string body_text;
    std::size_t next = pc_statement(hclose + 1, hi, inner, &body_text);

    *out += "for (" + header + ") {\n" + body_text + "}\n";
    return next;
  }

  const std::string& src_;
  RewriteOptions opts_;
  std::vector<Token> toks_;
  RewritePlan plan_;
  std::set<std::string> allow_;
  std::map<std::string, AttrFn> attr_fns_;
  int counter_ = 0;
};

}  // namespace

RewriteResult rewrite_source(const std::string& source,
                             const RewriteOptions& options) {
  Rewriter rewriter(source, options);
  return rewriter.run();
}

std::string plan_to_json(const RewritePlan& plan) {
  nlohmann::json j;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : plan.blocks) {
    nlohmann::json jb;
    jb["line"] = b.line;
    jb["label"] = b.label;
    jb["conditions"] = nlohmann::json::array();
    for (const auto& c : b.conditions) {
      jb["conditions"].push_back({{"line", c.line}, {"text", c.text}});
    }
    jb["assignments"] = nlohmann::json::array();
    for (const auto& a : b.assignments) {
      jb["assignments"].push_back({{"line", a.line}, {"target", a.target}});
    }
    jb["calls"] = nlohmann::json::array();
    for (const auto& c : b.calls) {
      jb["calls"].push_back(
          {{"line", c.line}, {"callee", c.callee}, {"vetted_via", c.vetted_via}});
    }
    j["blocks"].push_back(jb);
  }
  j["calls"] = nlohmann::json::array();
  for (const auto& c : plan.calls) {
    j["calls"].push_back({{"line", c.line},
                          {"kind", c.kind},
                          {"root", c.root},
                          {"args", c.arg_count},
                          {"fallible", c.fallible}});
  }
  j["attributed_functions"] = plan.attributed_functions;
  return j.dump(2);
}

}  // namespace ifcpp
