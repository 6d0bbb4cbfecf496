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

#ifndef IFCPP_SUPPORT_LEXER_HPP_
#define IFCPP_SUPPORT_LEXER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// A token scanner for C++ source, shared by the rewriter, the metrics
// counter, and the harness's fix applier. Comments and whitespace are
// skipped (their spans stay recoverable through token offsets); string,
// character, and raw-string literals are single tokens, so token-level
// matching never fires inside comments or literals.

namespace ifcpp {

enum class TokenKind {
  kIdentifier,
  kNumber,
  kString,  // string literal, char literal, or raw string, quotes included
  kPunct,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string_view text;
  std::size_t offset = 0;  // byte offset into the source
  int line = 1;            // 1-based

  bool is(std::string_view s) const { return text == s; }
  bool is_identifier(std::string_view s) const {
    return kind == TokenKind::kIdentifier && text == s;
  }
};

struct LexError {
  std::string message;
  int line = 0;
};

// Tokenizes `source`. The returned tokens view into `source`, which must
// outlive them. A trailing kEnd token is always appended. Malformed input
// (unterminated literal or block comment) throws LexError.
std::vector<Token> lex(std::string_view source);

// Utility used by several consumers: index of the token matching the closing
// delimiter for the opener at `open_index` ((), [], {}). Returns the size of
// `tokens` if unbalanced.
std::size_t matching_close(const std::vector<Token>& tokens,
                           std::size_t open_index);

}  // namespace ifcpp

#endif  // IFCPP_SUPPORT_LEXER_HPP_
