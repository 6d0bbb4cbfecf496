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

#include "support/lexer.hpp"

#include <array>
#include <cctype>

namespace ifcpp {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Multi-character punctuators, longest first for maximal munch.
constexpr std::array<std::string_view, 24> kPuncts = {
    "<<=", ">>=", "...", "->*", "::", "->", "++", "--", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "&&", "||", "+=", "-=", "*=", "/=",
    "%=",  "&=",  "|=",  "^=",
};

}  // namespace

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  int line = 1;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end,
                  int tok_line) {
    tokens.push_back(Token{kind, src.substr(begin, end - begin), begin,
                           tok_line});
  };

  while (i < n) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    // Line comment.
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    // Block comment.
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      std::size_t start_line = line;
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) {
        if (src[i] == '\n') ++line;
        ++i;
      }
      if (i + 1 >= n) {
        throw LexError{"unterminated block comment", static_cast<int>(start_line)};
      }
      i += 2;
      continue;
    }
    // Preprocessor directive: treat the rest of the (logical) line as one
    // punct-like token so directives pass through untouched.
    if (c == '#' && (tokens.empty() || tokens.back().line != line)) {
      std::size_t begin = i;
      int tok_line = line;
      while (i < n && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n && src[i + 1] == '\n') {
          ++line;
          i += 2;
          continue;
        }
        ++i;
      }
      push(TokenKind::kPunct, begin, i, tok_line);
      continue;
    }
    // Raw string literal: R"delim( ... )delim".
    if (c == 'R' && i + 1 < n && src[i + 1] == '"') {
      std::size_t begin = i;
      int tok_line = line;
      std::size_t j = i + 2;
      std::string delim;
      while (j < n && src[j] != '(') delim.push_back(src[j++]);
      if (j >= n) throw LexError{"malformed raw string literal", line};
      std::string closer = ")" + delim + "\"";
      std::size_t end = src.find(closer, j + 1);
      if (end == std::string_view::npos) {
        throw LexError{"unterminated raw string literal", tok_line};
      }
      for (std::size_t k = i; k < end + closer.size(); ++k) {
        if (src[k] == '\n') ++line;
      }
      i = end + closer.size();
      push(TokenKind::kString, begin, i, tok_line);
      continue;
    }
    // String / char literal.
    if (c == '"' || c == '\'') {
      std::size_t begin = i;
      int tok_line = line;
      char quote = c;
      ++i;
      while (i < n && src[i] != quote) {
        if (src[i] == '\\' && i + 1 < n) {
          i += 2;
          continue;
        }
        if (src[i] == '\n') {
          throw LexError{"unterminated literal", tok_line};
        }
        ++i;
      }
      if (i >= n) throw LexError{"unterminated literal", tok_line};
      ++i;
      push(TokenKind::kString, begin, i, tok_line);
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t begin = i;
      while (i < n && is_ident_char(src[i])) ++i;
      push(TokenKind::kIdentifier, begin, i, line);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n &&
         std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t begin = i;
      while (i < n && (is_ident_char(src[i]) || src[i] == '.' ||
                       ((src[i] == '+' || src[i] == '-') && i > begin &&
                        (src[i - 1] == 'e' || src[i - 1] == 'E' ||
                         src[i - 1] == 'p' || src[i - 1] == 'P')))) {
        ++i;
      }
      push(TokenKind::kNumber, begin, i, line);
      continue;
    }
    // Punctuation, longest match first.
    bool matched = false;
    for (std::string_view p : kPuncts) {
      if (src.substr(i, p.size()) == p) {
        push(TokenKind::kPunct, i, i + p.size(), line);
        i += p.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      push(TokenKind::kPunct, i, i + 1, line);
      ++i;
    }
  }
  tokens.push_back(Token{TokenKind::kEnd, src.substr(n, 0), n, line});
  return tokens;
}

std::size_t matching_close(const std::vector<Token>& tokens,
                           std::size_t open_index) {
  std::string_view open = tokens[open_index].text;
  std::string_view close = open == "(" ? ")" : open == "[" ? "]" : "}";
  int depth = 0;
  for (std::size_t i = open_index; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.kind != TokenKind::kPunct) continue;
    if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
    if (t.text == ")" || t.text == "]" || t.text == "}") {
      --depth;
      if (depth == 0 && t.text == close) return i;
    }
  }
  return tokens.size();
}

}  // namespace ifcpp
