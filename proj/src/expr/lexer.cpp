//   Copyright 2026 The Wirtinger Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#include <cctype>

#include "wirtinger/expr.hpp"

namespace wirtinger::expr {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

// Byte length of the UTF-8 sequence starting with c (1 for invalid leads).
std::size_t utf8_length(unsigned char c) {
  if (c >= 0xF0) return 4;
  if (c >= 0xE0) return 3;
  if (c >= 0xC0) return 2;
  return 1;
}

std::string describe(std::string_view text, std::size_t pos, std::size_t len) {
  return "'" + std::string(text.substr(pos, len)) + "'";
}

}  // namespace

ParseError::ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected)
    : Error([&] {
        std::string what = message + " at offset " + std::to_string(span.offset);
        if (!expected.empty()) {
          what += " (expected ";
          for (std::size_t k = 0; k < expected.size(); ++k) what += (k ? ", " : "") + expected[k];
          what += ")";
        }
        return what;
      }()),
      message_(message),
      span_(span),
      expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;

    if (is_digit(c) || (c == '.' && pos + 1 < n && is_digit(text[pos + 1]))) {
      while (pos < n && is_digit(text[pos])) ++pos;
      if (pos < n && text[pos] == '.') {
        ++pos;
        while (pos < n && is_digit(text[pos])) ++pos;
      }
      if (pos < n && (text[pos] == 'e' || text[pos] == 'E')) {
        std::size_t look = pos + 1;
        if (look < n && (text[look] == '+' || text[look] == '-')) ++look;
        if (look < n && is_digit(text[look])) {
          pos = look;
          while (pos < n && is_digit(text[pos])) ++pos;
        }
      }
      TokenKind kind = TokenKind::number;
      if (pos < n && text[pos] == 'i' && !(pos + 1 < n && is_ident_char(text[pos + 1]))) {
        kind = TokenKind::imaginary;
        ++pos;
      }
      tokens.push_back({kind, std::string(text.substr(start, pos - start)), {start, pos - start}});
      continue;
    }

    if (is_ident_start(c)) {
      while (pos < n && is_ident_char(text[pos])) ++pos;
      tokens.push_back({TokenKind::identifier, std::string(text.substr(start, pos - start)), {start, pos - start}});
      continue;
    }

    TokenKind kind;
    switch (c) {
      case '+': case '-': case '*': case '/': case '^': kind = TokenKind::op; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      default: {
        const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), n - pos);
        throw ParseError("unexpected character " + describe(text, pos, len), {pos, len});
      }
    }
    ++pos;
    tokens.push_back({kind, std::string(1, c), {start, 1}});
  }
  return tokens;
}

}  // namespace wirtinger::expr
