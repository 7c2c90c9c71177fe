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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/graph.hpp"
#include "wirtinger/primitives.hpp"

namespace wirtinger::expr {

/// Half-open byte range [offset, offset + length) of the source text.
struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Lexical, syntax, or name-resolution error at a source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  SourceSpan span_;
  std::vector<std::string> expected_;
};

enum class TokenKind { number, imaginary, identifier, op, lparen, rparen, comma };

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourceSpan span;
};

/// Longest-match lexing. A number immediately followed by `i` is an
/// imaginary literal (`2i`); the identifier `i` on its own is the imaginary
/// unit and is resolved by the parser.
std::vector<Token> tokenize(std::string_view text);

struct Ast {
  enum class Kind { constant, variable, negate, binary, call };

  Kind kind = Kind::constant;
  Complex value{};        // constant
  std::string name;       // variable or function name
  char op = 0;            // binary: one of + - * / ^
  std::vector<Ast> children;
  SourceSpan span;

  /// Structural equality; spans are ignored.
  friend bool operator==(const Ast& a, const Ast& b);
};

/// Precedence, lowest first: + -, * /, unary -, ^ (right associative),
/// then literals, names, calls and parentheses. So -z^2 is -(z^2). The
/// exponent of ^ must be an integer literal, optionally negated.
Ast parse(std::span<const Token> tokens);
Ast parse(std::string_view text);

/// Canonical fully parenthesized form, e.g. (1+(2i*z)). Re-parsing the
/// printed form of a parsed expression gives the same tree.
std::string print_ast(const Ast& ast);

/// Lowers to a scalar graph: ^k -> powi, c*e and e*c -> scale, calls ->
/// registry primitives. `variable` is the only name allowed besides the
/// imaginary unit.
Graph to_graph(const Ast& ast, const Registry& registry = builtin_registry(), std::string_view variable = "z");

/// tokenize + parse + to_graph.
Graph compile(std::string_view text, const Registry& registry = builtin_registry(), std::string_view variable = "z");

/// Direct evaluation with <complex> functions, independent of the graph
/// machinery.
Complex interpret(const Ast& ast, Complex z, std::string_view variable = "z");

}  // namespace wirtinger::expr
