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

#include <charconv>
#include <climits>
#include <cmath>

#include "wirtinger/expr.hpp"

namespace wirtinger::expr {

bool operator==(const Ast& a, const Ast& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.op == b.op && a.children == b.children;
}

namespace {

SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
  const std::size_t lo = std::min(a.offset, b.offset);
  const std::size_t hi = std::max(a.offset + a.length, b.offset + b.length);
  return {lo, hi - lo};
}

double parse_number(const Token& t) {
  std::string_view digits = t.lexeme;
  if (t.kind == TokenKind::imaginary) digits.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
    throw ParseError("invalid number '" + t.lexeme + "'", t.span);
  }
  return value;
}

bool is_integer_literal(const Ast& e) {
  const Ast* lit = &e;
  if (e.kind == Ast::Kind::negate) lit = &e.children[0];
  if (lit->kind != Ast::Kind::constant || lit->value.imag() != 0.0) return false;
  const double v = lit->value.real();
  return v == std::floor(v) && v <= static_cast<double>(INT_MAX);
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Ast parse() {
    Ast e = additive();
    if (!at_end()) throw ParseError("unexpected '" + peek().lexeme + "'", peek().span, {"operator", "end of input"});
    return e;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  bool peek_op(char op) const { return !at_end() && peek().kind == TokenKind::op && peek().lexeme[0] == op; }
  bool peek_kind(TokenKind k) const { return !at_end() && peek().kind == k; }

  SourceSpan end_span() const {
    if (tokens_.empty()) return {0, 0};
    const SourceSpan& last = tokens_.back().span;
    return {last.offset + last.length, 0};
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    if (at_end()) throw ParseError(what + ": unexpected end of input", end_span(), std::move(expected));
    throw ParseError(what + ": unexpected '" + peek().lexeme + "'", peek().span, std::move(expected));
  }

  static Ast binary(char op, Ast lhs, Ast rhs) {
    Ast e;
    e.kind = Ast::Kind::binary;
    e.op = op;
    e.span = cover(lhs.span, rhs.span);
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Ast additive() {
    Ast lhs = multiplicative();
    while (peek_op('+') || peek_op('-')) {
      const char op = tokens_[pos_++].lexeme[0];
      lhs = binary(op, std::move(lhs), multiplicative());
    }
    return lhs;
  }

  Ast multiplicative() {
    Ast lhs = unary();
    while (peek_op('*') || peek_op('/')) {
      const char op = tokens_[pos_++].lexeme[0];
      lhs = binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Ast unary() {
    if (peek_op('-')) {
      const SourceSpan minus = tokens_[pos_++].span;
      Ast e;
      e.kind = Ast::Kind::negate;
      e.children.push_back(unary());
      e.span = cover(minus, e.children[0].span);
      return e;
    }
    return power();
  }

  Ast power() {
    Ast base = primary();
    if (!peek_op('^')) return base;
    ++pos_;
    Ast exponent = unary();  // right associative; also admits a leading minus
    if (!is_integer_literal(exponent)) {
      throw ParseError("exponent must be an integer literal", exponent.span);
    }
    return binary('^', std::move(base), std::move(exponent));
  }

  Ast primary() {
    if (at_end()) fail("expected an operand", {"number", "identifier", "'('", "'-'"});
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case TokenKind::number:
      case TokenKind::imaginary: {
        ++pos_;
        const double v = parse_number(t);
        Ast e;
        e.kind = Ast::Kind::constant;
        e.value = t.kind == TokenKind::number ? Complex(v, 0.0) : Complex(0.0, v);
        e.span = t.span;
        return e;
      }
      case TokenKind::identifier: {
        ++pos_;
        if (peek_kind(TokenKind::lparen)) return call(t);
        Ast e;
        e.span = t.span;
        if (t.lexeme == "i") {
          e.kind = Ast::Kind::constant;
          e.value = Complex(0.0, 1.0);
        } else {
          e.kind = Ast::Kind::variable;
          e.name = t.lexeme;
        }
        return e;
      }
      case TokenKind::lparen: {
        ++pos_;
        Ast inner = additive();
        if (!peek_kind(TokenKind::rparen)) fail("unbalanced parenthesis", {"')'"});
        ++pos_;
        return inner;
      }
      default: fail("expected an operand", {"number", "identifier", "'('", "'-'"});
    }
  }

  Ast call(const Token& name) {
    ++pos_;  // '('
    Ast e;
    e.kind = Ast::Kind::call;
    e.name = name.lexeme;
    if (!peek_kind(TokenKind::rparen)) {
      e.children.push_back(additive());
      while (peek_kind(TokenKind::comma)) {
        ++pos_;
        e.children.push_back(additive());
      }
    }
    if (!peek_kind(TokenKind::rparen)) fail("unterminated argument list", {"','", "')'"});
    e.span = cover(name.span, tokens_[pos_++].span);
    return e;
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

void print_to(const Ast& e, std::string& out) {
  switch (e.kind) {
    case Ast::Kind::constant:
      if (e.value.imag() == 0.0 && !std::signbit(e.value.real())) {
        out += format_real(e.value.real());
      } else if (e.value.real() == 0.0 && !std::signbit(e.value.imag())) {
        out += format_real(e.value.imag()) + "i";
      } else {
        out += "(" + format_complex(e.value) + ")";
      }
      return;
    case Ast::Kind::variable: out += e.name; return;
    case Ast::Kind::negate:
      out += "(-";
      print_to(e.children[0], out);
      out += ")";
      return;
    case Ast::Kind::binary:
      out += "(";
      print_to(e.children[0], out);
      out += e.op;
      print_to(e.children[1], out);
      out += ")";
      return;
    case Ast::Kind::call:
      out += e.name + "(";
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k > 0) out += ",";
        print_to(e.children[k], out);
      }
      out += ")";
      return;
  }
}

}  // namespace

Ast parse(std::span<const Token> tokens) { return Parser(tokens).parse(); }

Ast parse(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  return parse(tokens);
}

std::string print_ast(const Ast& ast) {
  std::string out;
  print_to(ast, out);
  return out;
}

}  // namespace wirtinger::expr
