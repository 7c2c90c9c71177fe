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

#include <cmath>

#include "wirtinger/expr.hpp"

namespace wirtinger::expr {
namespace {

int exponent_value(const Ast& e) {
  if (e.kind == Ast::Kind::negate) return -exponent_value(e.children[0]);
  return static_cast<int>(e.value.real());
}

class Lowering {
 public:
  Lowering(const Registry& registry, std::string_view variable)
      : builder_(registry), variable_(variable), input_(builder_.input(Shape::scalar(), std::string(variable))) {}

  Graph run(const Ast& ast) { return builder_.build(lower(ast)); }

 private:
  Expr lower(const Ast& e) {
    switch (e.kind) {
      case Ast::Kind::constant: return builder_.constant(Tensor(e.value));
      case Ast::Kind::variable:
        if (e.name != variable_) {
          throw ParseError("unknown variable '" + e.name + "'", e.span, {std::string(variable_)});
        }
        return input_;
      case Ast::Kind::negate: return -lower(e.children[0]);
      case Ast::Kind::binary: return binary(e);
      case Ast::Kind::call: return call(e);
    }
    throw ParseError("malformed expression", e.span);
  }

  Expr binary(const Ast& e) {
    const Ast& lhs = e.children[0];
    const Ast& rhs = e.children[1];
    switch (e.op) {
      case '+': return lower(lhs) + lower(rhs);
      case '-': return lower(lhs) - lower(rhs);
      case '*':
        if (lhs.kind == Ast::Kind::constant) return scale(lhs.value, lower(rhs));
        if (rhs.kind == Ast::Kind::constant) return scale(rhs.value, lower(lhs));
        return lower(lhs) * lower(rhs);
      case '/': return lower(lhs) / lower(rhs);
      case '^': return powi(lower(lhs), exponent_value(rhs));
      default: throw ParseError(std::string("unknown operator '") + e.op + "'", e.span);
    }
  }

  Expr call(const Ast& e) {
    const Primitive* p = builder_.registry().find(e.name);
    if (p == nullptr || !p->scalar_function) {
      std::vector<std::string> known;
      for (const std::string& name : builder_.registry().names()) {
        if (builder_.registry().at(name).scalar_function) known.push_back(name);
      }
      throw ParseError("unknown function '" + e.name + "'", e.span, std::move(known));
    }
    if (e.children.size() != p->arity) {
      throw ParseError(e.name + " takes " + std::to_string(p->arity) + " argument(s), got " +
                           std::to_string(e.children.size()),
                       e.span);
    }
    std::vector<Expr> args;
    for (const Ast& child : e.children) args.push_back(lower(child));
    return builder_.apply(p->name, args);
  }

  GraphBuilder builder_;
  std::string_view variable_;
  Expr input_;
};

Complex power_by_multiplication(Complex z, int k) {
  Complex result(1.0, 0.0);
  const long long n = k < 0 ? -static_cast<long long>(k) : k;
  for (long long j = 0; j < n; ++j) result *= z;
  return k < 0 ? Complex(1.0, 0.0) / result : result;
}

}  // namespace

Graph to_graph(const Ast& ast, const Registry& registry, std::string_view variable) {
  return Lowering(registry, variable).run(ast);
}

Graph compile(std::string_view text, const Registry& registry, std::string_view variable) {
  return to_graph(parse(text), registry, variable);
}

Complex interpret(const Ast& ast, Complex z, std::string_view variable) {
  auto arg = [&](std::size_t k) { return interpret(ast.children.at(k), z, variable); };
  switch (ast.kind) {
    case Ast::Kind::constant: return ast.value;
    case Ast::Kind::variable:
      if (ast.name != variable) throw ParseError("unknown variable '" + ast.name + "'", ast.span);
      return z;
    case Ast::Kind::negate: return -arg(0);
    case Ast::Kind::binary:
      switch (ast.op) {
        case '+': return arg(0) + arg(1);
        case '-': return arg(0) - arg(1);
        case '*': return arg(0) * arg(1);
        case '/': return arg(0) / arg(1);
        case '^': return power_by_multiplication(arg(0), exponent_value(ast.children[1]));
        default: break;
      }
      break;
    case Ast::Kind::call: {
      const std::string& f = ast.name;
      if (ast.children.size() == 1) {
        const Complex a = arg(0);
        if (f == "conj") return std::conj(a);
        if (f == "re") return a.real();
        if (f == "im") return a.imag();
        if (f == "abs2") return std::norm(a);
        if (f == "exp") return std::exp(a);
        if (f == "log") return std::log(a);
        if (f == "sin") return std::sin(a);
        if (f == "cos") return std::cos(a);
      }
      throw ParseError("unknown function '" + f + "'", ast.span);
    }
  }
  throw ParseError("malformed expression", ast.span);
}

}  // namespace wirtinger::expr
