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

#include "wirtinger/primitives.hpp"

#include <cmath>
#include <utility>

namespace wirtinger {
namespace {

using ComplexMatrix = Tensor::Storage;
using ComplexVector = Tensor::FlatVector;

constexpr Complex kI{0.0, 1.0};

// Jacobian block for an elementwise map: rank 0 for scalars, otherwise the
// diagonal matrix of per-entry derivatives.
Tensor diagonal_block(const Shape& shape, const ComplexVector& diag) {
  if (shape.rank() == 0) return Tensor(diag(0));
  return Tensor::matrix(ComplexMatrix(diag.asDiagonal()));
}

Tensor zero_block(const Shape& out, const Shape& in) { return Tensor::zeros(jacobian_shape(out, in)); }

void require_arity(const Primitive& p, std::size_t n) {
  if (n != p.arity) {
    throw ShapeError(p.name + " expects " + std::to_string(p.arity) + " input(s), got " + std::to_string(n));
  }
}

Shape same_shape(std::span<const Shape> in, const Attributes&) {
  for (const Shape& s : in.subspan(1)) {
    if (s != in[0]) throw ShapeError("elementwise operands differ in shape: " + in[0].to_string() + " vs " + s.to_string());
  }
  return in[0];
}

template <typename F>
Tensor map_entries(const Tensor& z, F&& f) {
  return {z.shape(), z.values().unaryExpr(std::forward<F>(f))};
}

template <typename F>
Tensor zip_entries(const Tensor& a, const Tensor& b, F&& f) {
  return {a.shape(), a.values().binaryExpr(b.values(), std::forward<F>(f))};
}

template <typename F>
ComplexVector entrywise(const Tensor& z, F&& f) {
  return z.flat().unaryExpr(std::forward<F>(f));
}

// A unary elementwise primitive described by scalar functions for its value
// and Wirtinger derivatives.
template <typename Value, typename Dz, typename Dzbar>
Primitive unary(std::string name, bool holomorphic, Value value, Dz dz, Dzbar dzbar) {
  Primitive p;
  p.name = std::move(name);
  p.arity = 1;
  p.holomorphic = holomorphic;
  p.scalar_function = true;
  p.shape_rule = same_shape;
  p.eval = [value](std::span<const Tensor> in, const Attributes&) { return map_entries(in[0], value); };
  p.wirtinger_rule = [dz, dzbar](std::span<const Tensor> in, std::size_t, const Attributes&) {
    const Shape& s = in[0].shape();
    return WirtingerPair(diagonal_block(s, entrywise(in[0], dz)), diagonal_block(s, entrywise(in[0], dzbar)));
  };
  return p;
}

Complex nonzero(Complex z, const char* what) {
  if (z == Complex(0.0, 0.0)) throw DomainError(what);
  return z;
}

Primitive make_add() {
  Primitive p;
  p.name = "add";
  p.arity = 2;
  p.holomorphic = true;
  p.shape_rule = same_shape;
  p.eval = [](std::span<const Tensor> in, const Attributes&) { return in[0] + in[1]; };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t, const Attributes&) {
    const Shape& s = in[0].shape();
    return WirtingerPair(diagonal_block(s, ComplexVector::Ones(s.size())), zero_block(s, s));
  };
  return p;
}

Primitive make_sub() {
  Primitive p;
  p.name = "sub";
  p.arity = 2;
  p.holomorphic = true;
  p.shape_rule = same_shape;
  p.eval = [](std::span<const Tensor> in, const Attributes&) { return in[0] - in[1]; };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t k, const Attributes&) {
    const Shape& s = in[0].shape();
    const Complex sign = k == 0 ? 1.0 : -1.0;
    return WirtingerPair(diagonal_block(s, ComplexVector::Constant(s.size(), sign)), zero_block(s, s));
  };
  return p;
}

Primitive make_mul() {
  Primitive p;
  p.name = "mul";
  p.arity = 2;
  p.holomorphic = true;
  p.shape_rule = same_shape;
  p.eval = [](std::span<const Tensor> in, const Attributes&) {
    return zip_entries(in[0], in[1], [](Complex u, Complex v) { return u * v; });
  };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t k, const Attributes&) {
    const Shape& s = in[0].shape();
    return WirtingerPair(diagonal_block(s, in[1 - k].flat()), zero_block(s, s));
  };
  return p;
}

Primitive make_div() {
  Primitive p;
  p.name = "div";
  p.arity = 2;
  p.holomorphic = true;
  p.shape_rule = same_shape;
  p.eval = [](std::span<const Tensor> in, const Attributes&) {
    return zip_entries(in[0], in[1], [](Complex u, Complex v) { return u / nonzero(v, "division by zero"); });
  };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t k, const Attributes&) {
    const Shape& s = in[0].shape();
    ComplexVector d(s.size());
    for (Index j = 0; j < s.size(); ++j) {
      const Complex u = in[0][j];
      const Complex v = nonzero(in[1][j], "division by zero");
      d(j) = k == 0 ? 1.0 / v : -u / (v * v);
    }
    return WirtingerPair(diagonal_block(s, d), zero_block(s, s));
  };
  return p;
}

Primitive make_scale() {
  Primitive p;
  p.name = "scale";
  p.arity = 1;
  p.holomorphic = true;
  p.shape_rule = same_shape;
  p.eval = [](std::span<const Tensor> in, const Attributes& a) { return a.constant * in[0]; };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t, const Attributes& a) {
    const Shape& s = in[0].shape();
    return WirtingerPair(diagonal_block(s, ComplexVector::Constant(s.size(), a.constant)), zero_block(s, s));
  };
  return p;
}

Primitive make_powi() {
  Primitive p;
  p.name = "powi";
  p.arity = 1;
  p.holomorphic = true;
  p.shape_rule = same_shape;
  p.eval = [](std::span<const Tensor> in, const Attributes& a) {
    return map_entries(in[0], [k = a.exponent](Complex z) { return integer_power(z, k); });
  };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t, const Attributes& a) {
    const int k = a.exponent;
    const Shape& s = in[0].shape();
    ComplexVector d = entrywise(in[0], [k](Complex z) {
      if (k == 0) return Complex(0.0, 0.0);
      if (k < 0) nonzero(z, "negative power of zero");
      return static_cast<double>(k) * integer_power(z, k - 1);
    });
    return WirtingerPair(diagonal_block(s, d), zero_block(s, s));
  };
  return p;
}

Primitive make_abs2() {
  return unary(
      "abs2", false, [](Complex z) { return Complex(std::norm(z), 0.0); },
      [](Complex z) { return std::conj(z); }, [](Complex z) { return z; });
}

Shape vector_pair(std::span<const Shape> in, const Attributes&) {
  if (in[0].rank() != 1 || in[1] != in[0]) {
    throw ShapeError("inner products need two vectors of equal length, got " + in[0].to_string() + " and " +
                     in[1].to_string());
  }
  return Shape::scalar();
}

Tensor row(const ComplexVector& v) { return Tensor::matrix(ComplexMatrix(v.transpose())); }

Primitive make_dot() {
  Primitive p;
  p.name = "dot";
  p.arity = 2;
  p.holomorphic = true;
  p.shape_rule = vector_pair;
  p.eval = [](std::span<const Tensor> in, const Attributes&) {
    return Tensor(in[0].flat().cwiseProduct(in[1].flat()).sum());
  };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t k, const Attributes&) {
    const Index n = in[0].size();
    return WirtingerPair(row(in[1 - k].flat()), Tensor::zeros(Shape::matrix(1, n)));
  };
  return p;
}

Primitive make_hdot() {
  Primitive p;
  p.name = "hdot";
  p.arity = 2;
  p.shape_rule = vector_pair;
  p.eval = [](std::span<const Tensor> in, const Attributes&) { return Tensor(in[0].flat().dot(in[1].flat())); };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t k, const Attributes&) {
    const Index n = in[0].size();
    const Tensor zero = Tensor::zeros(Shape::matrix(1, n));
    if (k == 0) return WirtingerPair(zero, row(in[1].flat()));
    return WirtingerPair(row(in[0].flat().conjugate()), zero);
  };
  return p;
}

Primitive make_matvec() {
  Primitive p;
  p.name = "matvec";
  p.arity = 2;
  p.holomorphic = true;
  p.shape_rule = [](std::span<const Shape> in, const Attributes&) {
    if (in[0].rank() != 2 || in[1].rank() != 1 || in[0].cols() != in[1].rows()) {
      throw ShapeError("matvec needs (m x n) * (n), got " + in[0].to_string() + " * " + in[1].to_string());
    }
    return Shape::vector(in[0].rows());
  };
  p.eval = [](std::span<const Tensor> in, const Attributes&) {
    return Tensor::vector(in[0].values() * in[1].flat());
  };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t k, const Attributes&) {
    const Index m = in[0].shape().rows();
    const Index n = in[0].shape().cols();
    if (k == 1) return WirtingerPair(Tensor::matrix(in[0].values()), Tensor::zeros(Shape::matrix(m, n)));
    // d(Az)_r / dA_(r,c) = z_c; A is flattened row-major.
    ComplexMatrix jac = ComplexMatrix::Zero(m, m * n);
    for (Index r = 0; r < m; ++r) jac.block(r, r * n, 1, n) = in[1].flat().transpose();
    return WirtingerPair(Tensor::matrix(jac), Tensor::zeros(Shape::matrix(m, m * n)));
  };
  return p;
}

Primitive make_sum() {
  Primitive p;
  p.name = "sum";
  p.arity = 1;
  p.holomorphic = true;
  p.shape_rule = [](std::span<const Shape>, const Attributes&) { return Shape::scalar(); };
  p.eval = [](std::span<const Tensor> in, const Attributes&) { return Tensor(in[0].flat().sum()); };
  p.wirtinger_rule = [](std::span<const Tensor> in, std::size_t, const Attributes&) {
    const Shape js = jacobian_shape(Shape::scalar(), in[0].shape());
    return WirtingerPair(Tensor(js, ComplexMatrix::Ones(js.rows(), js.cols())), Tensor::zeros(js));
  };
  return p;
}

std::vector<Primitive> builtin_primitives() {
  std::vector<Primitive> ps;
  ps.push_back(make_add());
  ps.push_back(make_sub());
  ps.push_back(make_mul());
  ps.push_back(make_div());
  ps.push_back(make_scale());
  ps.push_back(make_powi());
  ps.push_back(make_dot());
  ps.push_back(make_hdot());
  ps.push_back(make_matvec());
  ps.push_back(make_sum());
  ps.push_back(make_abs2());

  Primitive neg = unary(
      "neg", true, [](Complex z) { return -z; }, [](Complex) { return Complex(-1.0, 0.0); },
      [](Complex) { return Complex(0.0, 0.0); });
  neg.scalar_function = false;
  ps.push_back(std::move(neg));

  ps.push_back(unary(
      "conj", false, [](Complex z) { return std::conj(z); }, [](Complex) { return Complex(0.0, 0.0); },
      [](Complex) { return Complex(1.0, 0.0); }));
  ps.push_back(unary(
      "re", false, [](Complex z) { return Complex(z.real(), 0.0); }, [](Complex) { return Complex(0.5, 0.0); },
      [](Complex) { return Complex(0.5, 0.0); }));
  ps.push_back(unary(
      "im", false, [](Complex z) { return Complex(z.imag(), 0.0); }, [](Complex) { return -0.5 * kI; },
      [](Complex) { return 0.5 * kI; }));
  ps.push_back(unary(
      "exp", true, [](Complex z) { return std::exp(z); }, [](Complex z) { return std::exp(z); },
      [](Complex) { return Complex(0.0, 0.0); }));
  ps.push_back(unary(
      "log", true, [](Complex z) { return std::log(nonzero(z, "logarithm of zero")); },
      [](Complex z) { return 1.0 / nonzero(z, "logarithm of zero"); }, [](Complex) { return Complex(0.0, 0.0); }));
  ps.push_back(unary(
      "sin", true, [](Complex z) { return std::sin(z); }, [](Complex z) { return std::cos(z); },
      [](Complex) { return Complex(0.0, 0.0); }));
  ps.push_back(unary(
      "cos", true, [](Complex z) { return std::cos(z); }, [](Complex z) { return -std::sin(z); },
      [](Complex) { return Complex(0.0, 0.0); }));
  return ps;
}

}  // namespace

Registry::Registry(std::vector<Primitive> primitives) {
  for (Primitive& p : primitives) {
    const std::string name = p.name;
    if (!primitives_.emplace(name, std::move(p)).second) {
      throw ConfigError("duplicate primitive name '" + name + "'");
    }
  }
}

const Primitive* Registry::find(std::string_view name) const {
  auto it = primitives_.find(name);
  return it == primitives_.end() ? nullptr : &it->second;
}

const Primitive& Registry::at(std::string_view name) const {
  const Primitive* p = find(name);
  if (p == nullptr) throw ConfigError("unknown primitive '" + std::string(name) + "'");
  return *p;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, p] : primitives_) out.push_back(name);
  return out;
}

const Registry& builtin_registry() {
  static const Registry registry(builtin_primitives());
  return registry;
}

Tensor evaluate_primitive(const Primitive& p, std::span<const Tensor> inputs, const Attributes& attrs) {
  require_arity(p, inputs.size());
  std::vector<Shape> shapes;
  for (const Tensor& t : inputs) shapes.push_back(t.shape());
  const Shape out_shape = p.shape_rule(shapes, attrs);
  Tensor out = p.eval(inputs, attrs);
  if (out.shape() != out_shape) throw ShapeError(p.name + " produced shape " + out.shape().to_string());
  if (!out.all_finite()) throw NumericError(p.name + " produced a non-finite value");
  return out;
}

WirtingerPair wirtinger_by_definition(const Primitive& p, std::span<const Tensor> inputs, std::size_t index,
                                      const Attributes& attrs, double h) {
  if (!(h > 0.0)) throw ConfigError("finite-difference step must be positive");
  require_arity(p, inputs.size());
  if (index >= inputs.size()) throw ShapeError("input index out of range");

  const Tensor& x0 = inputs[index];
  const Shape out_shape = evaluate_primitive(p, inputs, attrs).shape();
  const Shape js = jacobian_shape(out_shape, x0.shape());
  ComplexMatrix dz(js.rows(), js.cols());
  ComplexMatrix dzbar(js.rows(), js.cols());

  std::vector<Tensor> probe(inputs.begin(), inputs.end());
  auto eval_shifted = [&](Index k, Complex delta) {
    Tensor::Storage shifted = x0.values();
    shifted.data()[k] += delta;
    probe[index] = Tensor(x0.shape(), std::move(shifted));
    return evaluate_primitive(p, probe, attrs);
  };

  for (Index k = 0; k < x0.size(); ++k) {
    const ComplexVector dx = (eval_shifted(k, h).flat() - eval_shifted(k, -h).flat()) / (2.0 * h);
    const ComplexVector dy = (eval_shifted(k, kI * h).flat() - eval_shifted(k, -kI * h).flat()) / (2.0 * h);
    const ComplexVector col_z = 0.5 * (dx - kI * dy);
    const ComplexVector col_zbar = 0.5 * (dx + kI * dy);
    for (Index r = 0; r < out_shape.size(); ++r) {
      dz(r, k) = col_z(r);
      dzbar(r, k) = col_zbar(r);
    }
  }
  return {Tensor(js, std::move(dz)), Tensor(js, std::move(dzbar))};
}

Complex integer_power(Complex z, int k) {
  const bool invert = k < 0;
  unsigned e = invert ? 0u - static_cast<unsigned>(k) : static_cast<unsigned>(k);
  Complex result{1.0, 0.0};
  Complex base = z;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return invert ? 1.0 / nonzero(result, "negative power of zero") : result;
}

}  // namespace wirtinger
