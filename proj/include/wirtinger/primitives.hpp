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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wirtinger/core.hpp"

namespace wirtinger {

/// Static parameters of a primitive application: the factor of `scale` and
/// the exponent of `powi`. Unused fields are ignored.
struct Attributes {
  Complex constant{1.0, 0.0};
  int exponent = 1;

  friend bool operator==(const Attributes&, const Attributes&) = default;
};

/// A differentiable primitive: evaluation plus, for each input slot, the
/// analytic Wirtinger derivatives at a primal point.
///
/// `wirtinger_rule(inputs, k, attrs)` returns blocks of shape
/// jacobian_shape(output, inputs[k]) so that
///   out_tangent = dz * tangent_k + dzbar * conj(tangent_k)
/// on flattened tensors. Rules may assume `shape_rule` accepted the inputs.
struct Primitive {
  using ShapeRule = std::function<Shape(std::span<const Shape>, const Attributes&)>;
  using Eval = std::function<Tensor(std::span<const Tensor>, const Attributes&)>;
  using Rule = std::function<WirtingerPair(std::span<const Tensor>, std::size_t, const Attributes&)>;

  std::string name;
  std::size_t arity = 1;
  /// dzbar vanishes identically for every input slot.
  bool holomorphic = false;
  /// Unary elementwise primitive callable by name from the expression language.
  bool scalar_function = false;
  ShapeRule shape_rule;
  Eval eval;
  Rule wirtinger_rule;
};

/// Immutable name -> primitive map.
class Registry {
 public:
  explicit Registry(std::vector<Primitive> primitives);

  const Primitive& at(std::string_view name) const;
  const Primitive* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  std::vector<std::string> names() const;

 private:
  std::map<std::string, Primitive, std::less<>> primitives_;
};

/// add, sub, neg, mul, div, scale, powi, conj, re, im, abs2, exp, log, sin,
/// cos (elementwise); dot, hdot, matvec, sum (contractions).
///
/// The returned registry lives for the whole program.
const Registry& builtin_registry();

/// Validates arity and shapes, evaluates, and rejects non-finite output.
Tensor evaluate_primitive(const Primitive& p, std::span<const Tensor> inputs, const Attributes& attrs = {});

/// Wirtinger pair by central differences of step h in the real and
/// imaginary coordinate of every entry of input `index`:
/// (1/2 (Dx - i Dy), 1/2 (Dx + i Dy)).
WirtingerPair wirtinger_by_definition(const Primitive& p, std::span<const Tensor> inputs,
                                      std::size_t index, const Attributes& attrs = {},
                                      double h = 1e-5);

/// z^k by repeated squaring; k < 0 inverts and raises DomainError at 0.
Complex integer_power(Complex z, int k);

}  // namespace wirtinger
