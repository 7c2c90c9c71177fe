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

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/expr.hpp"
#include "wirtinger/graph.hpp"

namespace wirtinger::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Uniform in the open unit disk.
inline Complex unit_disk(Rng& rng) {
  while (true) {
    const Complex z(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    if (std::abs(z) < 1.0) return z;
  }
}

/// Points in a box clear of 0 and of the negative real axis, where every
/// corpus expression is smooth.
inline Complex safe_point(Rng& rng) { return {uniform(rng, 0.25, 1.25), uniform(rng, -0.9, 0.9)}; }

inline Tensor disk_vector(Rng& rng, Index n) {
  Tensor::FlatVector v(n);
  for (Index k = 0; k < n; ++k) v(k) = unit_disk(rng);
  return Tensor::vector(v);
}

inline Tensor disk_matrix(Rng& rng, Index rows, Index cols) {
  Tensor::Storage a(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) a(r, c) = unit_disk(rng);
  }
  return Tensor::matrix(a);
}

inline Tensor disk_like(Rng& rng, const Shape& shape) {
  Tensor::FlatVector v(shape.size());
  for (Index k = 0; k < v.size(); ++k) v(k) = unit_disk(rng);
  return Tensor::from_flat(shape, v);
}

/// A graph together with a sampler for points where it is smooth.
struct CorpusEntry {
  std::string name;
  Graph graph;
  std::function<Tensor(Rng&)> point;
  bool holomorphic = false;
};

/// Scalar expressions (text) that jointly use every scalar primitive.
inline std::vector<std::string> scalar_corpus() {
  return {
      "z",
      "2*z",
      "0.5*z^2",
      "z^5*conj(z)^4",
      "conj(conj(z))",
      "conj(z)*z",
      "abs2(z)",
      "re(z)+im(z)",
      "re(z)*im(z)-z",
      "exp(z)",
      "log(z)",
      "sin(z)*cos(z)",
      "exp(log(z))",
      "1/z",
      "(z+1)/(conj(z)-2)",
      "z^-3+2i*z",
      "-z^2+3",
      "sin(conj(z))*exp(i*z)",
      "log(z^2+1)-cos(abs2(z))",
      "conj(exp(z))/(abs2(z)+1)",
      "im(z^3)*re(1/z)",
      "(1+2i)*z-z*(3-1i)",
  };
}

/// Holomorphic-only compositions (no conj, re, im, abs2).
inline std::vector<std::string> holomorphic_corpus() {
  return {
      "z", "2*z", "0.5*z^2", "exp(z)", "log(z)", "sin(z)", "cos(z)", "1/z", "z^-3+2i*z", "-z^2+3",
      "exp(log(z))", "sin(z)*cos(z)", "log(z^2+1)", "exp(sin(z))/(z+2)", "(z-1)*(z+1i)",
  };
}

/// Scalar corpus plus vector graphs built on dot, hdot, matvec and sum.
inline std::vector<CorpusEntry> mixed_corpus(Rng& rng) {
  std::vector<CorpusEntry> out;
  for (const std::string& text : scalar_corpus()) {
    out.push_back({text, expr::compile(text), [](Rng& r) { return Tensor(safe_point(r)); }, false});
  }
  auto vec3 = [](Rng& r) { return disk_vector(r, 3); };

  out.push_back({"quadratic form", quadratic_form(disk_matrix(rng, 3, 3)), vec3, false});
  {
    GraphBuilder b;
    Expr z = b.input(Shape::vector(3));
    out.push_back({"dot(z, A z)", b.build(dot(z, matvec(disk_matrix(rng, 3, 3), z))), vec3, true});
  }
  {
    GraphBuilder b;
    Expr z = b.input(Shape::vector(3));
    out.push_back({"sum(exp(z) * conj(z))", b.build(sum(exp(z) * conj(z))), vec3, false});
  }
  {
    GraphBuilder b;
    Expr z = b.input(Shape::vector(3));
    out.push_back({"A z - conj(z z)", b.build(matvec(disk_matrix(rng, 3, 3), z) - conj(z * z)), vec3, false});
  }
  {
    GraphBuilder b;
    Expr a = b.input(Shape::matrix(2, 3));
    Expr v = b.constant(disk_vector(rng, 3));
    out.push_back({"matvec(A, v) in A", b.build(hdot(matvec(a, v), matvec(a, v))),
                   [](Rng& r) { return disk_matrix(r, 2, 3); }, false});
  }
  {
    GraphBuilder b;
    Expr z = b.input(Shape::vector(3));
    out.push_back({"sin(z) / (z + 2) - neg", b.build(-(sin(z) / (z + Complex(2.0, 0.0))) + re(z) * im(z)), vec3,
                   false});
  }
  return out;
}

/// Random expression text over z, depth-limited. Uses every operator and
/// scalar function of the grammar.
class ExpressionGenerator {
 public:
  explicit ExpressionGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string next(int depth = 3) { return node(depth); }

 private:
  std::string leaf() {
    switch (pick(6)) {
      case 0:
      case 1:
      case 2: return "z";
      case 3: return std::to_string(1 + pick(5));
      case 4: return std::to_string(1 + pick(3)) + "." + std::to_string(pick(10)) + "i";
      default: return "i";
    }
  }

  std::string node(int depth) {
    if (depth == 0) return leaf();
    static const char* const functions[] = {"conj", "re", "im", "abs2", "exp", "log", "sin", "cos"};
    switch (pick(9)) {
      case 0: return leaf();
      case 1: return "-" + node(depth - 1);
      case 2: return "(" + node(depth - 1) + ")^" + std::to_string(static_cast<int>(pick(4)));
      case 3: return "z^-" + std::to_string(1 + pick(2));
      case 4: return std::string(functions[pick(8)]) + "(" + node(depth - 1) + ")";
      case 5: return node(depth - 1) + "+" + node(depth - 1);
      case 6: return node(depth - 1) + "-" + "(" + node(depth - 1) + ")";
      case 7: return "(" + node(depth - 1) + ")*" + node(depth - 1);
      default: return "(" + node(depth - 1) + ")/(" + node(depth - 1) + "+3)";
    }
  }

  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }

  Rng rng_;
};

}  // namespace wirtinger::testing
