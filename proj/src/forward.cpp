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

#include "wirtinger/forward.hpp"

#include <vector>

namespace wirtinger {
namespace {

bool is_zero(const Tensor& t) { return max_abs(t) == 0.0; }

}  // namespace

Dual::Dual(Tensor primal_, Tensor tangent_) : primal(std::move(primal_)), tangent(std::move(tangent_)) {
  if (primal.shape() != tangent.shape()) {
    throw ShapeError("tangent shape " + tangent.shape().to_string() + " differs from primal shape " +
                     primal.shape().to_string());
  }
}

Tensor apply_wirtinger(const WirtingerPair& pair, const Tensor& tangent, const Shape& out) {
  if (pair.dz.rank() == 0) {
    return Tensor(pair.dz.item() * tangent.item() + pair.dzbar.item() * std::conj(tangent.item()));
  }
  if (pair.dz.shape() != jacobian_shape(out, tangent.shape())) {
    throw ShapeError("Jacobian block " + pair.dz.shape().to_string() + " does not map " +
                     tangent.shape().to_string() + " to " + out.to_string());
  }
  const Tensor::FlatVector flat =
      pair.dz.values() * tangent.flat() + pair.dzbar.values() * tangent.flat().conjugate();
  return Tensor::from_flat(out, flat);
}

Dual push_primitive(const Primitive& p, std::span<const Dual> inputs, const Attributes& attrs) {
  std::vector<Tensor> primals;
  for (const Dual& d : inputs) primals.push_back(d.primal);
  Tensor value = evaluate_primitive(p, primals, attrs);

  Tensor tangent = Tensor::zeros(value.shape());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (is_zero(inputs[k].tangent)) continue;
    const WirtingerPair pair = p.wirtinger_rule(primals, k, attrs);
    tangent = tangent + apply_wirtinger(pair, inputs[k].tangent, value.shape());
  }
  if (!tangent.all_finite()) throw NumericError(p.name + " produced a non-finite tangent");
  return {std::move(value), std::move(tangent)};
}

JvpResult jvp(const Graph& graph, const Tensor& z, const Tensor& z_tangent) {
  if (z_tangent.shape() != graph.input_shape()) {
    throw ShapeError("tangent shape " + z_tangent.shape().to_string() + " differs from input shape " +
                     graph.input_shape().to_string());
  }
  if (z.shape() != graph.input_shape()) {
    throw ShapeError("graph input expects shape " + graph.input_shape().to_string() + ", got " +
                     z.shape().to_string());
  }

  const auto& nodes = graph.nodes();
  std::vector<Dual> duals;
  duals.reserve(nodes.size());
  std::vector<Dual> args;
  for (NodeId id = 0; id < nodes.size(); ++id) {
    const GraphNode& n = nodes[id];
    switch (n.kind) {
      case GraphNode::Kind::input: duals.emplace_back(z, z_tangent); break;
      case GraphNode::Kind::constant: duals.emplace_back(n.value, Tensor::zeros(n.shape)); break;
      case GraphNode::Kind::apply: {
        args.clear();
        for (NodeId a : n.args) args.push_back(duals[a]);
        try {
          duals.push_back(push_primitive(*n.primitive, args, n.attrs));
        } catch (const DomainError& e) {
          if (e.node()) throw;
          throw DomainError(e.what(), id, n.primitive->name);
        } catch (const NumericError& e) {
          throw NumericError(std::string(e.what()) + " (at node #" + std::to_string(id) + ")");
        }
        break;
      }
    }
  }
  const Dual& out = duals[graph.output_id()];
  return {out.primal, out.tangent};
}

WirtingerPair wirtinger_of(const Graph& graph, Complex z) {
  if (graph.input_shape().rank() != 0 || graph.output_shape().rank() != 0) {
    throw ShapeError("wirtinger_of needs a scalar-to-scalar graph");
  }
  constexpr Complex i{0.0, 1.0};
  const Complex along_real = jvp(graph, Tensor(z), Tensor(Complex(1.0, 0.0))).tangent.item();
  const Complex along_imag = jvp(graph, Tensor(z), Tensor(i)).tangent.item();
  return {Tensor(0.5 * (along_real - i * along_imag)), Tensor(0.5 * (along_real + i * along_imag))};
}

}  // namespace wirtinger
