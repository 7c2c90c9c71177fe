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

#include "wirtinger/reverse.hpp"

namespace wirtinger {

Tensor Tape::replay() const {
  std::vector<Tensor> outputs;
  outputs.reserve(nodes_.size());
  std::vector<Tensor> args;
  for (const TapeNode& n : nodes_) {
    args.clear();
    for (std::size_t k = 0; k < n.parents.size(); ++k) {
      const Operand& p = n.parents[k];
      switch (p.kind) {
        case Operand::Kind::input: args.push_back(input_); break;
        case Operand::Kind::constant: args.push_back(n.primal_inputs[k]); break;
        case Operand::Kind::node: args.push_back(outputs[p.index]); break;
      }
    }
    outputs.push_back(evaluate_primitive(*n.primitive, args, n.attrs));
  }
  switch (output_.kind) {
    case Operand::Kind::node: return outputs[output_.index];
    case Operand::Kind::input: return input_;
    case Operand::Kind::constant: break;
  }
  return value_;
}

Recording record(const Graph& graph, const Tensor& z) {
  std::vector<Tensor> values = evaluate_nodes(graph, z);

  const auto& gnodes = graph.nodes();
  std::vector<Operand> operand_of(gnodes.size());
  std::vector<TapeNode> tape_nodes;
  for (NodeId id = 0; id < gnodes.size(); ++id) {
    const GraphNode& g = gnodes[id];
    switch (g.kind) {
      case GraphNode::Kind::input: operand_of[id] = {Operand::Kind::input, id}; break;
      case GraphNode::Kind::constant: operand_of[id] = {Operand::Kind::constant, id}; break;
      case GraphNode::Kind::apply: {
        TapeNode t;
        t.id = tape_nodes.size();
        t.primitive = g.primitive;
        t.attrs = g.attrs;
        for (NodeId a : g.args) {
          t.parents.push_back(operand_of[a]);
          t.primal_inputs.push_back(values[a]);
        }
        t.primal_output = values[id];
        operand_of[id] = {Operand::Kind::node, t.id};
        tape_nodes.push_back(std::move(t));
        break;
      }
    }
  }
  Tensor value = values[graph.output_id()];
  return {value, Tape(z, std::move(tape_nodes), operand_of[graph.output_id()], value)};
}

CotangentStore::CotangentStore(const Tape& tape)
    : input_shape_(tape.input().shape()), nodes_(tape.nodes().size()) {}

void CotangentStore::accumulate(const Operand& target, const Tensor& xi) {
  std::optional<Tensor>* slot = nullptr;
  switch (target.kind) {
    case Operand::Kind::constant: return;
    case Operand::Kind::input: slot = &input_; break;
    case Operand::Kind::node: slot = &nodes_.at(target.index); break;
  }
  if (*slot) {
    **slot = **slot + xi;
  } else {
    *slot = xi;
  }
}

Tensor CotangentStore::input() const { return input_ ? *input_ : Tensor::zeros(input_shape_); }

Tensor pull_slot(const Primitive& p, std::span<const Tensor> primal_inputs, std::size_t slot,
                 const Tensor& out_cotangent, const Attributes& attrs) {
  const WirtingerPair pair = p.wirtinger_rule(primal_inputs, slot, attrs);
  const Shape& in_shape = primal_inputs[slot].shape();
  if (pair.dz.rank() == 0) {
    const Complex fbar = out_cotangent.item();
    return Tensor(std::conj(pair.dz.item()) * fbar + pair.dzbar.item() * std::conj(fbar));
  }
  if (pair.dz.shape() != jacobian_shape(out_cotangent.shape(), in_shape)) {
    throw ShapeError(p.name + ": cotangent shape " + out_cotangent.shape().to_string() +
                     " does not match Jacobian block " + pair.dz.shape().to_string());
  }
  const Tensor::FlatVector xi = pair.dz.values().adjoint() * out_cotangent.flat() +
                                pair.dzbar.values().transpose() * out_cotangent.flat().conjugate();
  return Tensor::from_flat(in_shape, xi);
}

std::vector<Tensor> pull_node(const Primitive& p, std::span<const Tensor> primal_inputs,
                              const Tensor& out_cotangent, const Attributes& attrs) {
  std::vector<Tensor> out;
  for (std::size_t k = 0; k < primal_inputs.size(); ++k) {
    out.push_back(pull_slot(p, primal_inputs, k, out_cotangent, attrs));
  }
  return out;
}

namespace {

Tensor vjp_plus(const Tape& tape, const Tensor& fbar) {
  CotangentStore store(tape);
  if (max_abs(fbar) == 0.0) return store.input();

  store.accumulate(tape.output(), fbar);
  const auto& nodes = tape.nodes();
  for (std::size_t id = nodes.size(); id-- > 0;) {
    const std::optional<Tensor>& xi = store.at_node(id);
    if (!xi) continue;
    const TapeNode& n = nodes[id];
    for (std::size_t k = 0; k < n.parents.size(); ++k) {
      if (n.parents[k].kind == Operand::Kind::constant) continue;
      try {
        store.accumulate(n.parents[k], pull_slot(*n.primitive, n.primal_inputs, k, *xi, n.attrs));
      } catch (const DomainError& e) {
        if (e.node()) throw;
        throw DomainError(e.what(), id, n.primitive->name);
      }
    }
  }
  Tensor result = store.input();
  if (!result.all_finite()) throw NumericError("backward sweep produced a non-finite cotangent");
  return result;
}

}  // namespace

Tensor vjp(const Tape& tape, const Tensor& fbar, Convention conv) {
  if (fbar.shape() != tape.value().shape()) {
    throw ShapeError("cotangent shape " + fbar.shape().to_string() + " differs from output shape " +
                     tape.value().shape().to_string());
  }
  if (conv == Convention::plus) return vjp_plus(tape, fbar);
  return conjugate(vjp_plus(tape, conjugate(fbar)));
}

Tensor vjp(const Graph& graph, const Tensor& z, const Tensor& fbar, Convention conv) {
  if (fbar.shape() != graph.output_shape()) {
    throw ShapeError("cotangent shape " + fbar.shape().to_string() + " differs from output shape " +
                     graph.output_shape().to_string());
  }
  return vjp(record(graph, z).tape, fbar, conv);
}

Tensor grad(const Graph& graph, const Tensor& z, Convention conv) {
  if (graph.output_shape().rank() != 0) {
    throw ShapeError("grad needs a scalar-valued graph, output shape is " + graph.output_shape().to_string());
  }
  return vjp(graph, z, Tensor(Complex(1.0, 0.0)), conv);
}

}  // namespace wirtinger
