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

#include "wirtinger/graph.hpp"

#include <algorithm>

namespace wirtinger {

bool Graph::holomorphic_primitives_only() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const GraphNode& n) {
    return n.kind != GraphNode::Kind::apply || n.primitive->holomorphic;
  });
}

const Shape& Expr::shape() const { return builder_->node(id_).shape; }

Expr GraphBuilder::input(Shape shape, std::string name) {
  if (input_) throw ConfigError("graph input declared twice");
  GraphNode n;
  n.kind = GraphNode::Kind::input;
  n.shape = shape;
  nodes_.push_back(std::move(n));
  input_ = nodes_.size() - 1;
  input_name_ = std::move(name);
  return {*this, *input_};
}

Expr GraphBuilder::constant(Tensor value) {
  if (!value.all_finite()) throw NumericError("graph constant is not finite");
  GraphNode n;
  n.kind = GraphNode::Kind::constant;
  n.shape = value.shape();
  n.value = std::move(value);
  nodes_.push_back(std::move(n));
  return {*this, nodes_.size() - 1};
}

Expr GraphBuilder::apply(std::string_view primitive, std::span<const Expr> args, const Attributes& attrs) {
  const Primitive& p = registry_->at(primitive);
  if (args.size() != p.arity) {
    throw ShapeError(p.name + " expects " + std::to_string(p.arity) + " argument(s), got " +
                     std::to_string(args.size()));
  }
  GraphNode n;
  n.kind = GraphNode::Kind::apply;
  n.primitive = &p;
  n.attrs = attrs;
  std::vector<Shape> shapes;
  for (const Expr& a : args) {
    if (&a.builder() != this) throw ConfigError("operands belong to different graph builders");
    n.args.push_back(a.id());
    shapes.push_back(a.shape());
  }
  n.shape = p.shape_rule(shapes, attrs);
  nodes_.push_back(std::move(n));
  return {*this, nodes_.size() - 1};
}

Graph GraphBuilder::build(Expr output) const {
  if (!input_) throw ConfigError("graph has no input");
  if (&output.builder() != this) throw ConfigError("output belongs to a different graph builder");

  std::vector<bool> live(nodes_.size(), false);
  live[output.id()] = true;
  live[*input_] = true;
  for (NodeId id = output.id() + 1; id-- > 0;) {
    if (!live[id]) continue;
    for (NodeId a : nodes_[id].args) live[a] = true;
  }

  Graph g;
  std::vector<NodeId> remap(nodes_.size(), 0);
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (!live[id]) continue;
    remap[id] = g.nodes_.size();
    GraphNode n = nodes_[id];
    for (NodeId& a : n.args) a = remap[a];
    g.nodes_.push_back(std::move(n));
  }
  g.input_ = remap[*input_];
  g.output_ = remap[output.id()];
  g.input_name_ = input_name_;
  return g;
}

Expr operator+(Expr a, Expr b) { return a.builder().apply("add", {a, b}); }
Expr operator-(Expr a, Expr b) { return a.builder().apply("sub", {a, b}); }
Expr operator*(Expr a, Expr b) { return a.builder().apply("mul", {a, b}); }
Expr operator/(Expr a, Expr b) { return a.builder().apply("div", {a, b}); }
Expr operator-(Expr a) { return a.builder().apply("neg", {a}); }
Expr operator*(Complex c, Expr a) { return scale(c, a); }
Expr operator*(Expr a, Complex c) { return scale(c, a); }
Expr operator+(Expr a, Complex c) {
  const Shape& s = a.shape();
  return a + a.builder().constant(Tensor(s, Tensor::Storage::Constant(s.rows(), s.cols(), c)));
}
Expr operator-(Expr a, Complex c) { return a + (-c); }

Expr scale(Complex c, Expr a) {
  Attributes attrs;
  attrs.constant = c;
  return a.builder().apply("scale", {a}, attrs);
}

Expr powi(Expr a, int exponent) {
  Attributes attrs;
  attrs.exponent = exponent;
  return a.builder().apply("powi", {a}, attrs);
}

Expr conj(Expr a) { return a.builder().apply("conj", {a}); }
Expr re(Expr a) { return a.builder().apply("re", {a}); }
Expr im(Expr a) { return a.builder().apply("im", {a}); }
Expr abs2(Expr a) { return a.builder().apply("abs2", {a}); }
Expr exp(Expr a) { return a.builder().apply("exp", {a}); }
Expr log(Expr a) { return a.builder().apply("log", {a}); }
Expr sin(Expr a) { return a.builder().apply("sin", {a}); }
Expr cos(Expr a) { return a.builder().apply("cos", {a}); }
Expr dot(Expr a, Expr b) { return a.builder().apply("dot", {a, b}); }
Expr hdot(Expr a, Expr b) { return a.builder().apply("hdot", {a, b}); }
Expr matvec(Expr a, Expr z) { return a.builder().apply("matvec", {a, z}); }
Expr matvec(const Tensor& a, Expr z) { return matvec(z.builder().constant(a), z); }
Expr sum(Expr a) { return a.builder().apply("sum", {a}); }

std::vector<Tensor> evaluate_nodes(const Graph& graph, const Tensor& z) {
  if (z.shape() != graph.input_shape()) {
    throw ShapeError("graph input expects shape " + graph.input_shape().to_string() + ", got " +
                     z.shape().to_string());
  }
  if (!z.all_finite()) throw NumericError("graph input is not finite");

  const auto& nodes = graph.nodes();
  std::vector<Tensor> values(nodes.size());
  std::vector<Tensor> args;
  for (NodeId id = 0; id < nodes.size(); ++id) {
    const GraphNode& n = nodes[id];
    switch (n.kind) {
      case GraphNode::Kind::input: values[id] = z; break;
      case GraphNode::Kind::constant: values[id] = n.value; break;
      case GraphNode::Kind::apply: {
        args.clear();
        for (NodeId a : n.args) args.push_back(values[a]);
        try {
          values[id] = evaluate_primitive(*n.primitive, args, n.attrs);
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
  return values;
}

Tensor evaluate(const Graph& graph, const Tensor& z) { return evaluate_nodes(graph, z)[graph.output_id()]; }

Graph quadratic_form(const Tensor& a) {
  if (a.rank() != 2 || a.shape().rows() != a.shape().cols()) {
    throw ShapeError("quadratic form needs a square matrix, got " + a.shape().to_string());
  }
  GraphBuilder b;
  Expr z = b.input(Shape::vector(a.shape().rows()));
  return b.build(hdot(z, matvec(a, z)));
}

}  // namespace wirtinger
