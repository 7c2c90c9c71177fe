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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/primitives.hpp"

namespace wirtinger {

using NodeId = std::size_t;

struct GraphNode {
  enum class Kind { input, constant, apply };

  Kind kind = Kind::constant;
  Shape shape;
  const Primitive* primitive = nullptr;  // apply nodes only
  Attributes attrs;
  std::vector<NodeId> args;
  Tensor value;  // constant nodes only
};

/// An immutable computation over registry primitives with one input and one
/// output. Nodes are stored in topological order: every argument id is
/// smaller than the id of the node using it.
///
/// Nodes reference primitives by pointer; the registry must outlive the
/// graph.
class Graph {
 public:
  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const GraphNode& node(NodeId id) const { return nodes_.at(id); }

  NodeId input_id() const { return input_; }
  NodeId output_id() const { return output_; }
  const Shape& input_shape() const { return nodes_[input_].shape; }
  const Shape& output_shape() const { return nodes_[output_].shape; }
  const std::string& input_name() const { return input_name_; }

  /// True when every apply node uses a holomorphic primitive.
  bool holomorphic_primitives_only() const;

 private:
  friend class GraphBuilder;

  std::vector<GraphNode> nodes_;
  NodeId input_ = 0;
  NodeId output_ = 0;
  std::string input_name_;
};

class GraphBuilder;

/// Handle to a node under construction. Cheap to copy; only valid while its
/// builder is alive.
class Expr {
 public:
  Expr(GraphBuilder& builder, NodeId id) : builder_(&builder), id_(id) {}

  GraphBuilder& builder() const { return *builder_; }
  NodeId id() const { return id_; }
  const Shape& shape() const;

 private:
  GraphBuilder* builder_;
  NodeId id_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(const Registry& registry = builtin_registry()) : registry_(&registry) {}

  /// Declares the graph input. Must be called exactly once.
  Expr input(Shape shape, std::string name = "z");
  Expr constant(Tensor value);
  Expr apply(std::string_view primitive, std::span<const Expr> args, const Attributes& attrs = {});
  Expr apply(std::string_view primitive, std::initializer_list<Expr> args, const Attributes& attrs = {}) {
    return apply(primitive, std::span<const Expr>(args.begin(), args.size()), attrs);
  }

  const GraphNode& node(NodeId id) const { return nodes_.at(id); }
  const Registry& registry() const { return *registry_; }

  /// Freezes the nodes reachable from `output` (plus the input) into a graph.
  Graph build(Expr output) const;

 private:
  const Registry* registry_;
  std::vector<GraphNode> nodes_;
  std::optional<NodeId> input_;
  std::string input_name_;
};

// Expression-style construction. Binary operators require both operands to
// come from the same builder.

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr operator*(Complex c, Expr a);
Expr operator*(Expr a, Complex c);
Expr operator+(Expr a, Complex c);
Expr operator-(Expr a, Complex c);

Expr scale(Complex c, Expr a);
Expr powi(Expr a, int exponent);
Expr conj(Expr a);
Expr re(Expr a);
Expr im(Expr a);
Expr abs2(Expr a);
Expr exp(Expr a);
Expr log(Expr a);
Expr sin(Expr a);
Expr cos(Expr a);
Expr dot(Expr a, Expr b);
Expr hdot(Expr a, Expr b);
Expr matvec(Expr a, Expr z);
Expr matvec(const Tensor& a, Expr z);
Expr sum(Expr a);

/// Values of every node at input z, indexed by node id.
std::vector<Tensor> evaluate_nodes(const Graph& graph, const Tensor& z);

/// f(z).
Tensor evaluate(const Graph& graph, const Tensor& z);

/// conj(z)^T A z for a constant square matrix A and a vector input of
/// matching length.
Graph quadratic_form(const Tensor& a);

}  // namespace wirtinger
