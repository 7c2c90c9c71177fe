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
#include <optional>
#include <span>
#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/graph.hpp"
#include "wirtinger/primitives.hpp"

namespace wirtinger {

/// Where a tape node argument comes from.
struct Operand {
  enum class Kind { input, constant, node };

  Kind kind = Kind::input;
  std::size_t index = 0;  // tape node id for Kind::node, graph node id otherwise
};

/// One recorded primitive application with the primals needed by its
/// Wirtinger rule.
struct TapeNode {
  std::size_t id = 0;
  const Primitive* primitive = nullptr;
  Attributes attrs;
  std::vector<Operand> parents;
  std::vector<Tensor> primal_inputs;
  Tensor primal_output;
};

/// The primitive applications of one evaluation in execution order. Parents
/// of a node always precede it. Immutable once recorded, so several
/// backward sweeps may share one tape.
class Tape {
 public:
  Tape(Tensor input, std::vector<TapeNode> nodes, Operand output, Tensor output_value)
      : input_(std::move(input)), nodes_(std::move(nodes)), output_(output), value_(std::move(output_value)) {}

  const Tensor& input() const { return input_; }
  const std::vector<TapeNode>& nodes() const { return nodes_; }
  const Operand& output() const { return output_; }
  /// f(z) as recorded.
  const Tensor& value() const { return value_; }

  /// Re-executes every node from the recorded input and constants.
  Tensor replay() const;

 private:
  Tensor input_;
  std::vector<TapeNode> nodes_;
  Operand output_;
  Tensor value_;
};

struct Recording {
  Tensor value;
  Tape tape;
};

/// Forward pass: evaluates f(z) and records the tape.
Recording record(const Graph& graph, const Tensor& z);

/// Per-node cotangent accumulators (xi). Contributions from several
/// consumers of one value are summed.
class CotangentStore {
 public:
  explicit CotangentStore(const Tape& tape);

  void accumulate(const Operand& target, const Tensor& xi);
  const std::optional<Tensor>& at_node(std::size_t id) const { return nodes_.at(id); }
  /// Accumulated input cotangent, zero if nothing reached the input.
  Tensor input() const;

 private:
  Shape input_shape_;
  std::optional<Tensor> input_;
  std::vector<std::optional<Tensor>> nodes_;
};

/// xi_k = conj(dz_k)^T fbar + (dzbar_k)^T conj(fbar) for input slot k, with
/// plain (non-conjugating) transposes, under the plus convention.
Tensor pull_slot(const Primitive& p, std::span<const Tensor> primal_inputs, std::size_t slot,
                 const Tensor& out_cotangent, const Attributes& attrs = {});

/// pull_slot for every input slot.
std::vector<Tensor> pull_node(const Primitive& p, std::span<const Tensor> primal_inputs,
                              const Tensor& out_cotangent, const Attributes& attrs = {});

/// Latent VJP against fbar. The backward sweep runs in the plus convention;
/// minus is conj(vjp_plus(conj(fbar))).
Tensor vjp(const Tape& tape, const Tensor& fbar, Convention conv = Convention::plus);
Tensor vjp(const Graph& graph, const Tensor& z, const Tensor& fbar, Convention conv = Convention::plus);

/// Latent gradient: the VJP of a scalar-valued graph against fbar = 1.
Tensor grad(const Graph& graph, const Tensor& z, Convention conv = Convention::plus);

}  // namespace wirtinger
