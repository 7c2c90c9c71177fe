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

#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/graph.hpp"

namespace wirtinger {

struct OptimizerConfig {
  double learning_rate = 0.1;
  /// 0 evaluates the starting point only.
  int max_steps = 1000;
  double grad_tol = 1e-8;
  /// Largest |im f| (and |im| of the real partials, relative to their size)
  /// accepted as real.
  double imag_tol = 1e-9;
  /// Gradient convention used internally. Under minus the step follows
  /// conj(g), so both settings trace the same path.
  Convention convention = Convention::plus;
  /// Step-size halvings tried when a step fails to decrease f.
  int max_halvings = 10;

  /// Throws ConfigError unless every field is in range.
  void validate() const;
};

struct Iterate {
  int step = 0;
  Complex z;
  double value = 0.0;
  double grad_norm = 0.0;
};

enum class StopReason { converged, max_steps, stalled };

std::string_view to_string(StopReason reason);

struct Trajectory {
  std::vector<Iterate> iterates;
  StopReason reason = StopReason::max_steps;

  const Iterate& last() const { return iterates.back(); }
};

/// Minimizes a real-valued f of one complex scalar by stepping against the
/// plus-convention gradient, z <- z - lr * g.
///
/// Throws DomainError when f or its real partial derivatives are not real
/// at an accepted iterate, and ShapeError unless the graph maps scalars to
/// scalars.
Trajectory gradient_descent(const Graph& graph, Complex z0, const OptimizerConfig& cfg = {});

}  // namespace wirtinger
