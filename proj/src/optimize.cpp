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

#include "wirtinger/optimize.hpp"

#include <cmath>
#include <optional>

#include "wirtinger/forward.hpp"
#include "wirtinger/reverse.hpp"

namespace wirtinger {
namespace {

struct Probe {
  double value;
  Complex step_direction;
};

void require_real(Complex z, const JvpResult& along_x, const JvpResult& along_y,
                  double tol, int step) {
  const Complex f = along_x.value.item();
  const Complex dx = along_x.tangent.item();
  const Complex dy = along_y.tangent.item();
  const auto too_complex = [tol](Complex v) { return std::abs(v.imag()) > tol * std::max(1.0, std::abs(v)); };
  if (std::abs(f.imag()) > tol || too_complex(dx) || too_complex(dy)) {
    throw DomainError("objective must be real-valued near z = " + format_complex(z) + " (step " +
                      std::to_string(step) + ": f = " + format_complex(f) + ", df/dx = " + format_complex(dx) +
                      ", df/dy = " + format_complex(dy) + ")");
  }
}

Probe probe(const Graph& graph, Complex z, const OptimizerConfig& cfg, int step) {
  const Tensor point(z);
  const JvpResult along_x = jvp(graph, point, Tensor(Complex(1.0, 0.0)));
  const JvpResult along_y = jvp(graph, point, Tensor(Complex(0.0, 1.0)));
  require_real(z, along_x, along_y, cfg.imag_tol, step);
  const Complex g = grad(graph, point, cfg.convention).item();
  return {along_x.value.item().real(), cfg.convention == Convention::plus ? g : std::conj(g)};
}

std::optional<double> try_value(const Graph& graph, Complex z) {
  try {
    return evaluate(graph, Tensor(z)).item().real();
  } catch (const DomainError&) {
    return std::nullopt;
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw ConfigError("learning rate must be positive");
  if (max_steps < 0) throw ConfigError("step count must be non-negative");
  if (!(grad_tol > 0.0)) throw ConfigError("gradient tolerance must be positive");
  if (!(imag_tol > 0.0)) throw ConfigError("imaginary-part tolerance must be positive");
  if (max_halvings < 0) throw ConfigError("halving count must be non-negative");
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::converged: return "converged";
    case StopReason::max_steps: return "max_steps";
    case StopReason::stalled: return "stalled";
  }
  return "unknown";
}

Trajectory gradient_descent(const Graph& graph, Complex z0, const OptimizerConfig& cfg) {
  cfg.validate();
  if (graph.input_shape().rank() != 0 || graph.output_shape().rank() != 0) {
    throw ShapeError("optimizer needs a scalar-to-scalar objective, got " + graph.input_shape().to_string() +
                     " -> " + graph.output_shape().to_string());
  }

  Trajectory out;
  Complex z = z0;
  Probe current = probe(graph, z, cfg, 0);
  for (int step = 0;; ++step) {
    const double norm = std::abs(current.step_direction);
    out.iterates.push_back({step, z, current.value, norm});
    if (norm <= cfg.grad_tol) {
      out.reason = StopReason::converged;
      return out;
    }
    if (step == cfg.max_steps) {
      out.reason = StopReason::max_steps;
      return out;
    }

    double lr = cfg.learning_rate;
    std::optional<Complex> accepted;
    for (int halving = 0; halving <= cfg.max_halvings; ++halving, lr *= 0.5) {
      const Complex candidate = z - lr * current.step_direction;
      const std::optional<double> value = try_value(graph, candidate);
      if (value && *value <= current.value) {
        accepted = candidate;
        break;
      }
    }
    if (!accepted) {
      out.reason = StopReason::stalled;
      return out;
    }
    z = *accepted;
    current = probe(graph, z, cfg, step + 1);
  }
}

}  // namespace wirtinger
