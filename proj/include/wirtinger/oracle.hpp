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

#include <Eigen/Core>

#include "wirtinger/core.hpp"
#include "wirtinger/graph.hpp"

namespace wirtinger {

/// Real Jacobian of (x, y) -> (u, v) for f(x + iy) = u + iv, as four blocks
/// of shape (output size) x (input size) over flattened tensors.
struct LatentJacobian {
  Shape input_shape;
  Shape output_shape;
  Eigen::MatrixXd dxu;
  Eigen::MatrixXd dyu;
  Eigen::MatrixXd dxv;
  Eigen::MatrixXd dyv;

  /// [[dxu, dyu], [dxv, dyv]].
  Eigen::MatrixXd stacked() const;
};

/// Central differences with absolute step h in every real and imaginary
/// input coordinate. Throws NumericError if the stencil leaves the domain
/// or produces non-finite values.
LatentJacobian latent_jacobian_fd(const Graph& graph, const Tensor& z, double h = 1e-5);

/// (1, i) J (x', y'): the latent JVP by its real-coordinate definition.
Tensor latent_jvp_oracle(const LatentJacobian& jac, const Tensor& z_tangent);

/// Solves <(ubar, vbar), J (x', y')> = <(xbar, ybar), (x', y')> by the real
/// transpose. plus: fbar = ubar + i vbar, zbar = xbar + i ybar. minus:
/// fbar = ubar - i vbar, zbar = xbar - i ybar.
Tensor latent_vjp_oracle(const LatentJacobian& jac, const Tensor& fbar, Convention conv = Convention::plus);

/// Wirtinger blocks 1/2 (Dx -+ i Dy) assembled from a latent Jacobian.
WirtingerPair wirtinger_from_latent(const LatentJacobian& jac);

struct HolomorphicityReport {
  bool is_holomorphic = false;
  /// Largest entry modulus of the estimated d/dzbar f at the probed point.
  double dzbar_norm = 0.0;
};

/// Pointwise test of d/dzbar f = 0 by finite differences. Says nothing about
/// other points.
HolomorphicityReport holomorphicity_check(const Graph& graph, const Tensor& z, double tol = 1e-6,
                                          double h = 1e-5);

}  // namespace wirtinger
