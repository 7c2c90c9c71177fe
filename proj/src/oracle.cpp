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

#include "wirtinger/oracle.hpp"

namespace wirtinger {
namespace {

constexpr Complex kI{0.0, 1.0};

Tensor evaluate_shifted(const Graph& graph, const Tensor& z, Index k, Complex delta) {
  Tensor::Storage shifted = z.values();
  shifted.data()[k] += delta;
  try {
    return evaluate(graph, Tensor(z.shape(), std::move(shifted)));
  } catch (const DomainError& e) {
    throw NumericError(std::string("finite-difference stencil left the domain: ") + e.what());
  }
}

Tensor join_flat(const Shape& shape, const Eigen::VectorXd& re, const Eigen::VectorXd& im) {
  Tensor::FlatVector flat(re.size());
  flat.real() = re;
  flat.imag() = im;
  return Tensor::from_flat(shape, flat);
}

}  // namespace

Eigen::MatrixXd LatentJacobian::stacked() const {
  Eigen::MatrixXd j(2 * dxu.rows(), 2 * dxu.cols());
  j << dxu, dyu, dxv, dyv;
  return j;
}

LatentJacobian latent_jacobian_fd(const Graph& graph, const Tensor& z, double h) {
  if (!(h > 0.0)) throw ConfigError("finite-difference step must be positive");
  const Shape out_shape = evaluate(graph, z).shape();
  const Index m = out_shape.size();
  const Index n = z.size();

  LatentJacobian jac{z.shape(), out_shape, Eigen::MatrixXd(m, n), Eigen::MatrixXd(m, n),
                     Eigen::MatrixXd(m, n), Eigen::MatrixXd(m, n)};
  for (Index k = 0; k < n; ++k) {
    const Tensor::FlatVector dx =
        (evaluate_shifted(graph, z, k, h).flat() - evaluate_shifted(graph, z, k, -h).flat()) / (2.0 * h);
    const Tensor::FlatVector dy =
        (evaluate_shifted(graph, z, k, kI * h).flat() - evaluate_shifted(graph, z, k, -kI * h).flat()) / (2.0 * h);
    jac.dxu.col(k) = dx.real();
    jac.dxv.col(k) = dx.imag();
    jac.dyu.col(k) = dy.real();
    jac.dyv.col(k) = dy.imag();
  }
  if (!jac.stacked().allFinite()) throw NumericError("finite-difference Jacobian is not finite");
  return jac;
}

Tensor latent_jvp_oracle(const LatentJacobian& jac, const Tensor& z_tangent) {
  if (z_tangent.shape() != jac.input_shape) {
    throw ShapeError("tangent shape " + z_tangent.shape().to_string() + " differs from input shape " +
                     jac.input_shape.to_string());
  }
  const Eigen::VectorXd x = z_tangent.flat().real();
  const Eigen::VectorXd y = z_tangent.flat().imag();
  return join_flat(jac.output_shape, jac.dxu * x + jac.dyu * y, jac.dxv * x + jac.dyv * y);
}

Tensor latent_vjp_oracle(const LatentJacobian& jac, const Tensor& fbar, Convention conv) {
  if (fbar.shape() != jac.output_shape) {
    throw ShapeError("cotangent shape " + fbar.shape().to_string() + " differs from output shape " +
                     jac.output_shape.to_string());
  }
  const double c = conv == Convention::plus ? 1.0 : -1.0;
  const Eigen::VectorXd ubar = fbar.flat().real();
  const Eigen::VectorXd vbar = c * fbar.flat().imag();
  const Eigen::VectorXd xbar = jac.dxu.transpose() * ubar + jac.dxv.transpose() * vbar;
  const Eigen::VectorXd ybar = jac.dyu.transpose() * ubar + jac.dyv.transpose() * vbar;
  return join_flat(jac.input_shape, xbar, c * ybar);
}

WirtingerPair wirtinger_from_latent(const LatentJacobian& jac) {
  Tensor::Storage dx(jac.dxu.rows(), jac.dxu.cols());
  dx.real() = jac.dxu;
  dx.imag() = jac.dxv;
  Tensor::Storage dy(jac.dyu.rows(), jac.dyu.cols());
  dy.real() = jac.dyu;
  dy.imag() = jac.dyv;
  const Shape js = jacobian_shape(jac.output_shape, jac.input_shape);
  return {Tensor(js, 0.5 * (dx - kI * dy)), Tensor(js, 0.5 * (dx + kI * dy))};
}

HolomorphicityReport holomorphicity_check(const Graph& graph, const Tensor& z, double tol, double h) {
  if (!(tol > 0.0)) throw ConfigError("holomorphicity tolerance must be positive");
  const double norm = max_abs(wirtinger_from_latent(latent_jacobian_fd(graph, z, h)).dzbar);
  return {norm <= tol, norm};
}

}  // namespace wirtinger
