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

#include <gtest/gtest.h>

#include "support.hpp"
#include "wirtinger/expr.hpp"
#include "wirtinger/oracle.hpp"

namespace wirtinger {
namespace {

using testing::Rng;

TEST(LatentJacobianFd, DoublingMap) {
  Rng rng(51);
  GraphBuilder b;
  Expr z = b.input(Shape::vector(3));
  const Graph g = b.build(Complex(2, 0) * z);
  const LatentJacobian j = latent_jacobian_fd(g, testing::disk_vector(rng, 3));
  const Eigen::MatrixXd two = 2.0 * Eigen::MatrixXd::Identity(3, 3);
  EXPECT_LE((j.dxu - two).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LE(j.dyu.cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LE(j.dxv.cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LE((j.dyv - two).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(LatentJacobianFd, Conjugation) {
  const LatentJacobian j = latent_jacobian_fd(expr::compile("conj(z)"), Tensor(Complex(0.4, -2)));
  EXPECT_NEAR(j.dxu(0, 0), 1.0, 1e-8);
  EXPECT_NEAR(j.dyu(0, 0), 0.0, 1e-8);
  EXPECT_NEAR(j.dxv(0, 0), 0.0, 1e-8);
  EXPECT_NEAR(j.dyv(0, 0), -1.0, 1e-8);
  EXPECT_EQ(j.stacked().rows(), 2);
}

TEST(LatentJacobianFd, QuadraticFormWithRealMatrix) {
  Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd a(3, 3);
    for (Index r = 0; r < 3; ++r) {
      for (Index c = 0; c < 3; ++c) a(r, c) = testing::uniform(rng, -1, 1);
    }
    const Tensor z = testing::disk_vector(rng, 3);
    const Eigen::VectorXd x = z.flat().real(), y = z.flat().imag();
    const LatentJacobian j = latent_jacobian_fd(quadratic_form(Tensor::matrix(a.cast<Complex>())), z);
    const Eigen::MatrixXd sym = a + a.transpose(), anti = a - a.transpose();
    EXPECT_LE((j.dxu - x.transpose() * sym).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LE((j.dyu - y.transpose() * sym).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LE((j.dxv - y.transpose() * (-anti)).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LE((j.dyv - x.transpose() * anti).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(LatentJacobianFd, Errors) {
  EXPECT_THROW(latent_jacobian_fd(expr::compile("log(z)"), Tensor(Complex(1e-5, 0))), NumericError);
  EXPECT_THROW(latent_jacobian_fd(expr::compile("z"), Tensor(Complex(1, 0)), 0.0), ConfigError);
  EXPECT_THROW(latent_jacobian_fd(expr::compile("exp(z)"), Tensor(Complex(709.78271, 0))), NumericError);
}

TEST(LatentJvpOracle, Examples) {
  const LatentJacobian twice = latent_jacobian_fd(expr::compile("2*z"), Tensor(Complex(0.1, 0.2)));
  EXPECT_LE(std::abs(latent_jvp_oracle(twice, Tensor(Complex(1, 1))).item() - Complex(2, 2)), 1e-8);
  const LatentJacobian c = latent_jacobian_fd(expr::compile("conj(z)"), Tensor(Complex(0.1, 0.2)));
  EXPECT_LE(std::abs(latent_jvp_oracle(c, Tensor(Complex(3, -4))).item() - Complex(3, 4)), 1e-8);
  EXPECT_THROW(latent_jvp_oracle(c, Tensor::zeros(Shape::vector(2))), ShapeError);
}

TEST(LatentJvpOracle, QuadraticFormClosedForm) {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor a = testing::disk_matrix(rng, 3, 3);
    const Tensor z = testing::disk_vector(rng, 3), zt = testing::disk_vector(rng, 3);
    const auto& A = a.values();
    const Tensor::FlatVector zv = z.flat(), tv = zt.flat();
    const Complex expected = (zv.conjugate().transpose() * A * tv)(0, 0) + (zv.transpose() * A.transpose() * tv.conjugate())(0, 0);
    const Tensor got = latent_jvp_oracle(latent_jacobian_fd(quadratic_form(a), z), zt);
    EXPECT_LE(std::abs(got.item() - expected), 1e-6 * std::max(1.0, std::abs(expected)));
  }
}

TEST(LatentVjpOracle, Examples) {
  const LatentJacobian half = latent_jacobian_fd(expr::compile("0.5*z^2"), Tensor(Complex(1, 1)));
  EXPECT_LE(std::abs(latent_vjp_oracle(half, Tensor(Complex(1, 0)), Convention::plus).item() - Complex(1, -1)), 1e-8);
  EXPECT_LE(std::abs(latent_vjp_oracle(half, Tensor(Complex(1, 0)), Convention::minus).item() - Complex(1, 1)), 1e-8);

  Rng rng(54);
  GraphBuilder b;
  Expr z = b.input(Shape::vector(2));
  const LatentJacobian id = latent_jacobian_fd(b.build(z), testing::disk_vector(rng, 2));
  for (Convention c : {Convention::plus, Convention::minus}) {
    const Tensor fbar = testing::disk_vector(rng, 2);
    EXPECT_LE(relative_error(latent_vjp_oracle(id, fbar, c), fbar), 1e-8);
  }
  EXPECT_THROW(latent_vjp_oracle(id, Tensor(Complex(1, 0))), ShapeError);
}

TEST(WirtingerFromLatent, MatchesKnownPairs) {
  const WirtingerPair c = wirtinger_from_latent(latent_jacobian_fd(expr::compile("conj(z)"), Tensor(Complex(1, 0))));
  EXPECT_LE(std::abs(c.dz.item()), 1e-8);
  EXPECT_LE(std::abs(c.dzbar.item() - 1.0), 1e-8);
  const WirtingerPair r = wirtinger_from_latent(latent_jacobian_fd(expr::compile("re(z)"), Tensor(Complex(0, 2))));
  EXPECT_LE(std::abs(r.dz.item() - 0.5), 1e-8);
  EXPECT_LE(std::abs(r.dzbar.item() - 0.5), 1e-8);
}

TEST(HolomorphicityCheck, Examples) {
  const HolomorphicityReport e = holomorphicity_check(expr::compile("exp(z)"), Tensor(Complex(0.3, 0.2)), 1e-6);
  EXPECT_TRUE(e.is_holomorphic);
  EXPECT_LE(e.dzbar_norm, 1e-8);

  const HolomorphicityReport c = holomorphicity_check(expr::compile("conj(z)"), Tensor(Complex(1, 0)));
  EXPECT_FALSE(c.is_holomorphic);
  EXPECT_NEAR(c.dzbar_norm, 1.0, 1e-8);

  Rng rng(55);
  const HolomorphicityReport q = holomorphicity_check(quadratic_form(testing::disk_matrix(rng, 3, 3)),
                                                      testing::disk_vector(rng, 3));
  EXPECT_FALSE(q.is_holomorphic);
  EXPECT_GT(q.dzbar_norm, 0.0);

  EXPECT_THROW(holomorphicity_check(expr::compile("z"), Tensor(Complex(1, 0)), 0.0), ConfigError);
}

TEST(LatentJacobianFd, CauchyRiemannBlocksForHolomorphicGraphs) {
  Rng rng(56);
  for (const std::string& text : testing::holomorphic_corpus()) {
    const Graph g = expr::compile(text);
    for (int trial = 0; trial < 10; ++trial) {
      const LatentJacobian j = latent_jacobian_fd(g, Tensor(testing::safe_point(rng)));
      const double scale = std::max(1.0, j.stacked().cwiseAbs().maxCoeff());
      EXPECT_LE((j.dxu - j.dyv).cwiseAbs().maxCoeff() / scale, 1e-6) << text;
      EXPECT_LE((j.dyu + j.dxv).cwiseAbs().maxCoeff() / scale, 1e-6) << text;
    }
  }
}

}  // namespace
}  // namespace wirtinger
