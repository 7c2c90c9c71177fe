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

#include <limits>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wirtinger/core.hpp"

namespace wirtinger {
namespace {

using testing::Rng;

Tensor vec(std::initializer_list<Complex> entries) {
  Tensor::FlatVector v(static_cast<Index>(entries.size()));
  Index k = 0;
  for (Complex e : entries) v(k++) = e;
  return Tensor::vector(v);
}

TEST(Shape, ExtentsAndSize) {
  EXPECT_EQ(Shape::scalar().rank(), 0);
  EXPECT_EQ(Shape::scalar().size(), 1);
  EXPECT_TRUE(Shape::scalar().extents().empty());
  EXPECT_EQ(Shape::vector(4).extents(), std::vector<Index>{4});
  EXPECT_EQ(Shape::matrix(2, 3).size(), 6);
  EXPECT_EQ(Shape::matrix(2, 3).to_string(), "(2x3)");
  EXPECT_THROW(Shape::vector(-1), ShapeError);
}

TEST(DenseTensor, RowMajorFlatOrder) {
  Tensor::Storage a(2, 2);
  a << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
  const Tensor t = Tensor::matrix(a);
  EXPECT_EQ(t[1], Complex(2, 0));
  EXPECT_EQ(t(1, 0), Complex(3, 0));
  EXPECT_EQ(Tensor::from_flat(t.shape(), t.flat()), t);
  EXPECT_THROW(Tensor::from_flat(Shape::vector(3), t.flat()), ShapeError);
  EXPECT_THROW(Tensor(Shape::vector(3), Tensor::Storage(2, 1)), ShapeError);
  EXPECT_THROW(t.item(), ShapeError);
}

TEST(DenseTensor, FiniteCheck) {
  EXPECT_TRUE(Tensor(Complex(1, 2)).all_finite());
  EXPECT_FALSE(Tensor(Complex(std::numeric_limits<double>::infinity(), 0)).all_finite());
  EXPECT_FALSE(Tensor(Complex(0, std::numeric_limits<double>::quiet_NaN())).all_finite());
}

TEST(SplitReim, Examples) {
  auto [x, y] = split_reim(Tensor(Complex(2, 3)));
  EXPECT_EQ(x.item(), 2.0);
  EXPECT_EQ(y.item(), 3.0);
  auto [x0, y0] = split_reim(Tensor(Complex(0, 0)));
  EXPECT_EQ(x0.item(), 0.0);
  EXPECT_EQ(y0.item(), 0.0);
  auto [x1, y1] = split_reim(Tensor(Complex(0.5, -10.1)));
  EXPECT_EQ(x1.item(), 0.5);
  EXPECT_EQ(y1.item(), -10.1);
}

TEST(JoinReim, Examples) {
  EXPECT_EQ(join_reim(RealTensor(2.0), RealTensor(3.0)).item(), Complex(2, 3));
  EXPECT_EQ(join_reim(RealTensor(0.0), RealTensor(0.0)).item(), Complex(0, 0));
  EXPECT_EQ(join_reim(RealTensor(1.0), RealTensor(-1.0)).item(), Complex(1, -1));
  EXPECT_THROW(join_reim(RealTensor(1.0), RealTensor::zeros(Shape::vector(2))), ShapeError);
}

TEST(JoinReim, InvertsSplitExactly) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Tensor z = testing::disk_like(rng, Shape::matrix(2, 3));
    const Tensor scaled = Complex(1e3 * testing::uniform(rng, -1, 1), 0.0) * z;
    auto [x, y] = split_reim(scaled);
    EXPECT_EQ(join_reim(x, y), scaled);
  }
}

TEST(HermitianInner, Examples) {
  EXPECT_EQ(hermitian_inner(vec({{1, 0}, {0, 1}}), vec({{1, 0}, {0, 1}})), Complex(2, 0));
  EXPECT_EQ(hermitian_inner(Tensor(Complex(0, 1)), Tensor(Complex(1, 0))), Complex(0, -1));
  EXPECT_EQ(hermitian_inner(vec({{1, 1}, {2, 0}}), vec({{3, 0}, {0, -1}})), Complex(3, -5));
}

TEST(HermitianInner, RejectsNonconformingShapes) {
  EXPECT_THROW(hermitian_inner(vec({1, 2}), vec({1, 2, 3})), ShapeError);
  EXPECT_THROW(hermitian_inner(Tensor::zeros(Shape::matrix(2, 2)), Tensor::zeros(Shape::matrix(2, 2))), ShapeError);
}

TEST(HermitianInner, Properties) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Tensor a = testing::disk_vector(rng, 4);
    const Tensor b = testing::disk_vector(rng, 4);
    const Complex aa = hermitian_inner(a, a);
    EXPECT_EQ(aa.imag(), 0.0);
    EXPECT_GT(aa.real(), 0.0);
    EXPECT_NEAR(std::abs(std::conj(hermitian_inner(a, b)) - hermitian_inner(b, a)), 0.0, 1e-15);
    const Complex alpha = testing::unit_disk(rng);
    // Conjugate-linear in the first slot, linear in the second.
    EXPECT_NEAR(std::abs(hermitian_inner(alpha * a, b) - std::conj(alpha) * hermitian_inner(a, b)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(hermitian_inner(a, alpha * b) - alpha * hermitian_inner(a, b)), 0.0, 1e-14);
  }
  EXPECT_EQ(hermitian_inner(Tensor::zeros(Shape::vector(3)), Tensor::zeros(Shape::vector(3))), Complex(0, 0));
}

TEST(Conjugate, ExamplesAndInvolution) {
  EXPECT_EQ(conjugate(Tensor(Complex(1, 1))).item(), Complex(1, -1));
  EXPECT_EQ(conjugate(Tensor(Complex(0, 0))).item(), Complex(0, 0));
  const Tensor z(Complex(0.3, -7));
  EXPECT_EQ(conjugate(conjugate(z)), z);
}

TEST(Convention, ParseAndPrint) {
  EXPECT_EQ(parse_convention("plus"), Convention::plus);
  EXPECT_EQ(parse_convention("minus"), Convention::minus);
  EXPECT_EQ(to_string(Convention::minus), "minus");
  EXPECT_THROW(parse_convention("adjoint"), ConfigError);
}

TEST(WirtingerPair, ComponentsMustShareShape) {
  EXPECT_NO_THROW(WirtingerPair(Tensor(Complex(1, 0)), Tensor(Complex(0, 0))));
  EXPECT_THROW(WirtingerPair(Tensor(Complex(1, 0)), Tensor::zeros(Shape::matrix(1, 1))), ShapeError);
}

TEST(JacobianShape, ScalarAndMatrixBlocks) {
  EXPECT_EQ(jacobian_shape(Shape::scalar(), Shape::scalar()), Shape::scalar());
  EXPECT_EQ(jacobian_shape(Shape::scalar(), Shape::vector(3)), Shape::matrix(1, 3));
  EXPECT_EQ(jacobian_shape(Shape::vector(2), Shape::matrix(2, 3)), Shape::matrix(2, 6));
}

TEST(RelativeError, UsesFloorNearZero) {
  EXPECT_DOUBLE_EQ(relative_error(Tensor(Complex(1e-3, 0)), Tensor(Complex(0, 0))), 1e-3);
  EXPECT_DOUBLE_EQ(relative_error(Tensor(Complex(11, 0)), Tensor(Complex(10, 0))), 0.1);
}

TEST(ComplexText, ParsesAllForms) {
  EXPECT_EQ(parse_complex("2"), Complex(2, 0));
  EXPECT_EQ(parse_complex("-2.5"), Complex(-2.5, 0));
  EXPECT_EQ(parse_complex("3i"), Complex(0, 3));
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("1+1i"), Complex(1, 1));
  EXPECT_EQ(parse_complex("1-i"), Complex(1, -1));
  EXPECT_EQ(parse_complex(" 0.5 - 10.1i "), Complex(0.5, -10.1));
  EXPECT_EQ(parse_complex("1e-3+2E+2i"), Complex(1e-3, 200));
  EXPECT_EQ(parse_complex("-1e5-1e-5i"), Complex(-1e5, -1e-5));
}

TEST(ComplexText, RejectsMalformed) {
  for (const char* bad : {"", "abc", "1+", "1+2j", "inf", "nan", "1..2", "2ii", "1e999", "1+nani", "--1"}) {
    EXPECT_THROW(parse_complex(bad), ConfigError) << bad;
  }
}

TEST(ComplexText, FormatsCanonically) {
  EXPECT_EQ(format_complex({0, 1}), "0+1i");
  EXPECT_EQ(format_complex({1, -1}), "1-1i");
  EXPECT_EQ(format_complex({2, 0}), "2");
  EXPECT_EQ(format_complex({-0.0, 0}), "0");
  EXPECT_EQ(format_complex({0.1, 0.2}), "0.1+0.2i");
}

TEST(ComplexText, RoundTripsShortestForm) {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const double scale = std::pow(10.0, testing::uniform(rng, -8, 8));
    const Complex z(scale * testing::uniform(rng, -1, 1), scale * testing::uniform(rng, -1, 1));
    EXPECT_EQ(parse_complex(format_complex(z)), z) << format_complex(z);
  }
}

TEST(ComplexText, VectorsAndTensors) {
  const Tensor v = parse_complex_vector("1, 1i");
  EXPECT_EQ(v, vec({{1, 0}, {0, 1}}));
  EXPECT_EQ(format_tensor(v), "[1, 0+1i]");
  Tensor::Storage a(2, 2);
  a << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
  EXPECT_EQ(format_tensor(Tensor::matrix(a)), "[1, 0; 0, 1]");
  EXPECT_THROW(parse_complex_vector("1,,2"), ConfigError);
}

}  // namespace
}  // namespace wirtinger
