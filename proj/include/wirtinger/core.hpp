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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "wirtinger/error.hpp"

namespace wirtinger {

using Index = Eigen::Index;

template <typename Real>
using BasicComplex = std::complex<Real>;

using Complex = BasicComplex<double>;

/// Extents of a rank 0, 1 or 2 tensor.
class Shape {
 public:
  Shape() = default;

  static Shape scalar() { return Shape(0, 1, 1); }
  static Shape vector(Index n) { return Shape(1, n, 1); }
  static Shape matrix(Index rows, Index cols) { return Shape(2, rows, cols); }

  int rank() const { return rank_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index size() const { return rows_ * cols_; }

  std::vector<Index> extents() const {
    switch (rank_) {
      case 0: return {};
      case 1: return {rows_};
      default: return {rows_, cols_};
    }
  }

  friend bool operator==(const Shape&, const Shape&) = default;

  std::string to_string() const {
    switch (rank_) {
      case 0: return "()";
      case 1: return "(" + std::to_string(rows_) + ")";
      default: return "(" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")";
    }
  }

 private:
  Shape(int rank, Index rows, Index cols) : rank_(rank), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative tensor extent");
  }

  int rank_ = 0;
  Index rows_ = 1;
  Index cols_ = 1;
};

/// Dense scalar, vector or matrix with entries of type Elem.
///
/// Entries are stored row-major, so `flat()` enumerates them in the
/// canonical order used by Jacobians: a matrix entry (r, c) has flat index
/// r * cols + c. Vectors are stored as a single column.
///
/// Tensors are values; nothing mutates a tensor after construction.
template <typename Elem>
class DenseTensor {
 public:
  using Storage = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using FlatVector = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;

  DenseTensor() : DenseTensor(Elem{}) {}

  /* implicit */ DenseTensor(Elem value) : shape_(Shape::scalar()), data_(1, 1) { data_(0, 0) = value; }

  DenseTensor(Shape shape, Storage data) : shape_(shape), data_(std::move(data)) {
    if (data_.rows() != shape_.rows() || data_.cols() != shape_.cols()) {
      throw ShapeError("tensor data " + std::to_string(data_.rows()) + "x" +
                       std::to_string(data_.cols()) + " does not match shape " +
                       shape_.to_string());
    }
  }

  static DenseTensor zeros(Shape shape) {
    return DenseTensor(shape, Storage::Zero(shape.rows(), shape.cols()));
  }

  static DenseTensor vector(const Eigen::Ref<const FlatVector>& v) {
    return DenseTensor(Shape::vector(v.size()), Storage(v));
  }

  template <typename Derived>
  static DenseTensor matrix(const Eigen::MatrixBase<Derived>& m) {
    return DenseTensor(Shape::matrix(m.rows(), m.cols()), Storage(m));
  }

  /// Reinterprets a flat row-major vector as a tensor of the given shape.
  static DenseTensor from_flat(Shape shape, const Eigen::Ref<const FlatVector>& flat) {
    if (flat.size() != shape.size()) {
      throw ShapeError("flat data of length " + std::to_string(flat.size()) +
                       " does not fit shape " + shape.to_string());
    }
    Storage data(shape.rows(), shape.cols());
    std::copy(flat.data(), flat.data() + flat.size(), data.data());
    return DenseTensor(shape, std::move(data));
  }

  const Shape& shape() const { return shape_; }
  int rank() const { return shape_.rank(); }
  Index size() const { return shape_.size(); }

  const Storage& values() const { return data_; }

  Eigen::Map<const FlatVector> flat() const { return {data_.data(), data_.size()}; }

  const Elem& operator[](Index k) const { return data_.data()[k]; }
  const Elem& operator()(Index r, Index c = 0) const { return data_(r, c); }

  /// The single entry of a rank-0 tensor.
  const Elem& item() const {
    if (shape_.rank() != 0) throw ShapeError("item() requires a scalar, got shape " + shape_.to_string());
    return data_(0, 0);
  }

  bool all_finite() const {
    return std::all_of(data_.data(), data_.data() + data_.size(), [](const Elem& e) {
      if constexpr (std::is_arithmetic_v<Elem>) {
        return std::isfinite(e);
      } else {
        return std::isfinite(e.real()) && std::isfinite(e.imag());
      }
    });
  }

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  Shape shape_;
  Storage data_;
};

using Tensor = DenseTensor<Complex>;
using RealTensor = DenseTensor<double>;

/// Gradient convention used when mapping a real cotangent pair back to C.
///
/// plus (c = 1) is the adjoint convention: grad(z^2 / 2) = conj(z).
/// minus (c = -1) is the literal-transpose convention: grad(z^2 / 2) = z.
enum class Convention { plus, minus };

inline std::string_view to_string(Convention c) { return c == Convention::plus ? "plus" : "minus"; }

inline Convention parse_convention(std::string_view text) {
  if (text == "plus") return Convention::plus;
  if (text == "minus") return Convention::minus;
  throw ConfigError("unknown convention '" + std::string(text) + "' (expected plus or minus)");
}

/// Wirtinger derivatives (d/dz f, d/dzbar f) of one output with respect to
/// one input.
///
/// For scalar-to-scalar maps both entries are rank 0. Otherwise both are
/// matrices of shape (output size) x (input size) acting on flattened
/// tensors.
struct WirtingerPair {
  WirtingerPair(Tensor dz_, Tensor dzbar_) : dz(std::move(dz_)), dzbar(std::move(dzbar_)) {
    if (dz.shape() != dzbar.shape()) {
      throw ShapeError("Wirtinger pair components differ in shape: " + dz.shape().to_string() +
                       " vs " + dzbar.shape().to_string());
    }
  }

  Tensor dz;
  Tensor dzbar;
};

/// Shape of the Jacobian blocks relating an input of shape `in` to an output
/// of shape `out`.
inline Shape jacobian_shape(const Shape& out, const Shape& in) {
  if (out.rank() == 0 && in.rank() == 0) return Shape::scalar();
  return Shape::matrix(out.size(), in.size());
}

// Entrywise operations -------------------------------------------------------

template <typename Real>
std::pair<DenseTensor<Real>, DenseTensor<Real>> split_reim(const DenseTensor<BasicComplex<Real>>& z) {
  using RealStorage = typename DenseTensor<Real>::Storage;
  RealStorage x = z.values().real();
  RealStorage y = z.values().imag();
  return {DenseTensor<Real>(z.shape(), std::move(x)), DenseTensor<Real>(z.shape(), std::move(y))};
}

template <typename Real>
DenseTensor<BasicComplex<Real>> join_reim(const DenseTensor<Real>& x, const DenseTensor<Real>& y) {
  if (x.shape() != y.shape()) {
    throw ShapeError("join_reim: shapes " + x.shape().to_string() + " and " + y.shape().to_string() +
                     " differ");
  }
  using ComplexStorage = typename DenseTensor<BasicComplex<Real>>::Storage;
  ComplexStorage z(x.shape().rows(), x.shape().cols());
  z.real() = x.values();
  z.imag() = y.values();
  return {x.shape(), std::move(z)};
}

template <typename Real>
DenseTensor<BasicComplex<Real>> conjugate(const DenseTensor<BasicComplex<Real>>& z) {
  return {z.shape(), z.values().conjugate()};
}

/// Sum of conj(a[k]) * b[k]: conjugate-linear in the first argument.
template <typename Real>
BasicComplex<Real> hermitian_inner(const DenseTensor<BasicComplex<Real>>& a,
                                   const DenseTensor<BasicComplex<Real>>& b) {
  if (a.rank() > 1 || b.rank() > 1) throw ShapeError("hermitian_inner: operands must have rank <= 1");
  if (a.shape() != b.shape()) {
    throw ShapeError("hermitian_inner: shapes " + a.shape().to_string() + " and " +
                     b.shape().to_string() + " differ");
  }
  return a.flat().dot(b.flat());  // Eigen's dot conjugates the left operand
}

template <typename Elem>
DenseTensor<Elem> operator+(const DenseTensor<Elem>& a, const DenseTensor<Elem>& b) {
  if (a.shape() != b.shape()) throw ShapeError("operator+: shapes " + a.shape().to_string() + " and " + b.shape().to_string() + " differ");
  return {a.shape(), a.values() + b.values()};
}

template <typename Elem>
DenseTensor<Elem> operator-(const DenseTensor<Elem>& a, const DenseTensor<Elem>& b) {
  if (a.shape() != b.shape()) throw ShapeError("operator-: shapes " + a.shape().to_string() + " and " + b.shape().to_string() + " differ");
  return {a.shape(), a.values() - b.values()};
}

template <typename Elem>
DenseTensor<Elem> operator*(const Elem& s, const DenseTensor<Elem>& a) {
  return {a.shape(), s * a.values()};
}

/// Largest entry modulus; 0 for an empty tensor.
template <typename Elem>
double max_abs(const DenseTensor<Elem>& a) {
  if (a.size() == 0) return 0.0;
  return static_cast<double>(a.values().cwiseAbs().maxCoeff());
}

/// max |a - b| / max(max |b|, floor): relative error with an absolute floor
/// for near-zero references.
template <typename Elem>
double relative_error(const DenseTensor<Elem>& actual, const DenseTensor<Elem>& expected,
                      double floor = 1.0) {
  if (actual.shape() != expected.shape()) {
    throw ShapeError("relative_error: shapes " + actual.shape().to_string() + " and " +
                     expected.shape().to_string() + " differ");
  }
  return max_abs(actual - expected) / std::max(max_abs(expected), floor);
}

// Complex text format ---------------------------------------------------------

/// Parses `a`, `bi`, `a+bi`, `a-bi` (spaces allowed, `i` alone meaning 1i).
/// Locale independent; rejects non-finite values.
Complex parse_complex(std::string_view text);

/// Shortest round-trip decimal form of a real number; -0 prints as 0.
std::string format_real(double v);

/// Shortest round-trip form: `2`, `0+1i`, `1-1i`. Purely real values omit
/// the imaginary part.
std::string format_complex(Complex z);

/// Comma-separated list of complex literals, e.g. `1, 1i`.
Tensor parse_complex_vector(std::string_view text);

/// `[a, b, ...]` for vectors, rows separated by `; ` for matrices, bare
/// literal for scalars.
std::string format_tensor(const Tensor& t);

}  // namespace wirtinger
