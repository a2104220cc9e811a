// Copyright 2026 The trop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file tensor.hpp
/// Dense vectors and matrices over an idempotent semifield.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trop/error.hpp"
#include "trop/semiring.hpp"

namespace trop {

/// Column vector of length >= 1. A row vector (such as a conjugate) uses the
/// same type; the role is fixed by the operation that consumes it.
template <Semifield S>
class Vector {
 public:
  using scalar_type = Scalar<S>;

  explicit Vector(std::size_t n) : elems_(checked_size(n)) {}
  explicit Vector(std::vector<scalar_type> elems) : elems_(std::move(elems)) {
    checked_size(elems_.size());
  }
  Vector(std::initializer_list<double> values) : elems_(checked_size(values.size())) {
    std::size_t i = 0;
    for (double v : values) elems_[i++] = scalar_type(v);
  }

  static Vector from_values(std::span<const double> values) {
    Vector out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = scalar_type(values[i]);
    return out;
  }

  std::size_t size() const noexcept { return elems_.size(); }
  scalar_type operator[](std::size_t i) const { return elems_[i]; }
  scalar_type& operator[](std::size_t i) { return elems_[i]; }
  std::span<const scalar_type> elements() const noexcept { return elems_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  static std::size_t checked_size(std::size_t n) {
    if (n == 0) throw ShapeError("vector must have at least one element");
    return n;
  }

  std::vector<scalar_type> elems_;
};

/// Dense row-major matrix with at least one row and one column.
template <Semifield S>
class Matrix {
 public:
  using scalar_type = Scalar<S>;

  /// Zero matrix of the given shape.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  }

  Matrix(std::initializer_list<std::initializer_list<double>> rows)
      : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
      std::size_t j = 0;
      for (double v : row) (*this)(i, j++) = scalar_type(v);
      ++i;
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = scalar_type::one();
    return out;
  }

  /// Row-major values; throws ShapeError if the count does not match.
  static Matrix from_values(std::size_t rows, std::size_t cols, std::span<const double> values) {
    Matrix out(rows, cols);
    if (values.size() != rows * cols) throw ShapeError("value count does not match matrix shape");
    for (std::size_t k = 0; k < values.size(); ++k) out.data_[k] = scalar_type(values[k]);
    return out;
  }

  static Matrix from_column(const Vector<S>& v) {
    Matrix out(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) out(i, 0) = v[i];
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  scalar_type operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  scalar_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector<S> column(std::size_t j) const {
    Vector<S> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const noexcept {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<scalar_type> data_;
};

namespace detail {

inline std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

template <Semifield S>
void require_square(const Matrix<S>& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeError(std::string(op) + ": matrix must be square, got " +
                     shape_str(a.rows(), a.cols()));
  }
}

}  // namespace detail

template <Semifield S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix sum: shapes " + detail::shape_str(a.rows(), a.cols()) + " and " +
                     detail::shape_str(b.rows(), b.cols()) + " differ");
  }
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

template <Semifield S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: inner dimensions of " +
                     detail::shape_str(a.rows(), a.cols()) + " and " +
                     detail::shape_str(b.rows(), b.cols()) + " differ");
  }
  Matrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar<S> aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <Semifield S>
Matrix<S> operator*(Scalar<S> c, const Matrix<S>& a) {
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  }
  return out;
}

template <Semifield S>
Vector<S> operator*(const Matrix<S>& a, const Vector<S>& x) {
  if (a.cols() != x.size()) {
    throw ShapeError("matrix-vector product: " + detail::shape_str(a.rows(), a.cols()) +
                     " times length " + std::to_string(x.size()));
  }
  Vector<S> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar<S> acc;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

template <Semifield S>
Vector<S> operator*(Scalar<S> c, const Vector<S>& x) {
  Vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

template <Semifield S>
Vector<S> operator+(const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != y.size()) throw ShapeError("vector sum: lengths differ");
  Vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

/// Row vector times column vector.
template <Semifield S>
Scalar<S> dot(const Vector<S>& row, const Vector<S>& col) {
  if (row.size() != col.size()) throw ShapeError("inner product: lengths differ");
  Scalar<S> acc;
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * col[i];
  return acc;
}

/// Column vector times row vector.
template <Semifield S>
Matrix<S> outer(const Vector<S>& col, const Vector<S>& row) {
  Matrix<S> out(col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) out(i, j) = col[i] * row[j];
  }
  return out;
}

template <Semifield S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
  return a + b;
}

template <Semifield S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b;
}

template <Semifield S>
Matrix<S> scalar_mul(Scalar<S> c, const Matrix<S>& a) {
  return c * a;
}

/// A^p with A^0 = I.
template <Semifield S>
Matrix<S> mat_pow(const Matrix<S>& a, unsigned p) {
  detail::require_square(a, "matrix power");
  Matrix<S> out = Matrix<S>::identity(a.rows());
  for (unsigned k = 0; k < p; ++k) out = out * a;
  return out;
}

template <Semifield S>
Scalar<S> trace(const Matrix<S>& a) {
  detail::require_square(a, "trace");
  Scalar<S> acc;
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

template <Semifield S>
bool is_regular(const Vector<S>& x) noexcept {
  for (const auto& e : x.elements()) {
    if (e.is_zero()) return false;
  }
  return true;
}

/// Conjugate row vector: inverse of each nonzero entry, zero elsewhere.
/// Throws DomainError for the all-zero vector.
template <Semifield S>
Vector<S> conjugate(const Vector<S>& x) {
  Vector<S> out(x.size());
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out[i] = inv(x[i]);
    any = true;
  }
  if (!any) throw DomainError("conjugate of the zero vector is undefined");
  return out;
}

/// Kleene star I (+) A (+) ... (+) A^(n-1), by Horner accumulation
/// S <- I (+) A S repeated n - 1 times.
template <Semifield S>
Matrix<S> kleene_star(const Matrix<S>& a) {
  detail::require_square(a, "kleene star");
  const std::size_t n = a.rows();
  const Matrix<S> eye = Matrix<S>::identity(n);
  Matrix<S> acc = eye;
  for (std::size_t k = 1; k < n; ++k) acc = eye + a * acc;
  return acc;
}

/// Entrywise order.
template <Semifield S>
bool leq(const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != y.size()) throw ShapeError("vector comparison: lengths differ");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!leq(x[i], y[i])) return false;
  }
  return true;
}

template <Semifield S>
bool leq(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix comparison: shapes differ");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!leq(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

/// Returns c with y = c x when one exists. Zero patterns must coincide and c
/// is read off the first index where both entries are nonzero; vectors with
/// no such index (including zero vectors) are never collinear.
template <Semifield S>
std::optional<Scalar<S>> collinear(const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::optional<Scalar<S>> c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() != y[i].is_zero()) return std::nullopt;
    if (!c && !x[i].is_zero()) c = y[i] * inv(x[i]);
  }
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(*c * x[i] == y[i])) return std::nullopt;
  }
  return c;
}

/// Drops every column collinear to an earlier kept column. Kept columns stay
/// in their original order, so the linear span is unchanged.
template <Semifield S>
Matrix<S> reduce_generators(const Matrix<S>& g) {
  std::vector<Vector<S>> kept;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Vector<S> col = g.column(j);
    bool redundant = false;
    for (const auto& k : kept) {
      if (collinear(k, col)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(col));
  }
  Matrix<S> out(g.rows(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) out(i, j) = kept[j][i];
  }
  return out;
}

using MaxPlusMatrix = Matrix<MaxPlus>;
using MaxPlusVector = Vector<MaxPlus>;

}  // namespace trop
