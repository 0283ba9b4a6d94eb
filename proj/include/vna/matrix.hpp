// Copyright 2026 The vna Authors.
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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "vna/errors.hpp"
#include "vna/simd/kernels.hpp"

namespace vna {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense complex matrix, row-major storage.  Entries are validated to be
/// finite whenever a matrix is built from external data.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static Matrix from_data(std::size_t rows, std::size_t cols, Vector entries);
  static Matrix diagonal(const std::vector<double>& entries);
  /// Kronecker product a (x) b.
  static Matrix kron(const Matrix& a, const Matrix& b);
  /// Rank-one u * v^H.
  static Matrix outer(const Vector& u, const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  Complex* row(std::size_t i) { return data_.data() + i * cols_; }
  const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }
  const Vector& storage() const { return data_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(Complex s) const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Complex s);

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  Vector apply(const Vector& v) const;

  bool is_square() const { return rows_ == cols_; }
  double hermitian_defect() const;  // ||A - A^H||_F
  bool is_finite() const;

  /// Throws Error when any entry is NaN or Inf.
  void validate_finite(const char* what = "matrix") const;

 private:
  std::size_t rows_, cols_;
  Vector data_;
};

inline Matrix operator*(Complex s, const Matrix& m) { return m * s; }

// Vector helpers on interleaved complex storage (kernel-backed).
Complex dot_conj(const Vector& a, const Vector& b);
double norm(const Vector& a);
double norm_sq(const Vector& a);
void axpy(Complex alpha, const Vector& x, Vector& y);
void scale_vec(Complex alpha, Vector& x);
double distance(const Vector& a, const Vector& b);

/// ||a - b||_F
double frobenius_distance(const Matrix& a, const Matrix& b);
/// ||a*b - b*a||_F
double commutator_norm(const Matrix& a, const Matrix& b);

}  // namespace vna
