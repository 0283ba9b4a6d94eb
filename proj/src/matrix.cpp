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

#include "vna/matrix.hpp"

#include <cmath>
#include <cstring>

namespace vna {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row in matrix literal");
    std::size_t j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  m.validate_finite("matrix literal");
  return m;
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, Vector entries) {
  if (entries.size() != rows * cols)
    throw DimensionMismatch("entry count does not match shape");
  Matrix m(rows, cols);
  m.data_ = std::move(entries);
  m.validate_finite("matrix data");
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  m.validate_finite("diagonal matrix");
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r -= o;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  simd::active().axpy(data_.size(), Complex(1.0, 0.0), o.data_.data(), data_.data());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  simd::active().axpy(data_.size(), Complex(-1.0, 0.0), o.data_.data(), data_.data());
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  simd::active().gemm(rows_, cols_, o.cols_, data_.data(), o.data_.data(), r.data_.data());
  return r;
}

Matrix Matrix::operator*(Complex s) const {
  Matrix r = *this;
  r *= s;
  return r;
}

Matrix& Matrix::operator*=(Complex s) {
  simd::active().scale(data_.size(), s, data_.data());
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
  return r;
}

Complex Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  return std::sqrt(simd::active().norm_sq(data_.size(), data_.data()));
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector r(rows_, Complex(0.0, 0.0));
  simd::active().gemm(rows_, cols_, 1, data_.data(), v.data(), r.data());
  return r;
}

double Matrix::hermitian_defect() const {
  if (!is_square()) throw DimensionMismatch("hermitian defect of non-square matrix");
  double acc = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Complex d = (*this)(i, j) - std::conj((*this)(j, i));
      acc += std::norm(d);
    }
  return std::sqrt(acc);
}

bool Matrix::is_finite() const {
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

void Matrix::validate_finite(const char* what) const {
  if (!is_finite()) throw Error(std::string(what) + " has non-finite entries");
}

Complex dot_conj(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  return simd::active().dot_conj(a.size(), a.data(), b.data());
}

double norm_sq(const Vector& a) { return simd::active().norm_sq(a.size(), a.data()); }

double norm(const Vector& a) { return std::sqrt(norm_sq(a)); }

void axpy(Complex alpha, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("axpy length mismatch");
  simd::active().axpy(x.size(), alpha, x.data(), y.data());
}

void scale_vec(Complex alpha, Vector& x) {
  simd::active().scale(x.size(), alpha, x.data());
}

double distance(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("distance length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("frobenius distance shape mismatch");
  double acc = 0.0;
  const Complex* pa = a.data();
  const Complex* pb = b.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) acc += std::norm(pa[i] - pb[i]);
  return std::sqrt(acc);
}

double commutator_norm(const Matrix& a, const Matrix& b) {
  return frobenius_distance(a * b, b * a);
}

}  // namespace vna
