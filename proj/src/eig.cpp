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

#include "vna/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace vna {
namespace {

constexpr int kSweepBudget = 100;

double off_diagonal_norm_sq(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return acc;
}

}  // namespace

EigResult hermitian_eig(const Matrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionMismatch("hermitian_eig needs a square matrix");
  if (a.hermitian_defect() > tol.match_eps)
    throw NotHermitian("matrix is not Hermitian within match_eps");

  const std::size_t n = a.rows();
  EigResult result;
  if (n == 0) {
    result.vectors = Matrix(0, 0);
    return result;
  }

  // Work on the Hermitian part; rounding in the input is discarded here.
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  // Eigenvectors accumulate transposed so the rotated pair is contiguous.
  Matrix vt = Matrix::identity(n);

  const double scale = w.frobenius_norm();
  const double stop = std::max(static_cast<double>(n), 4.0) *
                      std::numeric_limits<double>::epsilon() * scale;
  const auto& k = simd::active();

  int sweep = 0;
  double off = std::sqrt(off_diagonal_norm_sq(w));
  for (; sweep < kSweepBudget && off > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex beta = w(p, q);
        const double babs = std::abs(beta);
        if (babs <= std::numeric_limits<double>::min()) {
          w(p, q) = w(q, p) = Complex(0.0, 0.0);
          continue;
        }
        const double alpha = w(p, p).real();
        const double gamma = w(q, q).real();
        const Complex phase = beta / babs;

        // tan(2 theta) = 2|beta| / (gamma - alpha); smaller-angle root.
        const double tau = (gamma - alpha) / (2.0 * babs);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Column update of W and of V uses zrot with s_z = -s * conj(phase);
        // the row update is the conjugate rotation.
        const Complex sz = -s * std::conj(phase);

        // Rows p and q (contiguous), then mirror into columns by symmetry.
        k.rot(n, w.row(p), w.row(q), c, std::conj(sz));
        for (std::size_t i = 0; i < n; ++i) {
          w(i, p) = std::conj(w(p, i));
          w(i, q) = std::conj(w(q, i));
        }
        // 2x2 block analytically; the rotation zeroes the pivot.
        const double app = c * c * alpha + s * s * gamma - 2.0 * c * s * babs;
        const double aqq = s * s * alpha + c * c * gamma + 2.0 * c * s * babs;
        w(p, p) = app;
        w(q, q) = aqq;
        w(p, q) = w(q, p) = Complex(0.0, 0.0);

        k.rot(n, vt.row(p), vt.row(q), c, sz);
      }
    }
    off = std::sqrt(off_diagonal_norm_sq(w));
  }
  if (off > stop)
    throw NoConvergence("Jacobi eigensolver exceeded its sweep budget", off);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return w(i, i).real() < w(j, j).real();
  });

  result.eigenvalues.resize(n);
  result.vectors = Matrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    result.eigenvalues[col] = w(src, src).real();
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, col) = vt(src, i);
  }
  return result;
}

Matrix eig_function(const EigResult& e, const std::function<double(double)>& f) {
  const std::size_t n = e.eigenvalues.size();
  Matrix scaled(n, n);  // f(Lambda) U^H
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f(e.eigenvalues[i]);
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = fi * std::conj(e.vectors(j, i));
  }
  return e.vectors * scaled;
}

Matrix eig_unitary_exp(const EigResult& e, double t) {
  const std::size_t n = e.eigenvalues.size();
  Matrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex phase = std::polar(1.0, t * e.eigenvalues[i]);
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = phase * std::conj(e.vectors(j, i));
  }
  return e.vectors * scaled;
}

Matrix hermitian_sqrt(const Matrix& a, const Tolerance& tol) {
  return eig_function(hermitian_eig(a, tol),
                      [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

Matrix hermitian_inv_sqrt(const Matrix& a, const Tolerance& tol) {
  const EigResult e = hermitian_eig(a, tol);
  for (double v : e.eigenvalues)
    if (v <= 0.0) throw NotPositive("inverse square root of a non-positive matrix");
  return eig_function(e, [](double x) { return 1.0 / std::sqrt(x); });
}

Matrix hermitian_log(const Matrix& a, const Tolerance& tol) {
  const EigResult e = hermitian_eig(a, tol);
  for (double v : e.eigenvalues)
    if (v <= 0.0) throw NotPositive("logarithm of a non-positive matrix");
  return eig_function(e, [](double x) { return std::log(x); });
}

std::vector<double> singular_values(const Matrix& a, const Tolerance& tol) {
  const Matrix gram = a.adjoint() * a;
  EigResult e = hermitian_eig(gram, tol);
  std::vector<double> sv(e.eigenvalues.size());
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[i] = std::sqrt(std::max(e.eigenvalues[sv.size() - 1 - i], 0.0));
  return sv;
}

AntilinearPolar antilinear_polar(const AntilinearOp& s, const Tolerance& tol) {
  const Matrix& a = s.coeff;
  if (!a.is_square()) throw DimensionMismatch("antilinear_polar needs a square coefficient");

  const std::vector<double> sv = singular_values(a, tol);
  if (sv.empty() || sv.back() < tol.rank_eps)
    throw SingularS("antilinear operator is singular at rank_eps");

  // Delta = A^T conj(A) = (conj A)^H (conj A): Hermitian positive definite.
  Matrix delta = a.transpose() * a.conj();
  // Scrub rounding off the Hermitian structure.
  const std::size_t n = delta.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex v = 0.5 * (delta(i, j) + std::conj(delta(j, i)));
      delta(i, j) = v;
      delta(j, i) = std::conj(v);
    }

  // S = J Delta^{1/2}  <=>  coeff(J) = A * conj(Delta^{-1/2}).
  const Matrix inv_sqrt = hermitian_inv_sqrt(delta, tol);
  AntilinearPolar out;
  out.j = AntilinearOp(a * inv_sqrt.conj());
  out.delta = std::move(delta);
  return out;
}

}  // namespace vna
