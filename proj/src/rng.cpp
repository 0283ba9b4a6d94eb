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

#include "vna/rng.hpp"

#include <algorithm>

namespace vna {

std::vector<double> dirichlet_weights(SplitMix64& rng, std::size_t k,
                                      double floor) {
  std::vector<double> w(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    // Gamma(2) = -log(u1 u2).
    const double u1 = 1.0 - rng.uniform();
    const double u2 = 1.0 - rng.uniform();
    w[i] = -std::log(u1 * u2);
    total += w[i];
  }
  for (double& x : w) x /= total;
  double again = 0.0;
  for (double& x : w) {
    x = std::max(x, floor);
    again += x;
  }
  for (double& x : w) x /= again;
  return w;
}

Matrix random_gaussian_matrix(SplitMix64& rng, std::size_t rows,
                              std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.cgaussian();
  return m;
}

Vector random_gaussian_vector(SplitMix64& rng, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.cgaussian();
  return v;
}

Matrix random_unitary(SplitMix64& rng, std::size_t n) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Matrix g = random_gaussian_matrix(rng, n, n);
    // Column Gram-Schmidt.
    std::vector<Vector> cols(n, Vector(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cols[j][i] = g(i, j);
    bool ok = true;
    std::vector<Vector> q;
    for (std::size_t j = 0; j < n && ok; ++j) {
      Vector v = cols[j];
      for (const Vector& b : q) axpy(-dot_conj(b, v), b, v);
      for (const Vector& b : q) axpy(-dot_conj(b, v), b, v);
      const double nv = norm(v);
      if (nv < 1e-8) {
        ok = false;
        break;
      }
      scale_vec(Complex(1.0 / nv, 0.0), v);
      q.push_back(std::move(v));
    }
    if (!ok) continue;
    Matrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) u(i, j) = q[j][i];
    return u;
  }
  throw Error("random_unitary failed to produce a full-rank draw");
}

Matrix random_hermitian(SplitMix64& rng, std::size_t n) {
  const Matrix g = random_gaussian_matrix(rng, n, n);
  Matrix h = (g + g.adjoint()) * Complex(0.5, 0.0);
  const double scale = h.frobenius_norm();
  if (scale > 0.0) h *= Complex(1.0 / scale, 0.0);
  return h;
}

}  // namespace vna
