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

#include "vna/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "vna/eig.hpp"

namespace vna {

Matrix SubspaceBasis::projection() const {
  Matrix p(ambient_dim, ambient_dim);
  for (const Vector& v : vectors) p += Matrix::outer(v, v);
  return p;
}

double SubspaceBasis::containment_residual(const Vector& v) const {
  Vector r = v;
  for (const Vector& b : vectors) axpy(-dot_conj(b, v), b, r);
  // One reorthogonalization pass keeps the residual meaningful near the
  // rounding floor.
  for (const Vector& b : vectors) axpy(-dot_conj(b, r), b, r);
  return norm(r);
}

SubspaceBasis orthonormalize(const std::vector<Vector>& vectors,
                             std::size_t ambient_dim, const Tolerance& tol) {
  SubspaceBasis basis;
  basis.ambient_dim = ambient_dim;
  if (vectors.empty()) return basis;

  std::vector<Vector> work;
  work.reserve(vectors.size());
  double scale = 0.0;
  for (const Vector& v : vectors) {
    if (v.size() != ambient_dim)
      throw DimensionMismatch("orthonormalize: vector length != ambient_dim");
    work.push_back(v);
    scale = std::max(scale, norm(v));
  }
  const double cutoff = tol.rank_eps * std::max(1.0, scale);

  // Pivoted modified Gram-Schmidt with reorthogonalization.
  while (basis.dim() < ambient_dim) {
    std::size_t best = work.size();
    double best_norm = cutoff;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const double ni = norm(work[i]);
      if (ni > best_norm) {
        best_norm = ni;
        best = i;
      }
    }
    if (best == work.size()) break;

    Vector q = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    for (const Vector& b : basis.vectors) axpy(-dot_conj(b, q), b, q);
    const double nq = norm(q);
    if (nq <= cutoff) continue;
    scale_vec(Complex(1.0 / nq, 0.0), q);

    for (Vector& w : work) axpy(-dot_conj(q, w), q, w);
    basis.vectors.push_back(std::move(q));
  }
  return basis;
}

SubspaceBasis nullspace(const Matrix& a, const Tolerance& tol) {
  SubspaceBasis basis;
  basis.ambient_dim = a.cols();
  if (a.cols() == 0) return basis;
  if (a.rows() == 0) {
    // No constraints: the whole space.
    for (std::size_t i = 0; i < a.cols(); ++i) {
      Vector e(a.cols(), Complex(0.0, 0.0));
      e[i] = Complex(1.0, 0.0);
      basis.vectors.push_back(std::move(e));
    }
    return basis;
  }

  const Matrix gram = a.adjoint() * a;
  const EigResult e = hermitian_eig(gram, tol);
  // Rank decision on the Gram eigenvalues; a cutoff on their square roots
  // would sit below the sqrt(machine eps) noise floor of the Gram route.
  const double lam_max = std::max(e.eigenvalues.empty() ? 0.0 : e.eigenvalues.back(), 0.0);
  const double cutoff = tol.rank_eps * std::max(1.0, lam_max);

  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
    if (e.eigenvalues[i] > cutoff) break;
    Vector v(a.cols());
    for (std::size_t r = 0; r < a.cols(); ++r) v[r] = e.vectors(r, i);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

SubspaceBasis subspace_intersect(const std::vector<SubspaceBasis>& bases,
                                 const Tolerance& tol) {
  if (bases.empty()) throw DimensionMismatch("subspace_intersect of empty family");
  const std::size_t n = bases.front().ambient_dim;
  for (const SubspaceBasis& b : bases)
    if (b.ambient_dim != n)
      throw DimensionMismatch("subspace_intersect: ambient dims differ");

  // Stack the complement projections 1 - P_i; the intersection is their
  // joint nullspace.
  Matrix stacked(bases.size() * n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t b = 0; b < bases.size(); ++b) {
    const Matrix c = id - bases[b].projection();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = c(i, j);
  }
  return nullspace(stacked, tol);
}

}  // namespace vna
