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

#include "vna/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "vna/eig.hpp"

namespace vna {
namespace {

Vector vec_of(const Matrix& m) { return m.storage(); }

Matrix mat_of(const Vector& v, std::size_t n) {
  return Matrix::from_data(n, n, v);
}

std::vector<Vector> vecs_of(const std::vector<Matrix>& mats) {
  std::vector<Vector> out;
  out.reserve(mats.size());
  for (const Matrix& m : mats) out.push_back(vec_of(m));
  return out;
}

// Adds kron(a, b) into dest.
void add_kron(Matrix& dest, const Matrix& a, const Matrix& b, double sign) {
  const std::size_t br = b.rows(), bc = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = sign * a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l)
          dest(i * br + k, j * bc + l) += aij * b(k, l);
    }
}

}  // namespace

Vector AlgebraBasis::hs_coords(const Matrix& x) const {
  Vector c(basis.size());
  const Vector vx = vec_of(x);
  for (std::size_t i = 0; i < basis.size(); ++i)
    c[i] = dot_conj(vec_of(basis[i]), vx);
  return c;
}

Matrix AlgebraBasis::from_coords(const Vector& c) const {
  if (c.size() != basis.size())
    throw DimensionMismatch("coordinate count != algebra dimension");
  Vector acc(ambient_dim * ambient_dim, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    axpy(c[i], basis[i].storage(), acc);
  return mat_of(acc, ambient_dim);
}

SubspaceBasis AlgebraBasis::span() const {
  SubspaceBasis s;
  s.ambient_dim = ambient_dim * ambient_dim;
  for (const Matrix& m : basis) s.vectors.push_back(vec_of(m));
  return s;
}

AlgebraBasis AlgebraBasis::scalars(std::size_t n) {
  AlgebraBasis a;
  a.ambient_dim = n;
  a.contains_identity = true;
  a.basis.push_back(Matrix::identity(n) * Complex(1.0 / std::sqrt(double(n)), 0.0));
  return a;
}

AlgebraBasis AlgebraBasis::full(std::size_t n) {
  AlgebraBasis a;
  a.ambient_dim = n;
  a.contains_identity = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = Complex(1.0, 0.0);
      a.basis.push_back(std::move(e));
    }
  return a;
}

AlgebraBasis AlgebraBasis::diagonal(std::size_t n) {
  AlgebraBasis a;
  a.ambient_dim = n;
  a.contains_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e(n, n);
    e(i, i) = Complex(1.0, 0.0);
    a.basis.push_back(std::move(e));
  }
  return a;
}

AlgebraBasis AlgebraBasis::tensor_left(const AlgebraBasis& a, std::size_t m,
                                       const Tolerance& tol) {
  std::vector<Matrix> span;
  const Matrix idm = Matrix::identity(m);
  for (const Matrix& b : a.basis) span.push_back(Matrix::kron(b, idm));
  return from_span(span, a.ambient_dim * m, tol);
}

AlgebraBasis AlgebraBasis::tensor_right(std::size_t m, const AlgebraBasis& a,
                                        const Tolerance& tol) {
  std::vector<Matrix> span;
  const Matrix idm = Matrix::identity(m);
  for (const Matrix& b : a.basis) span.push_back(Matrix::kron(idm, b));
  return from_span(span, a.ambient_dim * m, tol);
}

AlgebraBasis AlgebraBasis::conjugated(const AlgebraBasis& a, const Matrix& u,
                                      const Tolerance& tol) {
  const Matrix uh = u.adjoint();
  std::vector<Matrix> span;
  for (const Matrix& b : a.basis) span.push_back(u * b * uh);
  return from_span(span, a.ambient_dim, tol);
}

AlgebraBasis AlgebraBasis::from_span(const std::vector<Matrix>& span,
                                     std::size_t n, const Tolerance& tol) {
  for (const Matrix& m : span)
    if (m.rows() != n || m.cols() != n)
      throw DimensionMismatch("span element has wrong shape");
  const SubspaceBasis sb = orthonormalize(vecs_of(span), n * n, tol);
  AlgebraBasis a;
  a.ambient_dim = n;
  for (const Vector& v : sb.vectors) a.basis.push_back(mat_of(v, n));
  const AlgebraInvariants inv = algebra_invariants(a, tol);
  const double worst = std::max({inv.adjoint_closure, inv.product_closure,
                                 inv.identity_residual});
  if (worst > tol.match_eps)
    throw Error("span is not a unital *-algebra (closure residual " +
                std::to_string(worst) + ")");
  a.contains_identity = true;
  return a;
}

AlgebraBasis generate(const std::vector<Matrix>& generators, std::size_t n,
                      const Tolerance& tol) {
  std::vector<Matrix> span;
  span.push_back(Matrix::identity(n));
  for (const Matrix& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw DimensionMismatch("generator has wrong shape");
    g.validate_finite("generator");
    span.push_back(g);
    span.push_back(g.adjoint());
  }

  SubspaceBasis sb = orthonormalize(vecs_of(span), n * n, tol);
  // Alternate multiply-and-close rounds until the dimension stabilizes;
  // bounded by the ambient dimension n^2.
  for (std::size_t round = 0; round <= n * n; ++round) {
    std::vector<Matrix> mats;
    mats.reserve(sb.dim() * (sb.dim() + 2));
    for (const Vector& v : sb.vectors) mats.push_back(mat_of(v, n));
    const std::size_t d = mats.size();
    std::vector<Matrix> next = mats;
    for (std::size_t i = 0; i < d; ++i) {
      next.push_back(mats[i].adjoint());
      for (std::size_t j = 0; j < d; ++j) next.push_back(mats[i] * mats[j]);
    }
    SubspaceBasis grown = orthonormalize(vecs_of(next), n * n, tol);
    if (grown.dim() == sb.dim()) break;
    sb = std::move(grown);
  }

  std::vector<Matrix> final_span;
  for (const Vector& v : sb.vectors) final_span.push_back(mat_of(v, n));
  return AlgebraBasis::from_span(final_span, n, tol);
}

AlgebraBasis commutant(const AlgebraBasis& a, const Tolerance& tol) {
  const std::size_t n = a.ambient_dim;
  const std::size_t n2 = n * n;
  // Gram of the stacked commutator maps C_j = b_j (x) 1 - 1 (x) b_j^T
  // (row-major vec convention):
  //   sum_j (b_j^H b_j)(x)1 - b_j^H(x)b_j^T - b_j(x)conj(b_j) + 1(x)(conj(b_j) b_j^T)
  Matrix gram(n2, n2);
  const Matrix id = Matrix::identity(n);
  for (const Matrix& b : a.basis) {
    const Matrix bh = b.adjoint();
    const Matrix bt = b.transpose();
    const Matrix bc = b.conj();
    add_kron(gram, bh * b, id, 1.0);
    add_kron(gram, bh, bt, -1.0);
    add_kron(gram, b, bc, -1.0);
    add_kron(gram, id, bc * bt, 1.0);
  }

  const EigResult e = hermitian_eig(gram, tol);
  // Kernel decision on the Gram eigenvalues (see nullspace).
  const double lam_max =
      std::max(e.eigenvalues.empty() ? 0.0 : e.eigenvalues.back(), 0.0);
  const double cutoff = tol.rank_eps * std::max(1.0, lam_max);

  std::vector<Matrix> span;
  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
    if (e.eigenvalues[i] > cutoff) break;
    Vector v(n2);
    for (std::size_t r = 0; r < n2; ++r) v[r] = e.vectors(r, i);
    span.push_back(mat_of(v, n));
  }
  return AlgebraBasis::from_span(span, n, tol);
}

AlgebraBasis intersect(const std::vector<AlgebraBasis>& algebras,
                       const Tolerance& tol) {
  if (algebras.empty()) throw DimensionMismatch("intersect of empty family");
  const std::size_t n = algebras.front().ambient_dim;
  std::vector<SubspaceBasis> spans;
  for (const AlgebraBasis& a : algebras) {
    if (a.ambient_dim != n) throw DimensionMismatch("intersect: ambient dims differ");
    spans.push_back(a.span());
  }
  const SubspaceBasis meet = subspace_intersect(spans, tol);
  std::vector<Matrix> span;
  for (const Vector& v : meet.vectors) span.push_back(mat_of(v, n));
  return AlgebraBasis::from_span(span, n, tol);
}

ContainsResult contains(const AlgebraBasis& a, const Matrix& x,
                        const Tolerance& tol) {
  if (x.rows() != a.ambient_dim || x.cols() != a.ambient_dim)
    throw DimensionMismatch("contains: wrong matrix shape");
  ContainsResult r;
  Vector rest = vec_of(x);
  for (const Matrix& b : a.basis) axpy(-dot_conj(vec_of(b), rest), vec_of(b), rest);
  for (const Matrix& b : a.basis) axpy(-dot_conj(vec_of(b), rest), vec_of(b), rest);
  r.residual = norm(rest);
  r.contained = r.residual <= tol.match_eps * std::max(1.0, x.frobenius_norm());
  return r;
}

bool equal(const AlgebraBasis& a, const AlgebraBasis& b, const Tolerance& tol) {
  if (a.ambient_dim != b.ambient_dim)
    throw DimensionMismatch("equal: ambient dims differ");
  if (a.dim() != b.dim()) return false;
  for (const Matrix& x : a.basis)
    if (!contains(b, x, tol).contained) return false;
  for (const Matrix& x : b.basis)
    if (!contains(a, x, tol).contained) return false;
  return true;
}

AlgebraInvariants algebra_invariants(const AlgebraBasis& a, const Tolerance& tol) {
  AlgebraInvariants inv;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Complex g = dot_conj(vec_of(a.basis[i]), vec_of(a.basis[j]));
      const double expect = i == j ? 1.0 : 0.0;
      inv.orthonormality = std::max(inv.orthonormality, std::abs(g - expect));
    }
  for (std::size_t i = 0; i < d; ++i) {
    inv.adjoint_closure = std::max(
        inv.adjoint_closure, contains(a, a.basis[i].adjoint(), tol).residual);
    for (std::size_t j = 0; j < d; ++j)
      inv.product_closure =
          std::max(inv.product_closure,
                   contains(a, a.basis[i] * a.basis[j], tol).residual);
  }
  inv.identity_residual =
      contains(a, Matrix::identity(a.ambient_dim), tol).residual;
  return inv;
}

}  // namespace vna
