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

#include <vector>

#include "vna/matrix.hpp"
#include "vna/subspace.hpp"
#include "vna/tolerance.hpp"

namespace vna {

/// Unital *-subalgebra of the n x n matrices, stored as a basis that is
/// orthonormal under the Hilbert-Schmidt inner product trace(x^H y).
struct AlgebraBasis {
  std::size_t ambient_dim = 0;
  std::vector<Matrix> basis;
  bool contains_identity = false;

  std::size_t dim() const { return basis.size(); }

  /// Hilbert-Schmidt coordinates of x against the basis (least squares).
  Vector hs_coords(const Matrix& x) const;
  /// Linear combination of basis elements.
  Matrix from_coords(const Vector& c) const;
  /// The span as vectors in C^(n^2) (row-major flattening).
  SubspaceBasis span() const;

  /// Scalars C*1.
  static AlgebraBasis scalars(std::size_t n);
  /// Full matrix algebra M_n (matrix units are HS-orthonormal).
  static AlgebraBasis full(std::size_t n);
  /// Diagonal matrices.
  static AlgebraBasis diagonal(std::size_t n);
  /// A (x) 1_m on C^(n*m), resp. 1_m (x) A, for A on C^n.
  static AlgebraBasis tensor_left(const AlgebraBasis& a, std::size_t m,
                                  const Tolerance& tol);
  static AlgebraBasis tensor_right(std::size_t m, const AlgebraBasis& a,
                                   const Tolerance& tol);
  /// u A u^H for a unitary u.
  static AlgebraBasis conjugated(const AlgebraBasis& a, const Matrix& u,
                                 const Tolerance& tol);

  /// Orthonormalize a spanning set of matrices into an AlgebraBasis and
  /// verify the *-algebra invariants (adjoint/product closure, identity).
  static AlgebraBasis from_span(const std::vector<Matrix>& span, std::size_t n,
                                const Tolerance& tol);
};

struct ContainsResult {
  bool contained = false;
  double residual = 0.0;
};

/// Smallest unital *-subalgebra containing the generators.
AlgebraBasis generate(const std::vector<Matrix>& generators, std::size_t n,
                      const Tolerance& tol);

/// Commutant {x : xb = bx for all basis b}, computed as the joint nullspace
/// of the commutator maps on the vectorized n^2-dimensional space.
AlgebraBasis commutant(const AlgebraBasis& a, const Tolerance& tol);

/// Intersection of the spans (again a unital *-algebra).
AlgebraBasis intersect(const std::vector<AlgebraBasis>& algebras,
                       const Tolerance& tol);

/// Membership via least-squares residual against the span.
ContainsResult contains(const AlgebraBasis& a, const Matrix& x,
                        const Tolerance& tol);

/// Same span: equal dimensions plus mutual containment of basis elements.
bool equal(const AlgebraBasis& a, const AlgebraBasis& b, const Tolerance& tol);

/// Residuals of the AlgebraBasis invariants; all ~0 for a valid algebra.
struct AlgebraInvariants {
  double orthonormality = 0.0;
  double adjoint_closure = 0.0;
  double product_closure = 0.0;
  double identity_residual = 0.0;
};
AlgebraInvariants algebra_invariants(const AlgebraBasis& a, const Tolerance& tol);

}  // namespace vna
