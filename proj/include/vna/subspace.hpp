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
#include "vna/tolerance.hpp"

namespace vna {

/// Orthonormal spanning set of a subspace of C^ambient_dim.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;

  std::size_t dim() const { return vectors.size(); }

  /// Orthogonal projection onto the span.
  Matrix projection() const;

  /// ||P v - v|| for the projection onto the span; 0 iff v lies inside.
  double containment_residual(const Vector& v) const;
};

/// Orthonormal basis of span(vectors); dimension is the numerical rank at
/// rank_eps.  Empty input gives the empty basis.
SubspaceBasis orthonormalize(const std::vector<Vector>& vectors,
                             std::size_t ambient_dim, const Tolerance& tol);

/// Orthonormal basis of {v : a v = 0} at the rank_eps cutoff.
SubspaceBasis nullspace(const Matrix& a, const Tolerance& tol);

/// Intersection of subspaces, via the nullspace of stacked complement
/// projections.  Throws DimensionMismatch on inconsistent ambient dims.
SubspaceBasis subspace_intersect(const std::vector<SubspaceBasis>& bases,
                                 const Tolerance& tol);

}  // namespace vna
