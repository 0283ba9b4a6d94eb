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

#include <functional>
#include <vector>

#include "vna/antilinear.hpp"
#include "vna/matrix.hpp"
#include "vna/tolerance.hpp"

namespace vna {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix vectors;                   // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations (sweep budget
/// 100).  Throws NotHermitian when ||a - a^H||_F > match_eps and
/// NoConvergence when the sweep budget runs out.
EigResult hermitian_eig(const Matrix& a, const Tolerance& tol);

/// U f(Lambda) U^H from a prior decomposition.
Matrix eig_function(const EigResult& e, const std::function<double(double)>& f);

/// exp(i t H) for Hermitian H given by its decomposition; unitary by
/// construction (unit-modulus phases on eigenvalues).
Matrix eig_unitary_exp(const EigResult& e, double t);

Matrix hermitian_sqrt(const Matrix& a, const Tolerance& tol);
Matrix hermitian_inv_sqrt(const Matrix& a, const Tolerance& tol);
Matrix hermitian_log(const Matrix& a, const Tolerance& tol);

/// Singular values of a general matrix, descending, via the Gram matrix.
std::vector<double> singular_values(const Matrix& a, const Tolerance& tol);

/// Polar decomposition S = J * Delta^{1/2} of an invertible antilinear
/// operator: Delta = transpose(A) * conj(A) positive definite, J antiunitary.
/// Throws SingularS when the smallest singular value of A is below rank_eps.
struct AntilinearPolar {
  Matrix delta;
  AntilinearOp j;
};
AntilinearPolar antilinear_polar(const AntilinearOp& s, const Tolerance& tol);

}  // namespace vna
