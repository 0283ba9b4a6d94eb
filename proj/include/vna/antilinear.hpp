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

#include "vna/matrix.hpp"

namespace vna {

/// Conjugate-linear operator, encoded by its coefficient matrix:
/// T(v) = coeff * conj(v).
///
/// Composition rules (inner product conjugate-linear in the first slot):
///   antilinear o antilinear  -> linear with matrix A1 * conj(A2)
///   antilinear o linear L    -> antilinear with coefficient A * conj(L)
///   linear L o antilinear    -> antilinear with coefficient L * A
///   adjoint                  -> antilinear with coefficient transpose(A)
struct AntilinearOp {
  Matrix coeff;

  AntilinearOp() = default;
  explicit AntilinearOp(Matrix a) : coeff(std::move(a)) {}

  Vector apply(const Vector& v) const {
    Vector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = std::conj(v[i]);
    return coeff.apply(c);
  }

  AntilinearOp adjoint() const { return AntilinearOp(coeff.transpose()); }

  /// this o other, both antilinear: a linear map.
  Matrix compose_antilinear(const AntilinearOp& other) const {
    return coeff * other.coeff.conj();
  }

  /// this o (linear map): antilinear.
  AntilinearOp compose_linear(const Matrix& linear) const {
    return AntilinearOp(coeff * linear.conj());
  }

  /// (linear map) o this: antilinear.
  AntilinearOp pre_compose_linear(const Matrix& linear) const {
    return AntilinearOp(linear * coeff);
  }
};

}  // namespace vna
