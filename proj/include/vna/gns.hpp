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

#include <span>
#include <vector>

#include "vna/algebra.hpp"
#include "vna/antilinear.hpp"
#include "vna/eig.hpp"
#include "vna/matrix.hpp"

namespace vna {

/// Faithful positive linear functional phi(x) = trace(density * x) on an
/// algebra.  The density lives on the ambient space and need not belong to
/// the algebra; phi only ever sees the values phi(x^H y).
struct Functional {
  AlgebraBasis algebra;
  Matrix density;

  Complex value(const Matrix& x) const { return (density * x).trace(); }
};

/// Modular apparatus on the GNS space: the adjoint involution s, its polar
/// parts delta (modular operator) and j (modular conjugation), and the
/// Hermitian generator log_delta used by flows and covariance tests.
struct ModularData {
  AntilinearOp s;
  Matrix delta;
  AntilinearOp j;
  Matrix log_delta;
  // Cached decomposition of log_delta; delta^{it} comes from unit-modulus
  // phases on these eigenvalues, so it is unitary by construction.
  EigResult log_delta_eig;

  Matrix delta_power_it(double t) const { return eig_unitary_exp(log_delta_eig, t); }
};

/// GNS space of (algebra, phi): coordinates are taken in an orthonormal
/// basis of the algebra under <x,y> = phi(x^H y) (conjugate-linear in the
/// first slot).  embed_map sends Hilbert-Schmidt coordinates to GNS
/// coordinates; rep[i] is the left-multiplication action of basis element i.
struct GnsData {
  Functional functional;
  std::size_t gns_dim = 0;
  Matrix embed_map;             // gram^{1/2}
  Matrix embed_inv;             // gram^{-1/2}
  std::vector<Matrix> rep;      // per algebra basis element
  std::vector<Matrix> rep_gns;  // per GNS basis element (whitened combos)
  Vector omega;                 // coordinates of 1
  ModularData modular;

  const AlgebraBasis& algebra() const { return functional.algebra; }

  /// GNS coordinates of x (x must lie in the algebra within match_eps).
  Vector embed(const Matrix& x, const Tolerance& tol) const;
  /// Algebra element with the given GNS coordinates.
  Matrix from_gns_coords(const Vector& xi) const;
  /// pi(x) for x in the algebra.
  Matrix rep_of(const Matrix& x, const Tolerance& tol) const;
  /// Inverse of rep on its image; *residual reports ||rep(result) - T||_F.
  Matrix rep_pullback(const Matrix& t, const Tolerance& tol,
                      double* residual = nullptr) const;
};

/// Errors: NotPositive (density not Hermitian PSD), NotFaithful (an
/// eigenvalue at or below rank_eps).
GnsData gns_construct(const Functional& phi, const Tolerance& tol);

/// Modular data of an already-built GNS space (recomputed from scratch;
/// gns_construct stores the same result).
ModularData modular_data(const GnsData& g, const Tolerance& tol);

struct FlowResult {
  Matrix value;
  double membership_residual = 0.0;
};

/// Modular flow sigma_t(x) = rep^{-1}(delta^{it} rep(x) delta^{-it}).
/// Throws FlowLeavesAlgebra when the pullback residual exceeds match_eps.
FlowResult modular_flow(const GnsData& g, double t, const Matrix& x,
                        const Tolerance& tol);

/// R_eta: x_phi |-> rep(x) eta.  Commutes with rep(M).
Matrix r_operator(const GnsData& g, const Vector& eta);

/// L_xi with L_xi eta = R_eta xi; lies in rep(M).
Matrix l_operator(const GnsData& g, const Vector& xi);

/// Residuals of the GNS and modular contracts, used by verification
/// reports and the acceptance suite.
struct ModularChecks {
  double gram_error = 0.0;            // <embed x, embed y> vs phi(x^H y)
  double rep_homomorphism = 0.0;      // rep(xy) vs rep(x)rep(y)
  double rep_star = 0.0;              // rep(x^H) vs rep(x)^H
  double cyclic_residual = 0.0;       // rep(M) omega spans H_phi
  double separating_residual = 0.0;   // rep(x) omega = 0 => x = 0
  double s_action = 0.0;              // S(embed b) vs embed(b^H), algebra basis
  double s_involution = 0.0;          // S o S = 1
  double recomposition = 0.0;         // S = J delta^{1/2}
  double j_involution = 0.0;          // J o J = 1
  double j_antiunitary = 0.0;         // coeff(J) unitary
  double delta_omega = 0.0;           // delta omega = omega
  double j_omega = 0.0;               // J omega = omega
  double jmj_in_commutant = 0.0;      // span{J rep(b) J} inside commutant
  double commutant_in_jmj = 0.0;      // and back
  bool commutant_span_checked = false;
  double flow_preserves_algebra = 0.0;  // delta^{it} rep(M) delta^{-it} = rep(M)
  double flow_invariance = 0.0;         // phi(sigma_t x) = phi(x)
};

/// Runs the full battery at the sampled flow times; the two-sided span
/// comparison with the commutant runs when gns_dim <= span_check_cap
/// (the vectorized eigenproblem grows as gns_dim^2).
ModularChecks modular_checks(const GnsData& g, std::span<const double> ts,
                             const Tolerance& tol,
                             std::size_t span_check_cap = 20);

/// rep(M) as an algebra on the GNS space.
AlgebraBasis rep_algebra(const GnsData& g, const Tolerance& tol);

}  // namespace vna
