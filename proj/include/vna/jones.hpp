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

#include <cstdint>
#include <optional>

#include "vna/gns.hpp"

namespace vna {

/// Subalgebra N of M together with its GNS subspace H_N = closure(N omega),
/// the Jones projection e onto it, the covariance verdict, and (when it
/// exists) the phi-preserving conditional expectation in coordinates:
/// expectation maps M-coordinates to N-coordinates (dim N x dim M).
struct JonesData {
  AlgebraBasis sub;
  SubspaceBasis h_n;
  Matrix e;
  bool covariant = false;
  std::optional<Matrix> expectation;
};

struct CovarianceCertificate {
  bool covariant = false;
  double derivation_residual = 0.0;  // [log delta, rep(x)] pulled back into N
  double flow_residual = 0.0;        // sampled sigma_t(x) against N
  double pullback_residual = 0.0;    // commutator must lie in rep(M)
};

/// span{embed(x) : x in N}; throws NotSubalgebra when N is not inside M.
SubspaceBasis subspace_hn(const GnsData& g, const AlgebraBasis& n,
                          const Tolerance& tol);

/// Jones projection onto H_N (covariance flag filled in, expectation not).
JonesData jones_projection(const GnsData& g, const AlgebraBasis& n,
                           const Tolerance& tol);

/// Modular covariance via the generator derivation criterion, cross-checked
/// by sampled flow; throws Inconsistent when the two tests disagree.
CovarianceCertificate is_modular_covariant(const GnsData& g,
                                           const AlgebraBasis& n,
                                           const Tolerance& tol);

/// The unique map determined by rep(E(x)) e = e rep(x) e and e omega = omega.
/// Throws NotCovariant when the identity is unsatisfiable within tolerance.
Matrix conditional_expectation(const GnsData& g, const JonesData& jd,
                               const Tolerance& tol);

/// Apply an expectation map (N-coords x M-coords) to an element of M.
Matrix apply_expectation(const GnsData& g, const JonesData& jd,
                         const Matrix& expectation, const Matrix& x,
                         const Tolerance& tol);

struct ExpectationReport {
  double idempotent_err = 0.0;
  double bimodule_err = 0.0;
  bool positivity_flag = true;
  double phi_invariance_err = 0.0;
  double range_err = 0.0;
};

/// Defining properties of a conditional expectation, evaluated numerically.
ExpectationReport verify_expectation(const GnsData& g, const JonesData& jd,
                                     const Matrix& expectation,
                                     const Tolerance& tol);

struct LemmaReport {
  bool equal = false;
  double forward_residual = 0.0;   // commutant-with-e part of M inside N
  double backward_residual = 0.0;  // N inside the commutant-with-e part
};

/// rep(N) = rep(M) /\ {e}' as a two-sided span equality.
LemmaReport lemma_eprime_check(const GnsData& g, const JonesData& jd,
                               const Tolerance& tol);

struct PropLxiReport {
  double max_e_commutation = 0.0;       // e L_xi = L_xi e
  double max_commutant_commutation = 0.0;  // L_xi against commutant(rep(N))
  double max_exchange_residual = 0.0;   // e R_eta e = R_{e eta} e
  std::size_t samples = 0;
};

/// Affiliation of L_xi with rep(N) for xi in H_N, via random samples.
PropLxiReport prop_lxi_check(const GnsData& g, const JonesData& jd,
                             std::size_t samples, const Tolerance& tol,
                             std::uint64_t seed = 0x4c7869ULL);

}  // namespace vna
