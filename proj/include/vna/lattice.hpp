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

#include "vna/jones.hpp"

namespace vna {

/// Meet of a projection family: the projection onto the intersection of
/// the ranges.
struct MeetResult {
  Matrix meet;
  enum class Method { exact, alternating } method = Method::exact;
  std::size_t iterations = 0;  // 0 for the exact method
  double residual = 0.0;
};

/// Exact meet via subspace intersection of the ranges.
/// Throws NotAProjection (with the offender's index) on invalid input.
MeetResult meet_exact(const std::vector<Matrix>& projections,
                      const Tolerance& tol);

/// Constructive meet: cyclic products e_1 e_2 ... e_k iterated until the
/// change per cycle drops below iter_eps, then snapped to the nearest
/// projection (spectral threshold 1/2).  Throws NoConvergence past
/// max_iter cycles.
MeetResult meet_alternating(const std::vector<Matrix>& projections,
                            const Tolerance& tol);

/// Bounded finite-dimensional form of the affiliation statement: when t
/// commutes with every commutant(R_i), it commutes with the commutant of
/// the intersection.  Hypothesis failure is reported, never treated as a
/// counterexample.
struct AffiliationReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool implication_ok = true;  // hypothesis => conclusion
  double hypothesis_residual = 0.0;
  double conclusion_residual = 0.0;
};
AffiliationReport affiliation_intersection_check(
    const std::vector<AlgebraBasis>& algebras, const Matrix& t,
    const Tolerance& tol);

/// Full intersection-of-Jones-projections verdict for a subalgebra family:
/// covariance of each N_i and of N = /\ N_i, the Jones projection e of N
/// against the meet f of the e_i, and the unconditional containment
/// range(e) inside range(f).
struct TheoremReport {
  std::vector<CovarianceCertificate> input_certificates;
  CovarianceCertificate intersection_certificate;
  bool all_inputs_covariant = false;
  AlgebraBasis intersection;
  Matrix jones_e;
  MeetResult meet;
  double verdict_norm = 0.0;          // ||e - f||_F
  double containment_residual = 0.0;  // ||f e - e||_F  (e <= f always)
};

/// strict = true throws NotCovariantInput when some N_i fails covariance;
/// the default permissive mode runs anyway and flags it (the equality is
/// a finite-dimensional rigidity fact regardless).
TheoremReport theorem_check(const GnsData& g,
                            const std::vector<AlgebraBasis>& subalgebras,
                            const Tolerance& tol, bool strict = false);

}  // namespace vna
