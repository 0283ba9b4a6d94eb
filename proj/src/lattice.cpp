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

#include "vna/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace vna {
namespace {

void require_projections(const std::vector<Matrix>& projections,
                         const Tolerance& tol) {
  if (projections.empty())
    throw DimensionMismatch("meet of an empty projection family");
  const std::size_t n = projections.front().rows();
  for (std::size_t i = 0; i < projections.size(); ++i) {
    const Matrix& p = projections[i];
    if (!p.is_square() || p.rows() != n)
      throw DimensionMismatch("projection family has mixed dimensions");
    const double herm = p.hermitian_defect();
    const double idem = frobenius_distance(p * p, p);
    if (herm > tol.match_eps || idem > tol.match_eps)
      throw NotAProjection("input " + std::to_string(i) +
                               " is not a projection (defect " +
                               std::to_string(std::max(herm, idem)) + ")",
                           i);
  }
}

}  // namespace

MeetResult meet_exact(const std::vector<Matrix>& projections,
                      const Tolerance& tol) {
  require_projections(projections, tol);
  const std::size_t n = projections.front().rows();

  std::vector<SubspaceBasis> ranges;
  const Matrix id = Matrix::identity(n);
  for (const Matrix& p : projections) ranges.push_back(nullspace(id - p, tol));

  MeetResult out;
  out.method = MeetResult::Method::exact;
  out.meet = subspace_intersect(ranges, tol).projection();
  return out;
}

MeetResult meet_alternating(const std::vector<Matrix>& projections,
                            const Tolerance& tol) {
  require_projections(projections, tol);

  // One cycle = the full product e_1 e_2 ... e_k.
  Matrix cycle = projections.front();
  for (std::size_t i = 1; i < projections.size(); ++i)
    cycle = cycle * projections[i];

  MeetResult out;
  out.method = MeetResult::Method::alternating;
  Matrix p = cycle;
  double change = 0.0;
  for (out.iterations = 1; out.iterations <= tol.max_iter; ++out.iterations) {
    const Matrix next = cycle * p;
    change = frobenius_distance(next, p);
    p = next;
    if (change <= tol.iter_eps) break;
  }
  out.residual = change;
  if (change > tol.iter_eps)
    throw NoConvergence("alternating projections did not converge", change);

  // Snap to the nearest projection: spectral threshold at 1/2.  Iterates of
  // projection products have spectrum in [0,1] clustering at {0,1}.
  const Matrix sym = (p + p.adjoint()) * Complex(0.5, 0.0);
  const EigResult e = hermitian_eig(sym, tol);
  out.meet = eig_function(e, [](double x) { return x >= 0.5 ? 1.0 : 0.0; });
  return out;
}

AffiliationReport affiliation_intersection_check(
    const std::vector<AlgebraBasis>& algebras, const Matrix& t,
    const Tolerance& tol) {
  if (algebras.empty())
    throw DimensionMismatch("affiliation check needs at least one algebra");
  const std::size_t n = algebras.front().ambient_dim;
  if (t.rows() != n || t.cols() != n)
    throw DimensionMismatch("operator dimension does not match the algebras");

  AffiliationReport report;
  const double tscale = std::max(1.0, t.frobenius_norm());

  double hyp = 0.0;
  for (const AlgebraBasis& r : algebras) {
    const AlgebraBasis comm = commutant(r, tol);
    for (const Matrix& c : comm.basis)
      hyp = std::max(hyp, commutator_norm(t, c) / tscale);
  }
  report.hypothesis_residual = hyp;
  report.hypothesis_holds = hyp <= tol.match_eps;

  const AlgebraBasis meet_alg = intersect(algebras, tol);
  const AlgebraBasis meet_comm = commutant(meet_alg, tol);
  double conc = 0.0;
  for (const Matrix& c : meet_comm.basis)
    conc = std::max(conc, commutator_norm(t, c) / tscale);
  report.conclusion_residual = conc;
  report.conclusion_holds = conc <= tol.match_eps;

  report.implication_ok = !report.hypothesis_holds || report.conclusion_holds;
  return report;
}

TheoremReport theorem_check(const GnsData& g,
                            const std::vector<AlgebraBasis>& subalgebras,
                            const Tolerance& tol, bool strict) {
  if (subalgebras.empty())
    throw DimensionMismatch("theorem_check needs at least one subalgebra");

  TheoremReport report;
  std::vector<Matrix> projections;
  for (std::size_t i = 0; i < subalgebras.size(); ++i) {
    const CovarianceCertificate cert =
        is_modular_covariant(g, subalgebras[i], tol);
    if (!cert.covariant && strict)
      throw NotCovariantInput("subalgebra " + std::to_string(i) +
                                  " is not modular covariant",
                              i);
    report.input_certificates.push_back(cert);
    projections.push_back(jones_projection(g, subalgebras[i], tol).e);
  }
  report.all_inputs_covariant = true;
  for (const CovarianceCertificate& c : report.input_certificates)
    report.all_inputs_covariant = report.all_inputs_covariant && c.covariant;

  report.intersection = intersect(subalgebras, tol);
  report.intersection_certificate =
      is_modular_covariant(g, report.intersection, tol);

  report.jones_e = jones_projection(g, report.intersection, tol).e;
  report.meet = meet_exact(projections, tol);

  report.verdict_norm = frobenius_distance(report.jones_e, report.meet.meet);
  report.containment_residual =
      frobenius_distance(report.meet.meet * report.jones_e, report.jones_e);
  return report;
}

}  // namespace vna
