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

#include <doctest.h>

#include <cmath>

#include "vna/lattice.hpp"
#include "vna/rng.hpp"

using namespace vna;

namespace {
const Tolerance tol;

Matrix line_projection(const Vector& v) {
  return Matrix::outer(v, v) * Complex(1.0 / norm_sq(v), 0.0);
}

// Two planes in C^3 sharing the e3 axis, meeting at angle theta.
std::pair<Matrix, Matrix> planes_at_angle(double theta) {
  const Vector e1 = {Complex(1, 0), Complex(0, 0), Complex(0, 0)};
  const Vector e2 = {Complex(0, 0), Complex(1, 0), Complex(0, 0)};
  const Vector e3 = {Complex(0, 0), Complex(0, 0), Complex(1, 0)};
  const Vector tilted = {Complex(std::cos(theta), 0), Complex(std::sin(theta), 0),
                         Complex(0, 0)};
  const Matrix p1 = line_projection(e1) + line_projection(e3);
  const Matrix p2 = line_projection(tilted) + line_projection(e3);
  return {p1, p2};
}
}  // namespace

TEST_CASE("meet_exact: single, orthogonal, coordinate planes") {
  SplitMix64 rng(0x9137ULL);
  const Vector u = random_gaussian_vector(rng, 3);
  const Matrix p = line_projection(u);
  CHECK(frobenius_distance(meet_exact({p}, tol).meet, p) <= 1e-9);

  const Vector a = {Complex(1, 0), Complex(0, 0)};
  const Vector b = {Complex(0, 0), Complex(1, 0)};
  const MeetResult zero = meet_exact({line_projection(a), line_projection(b)}, tol);
  CHECK(zero.meet.frobenius_norm() <= 1e-10);

  auto unit4 = [](std::size_t i) {
    Vector e(4, Complex(0, 0));
    e[i] = 1.0;
    return e;
  };
  const Matrix p12 = line_projection(unit4(0)) + line_projection(unit4(1));
  const Matrix p23 = line_projection(unit4(1)) + line_projection(unit4(2));
  const MeetResult m = meet_exact({p12, p23}, tol);
  CHECK(frobenius_distance(m.meet, line_projection(unit4(1))) <= 1e-9);
}

TEST_CASE("meet_exact rejects non-projections with the offender index") {
  const Matrix good = Matrix::identity(2);
  Matrix bad(2, 2);
  bad(0, 1) = 1.0;
  try {
    meet_exact({good, bad}, tol);
    FAIL("expected NotAProjection");
  } catch (const NotAProjection& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("meet_alternating: commuting family converges in one cycle") {
  auto unit4 = [](std::size_t i) {
    Vector e(4, Complex(0, 0));
    e[i] = 1.0;
    return e;
  };
  const Matrix p12 = line_projection(unit4(0)) + line_projection(unit4(1));
  const Matrix p13 = line_projection(unit4(0)) + line_projection(unit4(2));
  const MeetResult m = meet_alternating({p12, p13}, tol);
  CHECK(m.iterations == 1);
  CHECK(frobenius_distance(m.meet, line_projection(unit4(0))) <= 1e-9);
}

TEST_CASE("meet_alternating agrees with meet_exact across angles") {
  for (double theta : {0.3, 0.7, 1.1}) {
    const auto [p1, p2] = planes_at_angle(theta);
    const MeetResult exact = meet_exact({p1, p2}, tol);
    const MeetResult alt = meet_alternating({p1, p2}, tol);
    CHECK(frobenius_distance(exact.meet, alt.meet) <= 1e-6);
    CHECK(alt.iterations <= tol.max_iter);
  }
}

TEST_CASE("meet_alternating iteration count drops as the angle opens") {
  std::vector<std::size_t> iters;
  for (double theta : {0.3, 0.6, 0.9, 1.2, 1.5}) {
    const auto [p1, p2] = planes_at_angle(theta);
    iters.push_back(meet_alternating({p1, p2}, tol).iterations);
  }
  for (std::size_t i = 1; i < iters.size(); ++i) CHECK(iters[i] <= iters[i - 1]);
  // The cos^2(theta) contraction rate: the smallest angle needs visibly
  // more cycles than the widest.
  CHECK(iters.front() > iters.back());
}

TEST_CASE("meet_alternating reports NoConvergence on near-touching planes") {
  const auto [p1, p2] = planes_at_angle(1e-4);
  CHECK_THROWS_AS(meet_alternating({p1, p2}, tol), NoConvergence);
}

TEST_CASE("meet is insensitive to the family order") {
  SplitMix64 rng(0x0derULL);
  std::vector<Matrix> ps;
  for (int k = 0; k < 3; ++k) {
    std::vector<Vector> vs;
    for (int i = 0; i < 3; ++i) vs.push_back(random_gaussian_vector(rng, 4));
    ps.push_back(orthonormalize(vs, 4, tol).projection());
  }
  const Matrix abc = meet_exact({ps[0], ps[1], ps[2]}, tol).meet;
  const Matrix cab = meet_exact({ps[2], ps[0], ps[1]}, tol).meet;
  CHECK(frobenius_distance(abc, cab) <= 1e-8);

  // Ranges nest below every input.
  for (const Matrix& p : ps)
    CHECK(frobenius_distance(p * abc, abc) <= 1e-8);
}

TEST_CASE("affiliation check: trivial, constructed, vacuous") {
  const AlgebraBasis left =
      AlgebraBasis::tensor_left(AlgebraBasis::full(2), 2, tol);
  const AlgebraBasis diag4 = AlgebraBasis::diagonal(4);

  // t = 1 commutes with everything.
  const AffiliationReport triv =
      affiliation_intersection_check({left, diag4}, Matrix::identity(4), tol);
  CHECK(triv.hypothesis_holds);
  CHECK(triv.conclusion_holds);
  CHECK(triv.implication_ok);

  // t from the intersected algebra satisfies the hypothesis by construction.
  const AlgebraBasis meet = intersect({left, diag4}, tol);
  SplitMix64 rng(0xaff1ULL);
  Vector coords(meet.dim());
  for (auto& c : coords) c = rng.cgaussian();
  const AffiliationReport built = affiliation_intersection_check(
      {left, diag4}, meet.from_coords(coords), tol);
  CHECK(built.hypothesis_holds);
  CHECK(built.conclusion_holds);
  CHECK(built.hypothesis_residual <= 1e-9);
  CHECK(built.conclusion_residual <= 1e-9);

  // A random operator misses the hypothesis; the implication is vacuous.
  const AffiliationReport vac = affiliation_intersection_check(
      {left, diag4}, random_gaussian_matrix(rng, 4, 4), tol);
  CHECK_FALSE(vac.hypothesis_holds);
  CHECK(vac.implication_ok);
}

TEST_CASE("theorem_check: the single-member family {M}") {
  const GnsData g = gns_construct(
      {AlgebraBasis::full(2), Matrix::diagonal({2.0 / 3, 1.0 / 3})}, tol);
  const TheoremReport r = theorem_check(g, {AlgebraBasis::full(2)}, tol);
  CHECK(r.all_inputs_covariant);
  CHECK(frobenius_distance(r.jones_e, Matrix::identity(4)) <= 1e-9);
  CHECK(r.verdict_norm <= 1e-9);
  CHECK(r.containment_residual <= 1e-9);
}

TEST_CASE("theorem_check: tensor legs meet in the scalars") {
  // M = M_2 (x) M_2 with a product state; N1 = M_2 (x) 1, N2 = 1 (x) M_2.
  std::vector<double> eigs;
  for (double a : {2.0 / 3, 1.0 / 3})
    for (double b : {3.0 / 5, 2.0 / 5}) eigs.push_back(a * b);
  const GnsData g =
      gns_construct({AlgebraBasis::full(4), Matrix::diagonal(eigs)}, tol);

  const AlgebraBasis n1 = AlgebraBasis::tensor_left(AlgebraBasis::full(2), 2, tol);
  const AlgebraBasis n2 = AlgebraBasis::tensor_right(2, AlgebraBasis::full(2), tol);
  const TheoremReport r = theorem_check(g, {n1, n2}, tol);

  CHECK(r.all_inputs_covariant);
  CHECK(r.intersection_certificate.covariant);
  CHECK(r.intersection.dim() == 1);
  // e = f = the rank-one projection onto the vacuum line.
  CHECK(r.jones_e.trace().real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.verdict_norm <= 1e-8);
  CHECK(r.containment_residual <= 1e-8);
}

TEST_CASE("theorem_check: diagonal-tensor family") {
  std::vector<double> eigs;
  for (double a : {2.0 / 3, 1.0 / 3})
    for (double b : {3.0 / 5, 2.0 / 5}) eigs.push_back(a * b);
  const GnsData g =
      gns_construct({AlgebraBasis::full(4), Matrix::diagonal(eigs)}, tol);

  const AlgebraBasis n1 =
      AlgebraBasis::tensor_left(AlgebraBasis::diagonal(2), 2, tol);
  const AlgebraBasis n2 =
      AlgebraBasis::tensor_right(2, AlgebraBasis::diagonal(2), tol);
  const TheoremReport r = theorem_check(g, {n1, n2}, tol);

  CHECK(r.all_inputs_covariant);
  CHECK(equal(r.intersection, AlgebraBasis::diagonal(4), tol));
  CHECK(r.verdict_norm <= 1e-8);
}

TEST_CASE("theorem_check: strict mode rejects non-covariant input") {
  const GnsData g = gns_construct(
      {AlgebraBasis::full(2), Matrix::diagonal({2.0 / 3, 1.0 / 3})}, tol);
  const Matrix h = Matrix::from_rows(
      {{Complex(1 / std::sqrt(2.0), 0), Complex(1 / std::sqrt(2.0), 0)},
       {Complex(1 / std::sqrt(2.0), 0), Complex(-1 / std::sqrt(2.0), 0)}});
  const AlgebraBasis rotated =
      AlgebraBasis::conjugated(AlgebraBasis::diagonal(2), h, tol);

  try {
    theorem_check(g, {AlgebraBasis::diagonal(2), rotated}, tol, true);
    FAIL("expected NotCovariantInput");
  } catch (const NotCovariantInput& e) {
    CHECK(e.index == 1);
  }

  // Permissive mode still reports the rigidity equality.
  const TheoremReport r =
      theorem_check(g, {AlgebraBasis::diagonal(2), rotated}, tol, false);
  CHECK_FALSE(r.all_inputs_covariant);
  CHECK(r.verdict_norm <= 1e-8);
  CHECK(r.containment_residual <= 1e-8);
}
