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

#include "oracles.hpp"
#include "vna/gns.hpp"
#include "vna/rng.hpp"

using namespace vna;

namespace {
const Tolerance tol;

Matrix unit_e(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

GnsData qubit_state() {
  return gns_construct(
      {AlgebraBasis::full(2), Matrix::diagonal({2.0 / 3, 1.0 / 3})}, tol);
}
}  // namespace

TEST_CASE("gns_construct: scalars under the trace") {
  const GnsData g =
      gns_construct({AlgebraBasis::scalars(2), Matrix::identity(2)}, tol);
  CHECK(g.gns_dim == 1);
  CHECK(frobenius_distance(g.rep[0] * g.rep[0],
                           Matrix::identity(1) * g.rep[0](0, 0) * g.rep[0](0, 0)) <
        1e-12);
  CHECK(norm_sq(g.omega) == doctest::Approx(2.0));  // phi(1) = tr(1) = 2
}

TEST_CASE("gns_construct: tracial qubit state") {
  const GnsData g = gns_construct(
      {AlgebraBasis::full(2), Matrix::identity(2) * Complex(0.5, 0.0)}, tol);
  CHECK(g.gns_dim == 4);
  // <x, y> = tr(x^H y) / 2 on matrix units: diagonal gram with entries 1/2.
  for (std::size_t i = 0; i < 4; ++i) {
    const Vector e = g.embed(g.algebra().basis[i], tol);
    CHECK(norm_sq(e) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("gns_construct: qubit gram matrix from direct evaluation") {
  const GnsData g = qubit_state();
  CHECK(g.gns_dim == 4);
  // phi(E_ij^H E_ij) = phi(E_jj) = rho_j; basis order E11, E12, E21, E22.
  const double expected[] = {2.0 / 3, 1.0 / 3, 2.0 / 3, 1.0 / 3};
  for (std::size_t i = 0; i < 4; ++i) {
    const Vector e = g.embed(g.algebra().basis[i], tol);
    CHECK(norm_sq(e) == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  // Off-diagonal gram entries vanish for a diagonal density.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      const Complex v = dot_conj(g.embed(g.algebra().basis[i], tol),
                                 g.embed(g.algebra().basis[j], tol));
      CHECK(std::abs(v) < 1e-12);
    }
}

TEST_CASE("gns_construct rejects bad densities") {
  CHECK_THROWS_AS(
      gns_construct({AlgebraBasis::full(2), Matrix::diagonal({1.0, 0.0})}, tol),
      NotFaithful);
  CHECK_THROWS_AS(
      gns_construct({AlgebraBasis::full(2), Matrix::diagonal({1.0, -0.5})}, tol),
      NotPositive);
  CHECK_THROWS_AS(
      gns_construct({AlgebraBasis::full(2), unit_e(2, 0, 1) + unit_e(2, 0, 0)}, tol),
      NotPositive);
}

TEST_CASE("gns invariants: inner product, homomorphism, cyclic/separating") {
  SplitMix64 rng(0x6a5bULL);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Matrix u = random_unitary(rng, n);
    const auto w = dirichlet_weights(rng, n, 1e-3);
    const Matrix rho = u * Matrix::diagonal(w) * u.adjoint();
    const GnsData g = gns_construct({AlgebraBasis::full(n), rho}, tol);

    const ModularChecks c = modular_checks(g, std::vector<double>{}, tol);
    CHECK(c.gram_error <= 1e-10);
    CHECK(c.rep_homomorphism <= 1e-10);
    CHECK(c.rep_star <= 1e-10);
    CHECK(c.cyclic_residual == 0.0);
    CHECK(c.separating_residual == 0.0);
  }
}

TEST_CASE("modular_data: tracial state is fixed") {
  const GnsData g = gns_construct(
      {AlgebraBasis::full(2), Matrix::identity(2) * Complex(0.5, 0.0)}, tol);
  CHECK(frobenius_distance(g.modular.delta, Matrix::identity(4)) < 1e-10);
  // S is already antiunitary, so J equals S.
  CHECK(frobenius_distance(g.modular.j.coeff, g.modular.s.coeff) < 1e-10);
}

TEST_CASE("modular_data: qubit spectrum and analytic oracle") {
  const GnsData g = qubit_state();
  const EigResult e = hermitian_eig(g.modular.delta, tol);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(e.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(e.eigenvalues[3] == doctest::Approx(2.0).epsilon(1e-10));

  // Independent transport of Delta(x) = rho x rho^{-1} and
  // J(x) = rho^{1/2} x^H rho^{-1/2}.
  CHECK(frobenius_distance(g.modular.delta, testing::oracle_delta_full(g, tol)) <=
        1e-10);
  CHECK(frobenius_distance(g.modular.j.coeff,
                           testing::oracle_j_coeff_full(g, tol)) <= 1e-10);
}

TEST_CASE("modular_data: oracle agreement on random full-algebra states") {
  SplitMix64 rng(0x0bacULL);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Matrix u = random_unitary(rng, n);
    const auto w = dirichlet_weights(rng, n, 1e-3);
    const Matrix rho = u * Matrix::diagonal(w) * u.adjoint();
    const GnsData g = gns_construct({AlgebraBasis::full(n), rho}, tol);
    CHECK(frobenius_distance(g.modular.delta,
                             testing::oracle_delta_full(g, tol)) <= 1e-8);
    CHECK(frobenius_distance(g.modular.j.coeff,
                             testing::oracle_j_coeff_full(g, tol)) <= 1e-8);
  }
}

TEST_CASE("modular vacuum invariance") {
  const GnsData g = qubit_state();
  CHECK(distance(g.modular.delta.apply(g.omega), g.omega) <= 1e-10);
  CHECK(distance(g.modular.j.apply(g.omega), g.omega) <= 1e-10);
  CHECK(distance(g.modular.s.apply(g.omega), g.omega) <= 1e-10);
}

TEST_CASE("fundamental relations on the qubit state") {
  const GnsData g = qubit_state();
  const double ts[] = {0.5, 1.0, 2.0, -1.0};
  const ModularChecks c = modular_checks(g, ts, tol);
  CHECK(c.s_involution <= 1e-10);
  CHECK(c.recomposition <= 1e-10);
  CHECK(c.j_involution <= 1e-10);
  CHECK(c.j_antiunitary <= 1e-10);
  CHECK(c.s_action <= 1e-12);
  CHECK(c.commutant_span_checked);
  CHECK(c.jmj_in_commutant <= 1e-8);
  CHECK(c.commutant_in_jmj <= 1e-8);
  CHECK(c.flow_preserves_algebra <= 1e-8);
  CHECK(c.flow_invariance <= 1e-8);
}

TEST_CASE("modular_flow: fixed time zero, tracial fixed points") {
  const GnsData g = qubit_state();
  const Matrix x = unit_e(2, 0, 1) + unit_e(2, 1, 0) * Complex(0, 0.5);
  const FlowResult fr = modular_flow(g, 0.0, x, tol);
  CHECK(frobenius_distance(fr.value, x) <= 1e-12);

  const GnsData tracial = gns_construct(
      {AlgebraBasis::full(2), Matrix::identity(2) * Complex(0.5, 0.0)}, tol);
  const FlowResult ft = modular_flow(tracial, 1.7, x, tol);
  CHECK(frobenius_distance(ft.value, x) <= 1e-10);
}

TEST_CASE("modular_flow: qubit phase rotation") {
  const GnsData g = qubit_state();
  // sigma_1(E12) = (rho_1/rho_2)^{i} E12 = exp(i ln 2) E12.
  const FlowResult fr = modular_flow(g, 1.0, unit_e(2, 0, 1), tol);
  const Complex phase = std::polar(1.0, std::log(2.0));
  CHECK(frobenius_distance(fr.value, unit_e(2, 0, 1) * phase) <= 1e-10);
  CHECK(fr.membership_residual <= 1e-10);
}

TEST_CASE("modular_flow: group law and analytic oracle") {
  SplitMix64 rng(0xf10eULL);
  const Matrix u = random_unitary(rng, 3);
  const auto w = dirichlet_weights(rng, 3, 1e-3);
  const Matrix rho = u * Matrix::diagonal(w) * u.adjoint();
  const GnsData g = gns_construct({AlgebraBasis::full(3), rho}, tol);

  const double pairs[][2] = {{0.4, 0.9}, {1.3, -0.7}, {2.0, 2.0}};
  for (const auto& p : pairs) {
    for (const Matrix& x : g.algebra().basis) {
      const Matrix one = modular_flow(g, p[0], x, tol).value;
      const Matrix two = modular_flow(g, p[1], one, tol).value;
      const Matrix direct = modular_flow(g, p[0] + p[1], x, tol).value;
      CHECK(frobenius_distance(two, direct) <= 1e-8);
      CHECK(frobenius_distance(modular_flow(g, p[0], x, tol).value,
                               testing::oracle_flow_full(g, p[0], x, tol)) <=
            1e-8);
    }
  }
}

TEST_CASE("r_operator: vacuum, zero, commutation with rep(M)") {
  const GnsData g = qubit_state();
  CHECK(frobenius_distance(r_operator(g, g.omega), Matrix::identity(4)) <= 1e-10);

  const Vector zero(4, Complex(0, 0));
  CHECK(r_operator(g, zero).frobenius_norm() == 0.0);

  SplitMix64 rng(0x0e7aULL);
  const Vector eta = random_gaussian_vector(rng, 4);
  const Matrix r = r_operator(g, eta);
  for (const Matrix& b : g.rep)
    CHECK(commutator_norm(r, b) <= tol.match_eps * std::max(1.0, r.frobenius_norm()));
}

TEST_CASE("l_operator: embedded elements, vacuum, membership") {
  const GnsData g = qubit_state();
  const Matrix x = unit_e(2, 0, 1) * Complex(0.3, 1.0) + Matrix::identity(2);
  // L_{x_phi} = rep(x), a closed-loop identity.
  CHECK(frobenius_distance(l_operator(g, g.embed(x, tol)), g.rep_of(x, tol)) <=
        1e-10);
  CHECK(frobenius_distance(l_operator(g, g.omega), Matrix::identity(4)) <= 1e-10);

  SplitMix64 rng(0x1e7aULL);
  const Vector xi = random_gaussian_vector(rng, 4);
  const Matrix l = l_operator(g, xi);
  const AlgebraBasis repm = rep_algebra(g, tol);
  CHECK(contains(repm, l, tol).contained);
}

TEST_CASE("r/l exchange identity on random pairs") {
  SplitMix64 rng(0x3c3dULL);
  const Matrix u = random_unitary(rng, 2);
  const auto w = dirichlet_weights(rng, 2, 1e-3);
  const GnsData g = gns_construct(
      {AlgebraBasis::full(2), u * Matrix::diagonal(w) * u.adjoint()}, tol);
  for (int s = 0; s < 20; ++s) {
    const Vector xi = random_gaussian_vector(rng, 4);
    const Vector eta = random_gaussian_vector(rng, 4);
    const Vector lhs = l_operator(g, xi).apply(eta);
    const Vector rhs = r_operator(g, eta).apply(xi);
    CHECK(distance(lhs, rhs) <= 1e-9 * std::max(1.0, norm(lhs)));
  }
}

TEST_CASE("gns on a proper subalgebra of the ambient matrices") {
  // M = diagonal algebra, density not in M.
  SplitMix64 rng(0x77aaULL);
  const Matrix u = random_unitary(rng, 3);
  const auto w = dirichlet_weights(rng, 3, 1e-3);
  const Matrix rho = u * Matrix::diagonal(w) * u.adjoint();
  const GnsData g = gns_construct({AlgebraBasis::diagonal(3), rho}, tol);
  CHECK(g.gns_dim == 3);
  const ModularChecks c = modular_checks(g, std::vector<double>{1.0}, tol);
  CHECK(c.gram_error <= 1e-10);
  CHECK(c.recomposition <= 1e-10);
  CHECK(c.flow_preserves_algebra <= 1e-8);
}

TEST_CASE("non-normalized functionals are accepted") {
  const GnsData g =
      gns_construct({AlgebraBasis::full(2), Matrix::diagonal({1.0, 2.0})}, tol);
  CHECK(norm_sq(g.omega) == doctest::Approx(3.0));
  CHECK(distance(g.modular.delta.apply(g.omega), g.omega) <= 1e-10);
}
