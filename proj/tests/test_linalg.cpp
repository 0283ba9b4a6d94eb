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
#include <limits>

#include "oracles.hpp"
#include "vna/eig.hpp"
#include "vna/rng.hpp"
#include "vna/subspace.hpp"

using namespace vna;

namespace {
const Tolerance tol;

Matrix random_hermitian_scaled(SplitMix64& rng, std::size_t n) {
  Matrix g = random_gaussian_matrix(rng, n, n);
  return (g + g.adjoint()) * Complex(0.5, 0.0);
}
}  // namespace

TEST_CASE("matrix construction rejects non-finite entries") {
  CHECK_THROWS_AS(Matrix::from_rows({{Complex(1, 0), Complex(std::nan(""), 0)},
                                     {Complex(0, 0), Complex(1, 0)}}),
                  Error);
  CHECK_THROWS_AS(
      Matrix::from_rows({{Complex(std::numeric_limits<double>::infinity(), 0)}}),
      Error);
}

TEST_CASE("hermitian_eig: identity and diagonal cases") {
  const EigResult id = hermitian_eig(Matrix::identity(4), tol);
  for (double v : id.eigenvalues) CHECK(v == doctest::Approx(1.0));

  const EigResult d = hermitian_eig(Matrix::diagonal({1.0 / 3, 2.0 / 3}), tol);
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0 / 3));
  CHECK(d.eigenvalues[1] == doctest::Approx(2.0 / 3));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Matrix a = Matrix::from_rows({{Complex(0, 0), Complex(1, 0)},
                                {Complex(0, 0), Complex(0, 0)}});
  CHECK_THROWS_AS(hermitian_eig(a, tol), NotHermitian);
}

TEST_CASE("hermitian_eig: reconstruction and independent spectrum check") {
  SplitMix64 rng(0xe161ULL);
  const Matrix a = random_hermitian_scaled(rng, 6);
  const EigResult e = hermitian_eig(a, tol);

  // Reconstruction A = U diag(lambda) U^H.
  Matrix rebuilt(6, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    Vector col(6);
    for (std::size_t i = 0; i < 6; ++i) col[i] = e.vectors(i, k);
    rebuilt += Matrix::outer(col, col) * Complex(e.eigenvalues[k], 0.0);
  }
  CHECK(frobenius_distance(a, rebuilt) <= 1e-10 * std::max(1.0, a.frobenius_norm()));

  // Unitarity.
  CHECK(frobenius_distance(e.vectors.adjoint() * e.vectors, Matrix::identity(6)) <
        1e-12);

  // Second, independent diagonalization: realified greedy Jacobi doubles
  // each eigenvalue.
  const std::vector<double> doubled = testing::realified_eigenvalues(a);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(e.eigenvalues[i] == doctest::Approx(doubled[2 * i]).epsilon(1e-9));
    CHECK(e.eigenvalues[i] == doctest::Approx(doubled[2 * i + 1]).epsilon(1e-9));
  }
}

TEST_CASE("hermitian_eig: reconstruction bound through dimension 64") {
  SplitMix64 rng(0xd1a60ULL);
  for (std::size_t n : {2, 8, 16, 64}) {
    const Matrix a = random_hermitian_scaled(rng, n);
    const EigResult e = hermitian_eig(a, tol);
    const Matrix lam = Matrix::diagonal(e.eigenvalues);
    const Matrix rebuilt = e.vectors * lam * e.vectors.adjoint();
    CHECK(frobenius_distance(a, rebuilt) <=
          1e-10 * std::max(1.0, a.frobenius_norm()));
  }
}

TEST_CASE("antilinear adjoint is an exact involution") {
  SplitMix64 rng(0xadULL);
  const AntilinearOp t(random_gaussian_matrix(rng, 5, 5));
  const AntilinearOp tt = t.adjoint().adjoint();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(t.coeff(i, j) == tt.coeff(i, j));  // bitwise
}

TEST_CASE("antilinear_polar: plain conjugation") {
  const AntilinearOp s(Matrix::identity(3));
  const AntilinearPolar p = antilinear_polar(s, tol);
  CHECK(frobenius_distance(p.delta, Matrix::identity(3)) < 1e-14);
  CHECK(frobenius_distance(p.j.coeff, Matrix::identity(3)) < 1e-14);
}

TEST_CASE("antilinear_polar: modular involution of a qubit state") {
  // Adjoint involution of M_2 under the state diag(2/3, 1/3), written in
  // GNS coordinates of the matrix-unit basis E11,E12,E21,E22:
  // S e_(ij) = sqrt(rho_i/rho_j) e_(ji).
  const double r1 = 2.0 / 3, r2 = 1.0 / 3;
  Matrix a(4, 4);
  a(0, 0) = 1.0;
  a(3, 3) = 1.0;
  a(2, 1) = std::sqrt(r1 / r2);
  a(1, 2) = std::sqrt(r2 / r1);
  const AntilinearPolar p = antilinear_polar(AntilinearOp(a), tol);

  const EigResult e = hermitian_eig(p.delta, tol);
  // Frozen analytic spectrum rho_i / rho_j.
  CHECK(e.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.eigenvalues[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("antilinear_polar: contract on random involutions") {
  SplitMix64 rng(0x90a1ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    // A = C conj(C)^{-1} gives an antilinear involution S^2 = 1.
    Matrix c = random_gaussian_matrix(rng, n, n);
    c += Matrix::identity(n) * Complex(3.0, 0.0);  // keep it well-conditioned
    const Matrix c_conj_inv =
        eig_function(hermitian_eig(c.conj().adjoint() * c.conj(), tol),
                     [](double x) { return 1.0 / x; }) *
        c.conj().adjoint();
    const AntilinearOp s(c * c_conj_inv);
    CHECK(frobenius_distance(s.compose_antilinear(s), Matrix::identity(n)) < 1e-9);

    const AntilinearPolar p = antilinear_polar(s, tol);
    // delta positive definite.
    const EigResult e = hermitian_eig(p.delta, tol);
    CHECK(e.eigenvalues.front() > 0.0);
    // s = j o delta^{1/2}.
    const Matrix sd = hermitian_sqrt(p.delta, tol);
    CHECK(frobenius_distance(s.coeff, p.j.compose_linear(sd).coeff) <=
          tol.match_eps * std::max(1.0, s.coeff.frobenius_norm()));
    // j antiunitary and involutive.
    CHECK(frobenius_distance(p.j.coeff.adjoint() * p.j.coeff,
                             Matrix::identity(n)) <= tol.match_eps);
    CHECK(frobenius_distance(p.j.compose_antilinear(p.j), Matrix::identity(n)) <=
          tol.match_eps);
  }
}

TEST_CASE("antilinear_polar rejects singular input") {
  Matrix a(2, 2);
  a(0, 0) = 1.0;
  CHECK_THROWS_AS(antilinear_polar(AntilinearOp(a), tol), SingularS);
}

TEST_CASE("orthonormalize: collinear, empty, and rank oracle") {
  const SubspaceBasis one = orthonormalize(
      {{Complex(1, 0), Complex(0, 0)}, {Complex(2, 0), Complex(0, 0)}}, 2, tol);
  CHECK(one.dim() == 1);
  CHECK(std::abs(std::abs(one.vectors[0][0]) - 1.0) < 1e-14);

  CHECK(orthonormalize({}, 3, tol).dim() == 0);

  SplitMix64 rng(0x0a1bULL);
  std::vector<Vector> vs;
  for (int i = 0; i < 5; ++i) vs.push_back(random_gaussian_vector(rng, 3));
  const SubspaceBasis b = orthonormalize(vs, 3, tol);
  CHECK(b.dim() == 3);
  CHECK(b.dim() == testing::gram_rank(vs, tol));

  // Pairwise inner products are Kronecker deltas.
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Complex g = dot_conj(b.vectors[i], b.vectors[j]);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  // Same span as the input.
  for (const Vector& v : vs) CHECK(b.containment_residual(v) < 1e-10 * norm(v));
}

TEST_CASE("nullspace: zero, identity, rank-one") {
  CHECK(nullspace(Matrix(3, 3), tol).dim() == 3);
  CHECK(nullspace(Matrix::identity(3), tol).dim() == 0);

  SplitMix64 rng(0x0c3dULL);
  const Vector u = random_gaussian_vector(rng, 4);
  const Vector v = random_gaussian_vector(rng, 4);
  const Matrix outer = Matrix::outer(u, v);
  const SubspaceBasis ns = nullspace(outer, tol);
  CHECK(ns.dim() == 3);
  for (const Vector& w : ns.vectors)
    CHECK(norm(outer.apply(w)) <= tol.match_eps * outer.frobenius_norm());
}

TEST_CASE("subspace_intersect: coordinate planes and idempotence") {
  auto unit = [](std::size_t n, std::size_t i) {
    Vector e(n, Complex(0, 0));
    e[i] = 1.0;
    return e;
  };
  const SubspaceBasis a = orthonormalize({unit(4, 0), unit(4, 1)}, 4, tol);
  const SubspaceBasis b = orthonormalize({unit(4, 1), unit(4, 2)}, 4, tol);
  const SubspaceBasis meet = subspace_intersect({a, b}, tol);
  REQUIRE(meet.dim() == 1);
  for (std::size_t i : {0u, 2u, 3u}) CHECK(std::abs(meet.vectors[0][i]) < 1e-12);
  CHECK(std::abs(std::abs(meet.vectors[0][1]) - 1.0) < 1e-12);

  const SubspaceBasis self = subspace_intersect({a, a}, tol);
  CHECK(self.dim() == a.dim());
  CHECK(frobenius_distance(self.projection(), a.projection()) < 1e-12);
}

TEST_CASE("subspace_intersect: generic dimension via the rank formula") {
  SplitMix64 rng(0x1234ULL);
  std::vector<Vector> ua, ub;
  for (int i = 0; i < 3; ++i) {
    ua.push_back(random_gaussian_vector(rng, 4));
    ub.push_back(random_gaussian_vector(rng, 4));
  }
  const SubspaceBasis a = orthonormalize(ua, 4, tol);
  const SubspaceBasis b = orthonormalize(ub, 4, tol);
  REQUIRE(a.dim() == 3);
  REQUIRE(b.dim() == 3);

  // dim(U /\ W) = dim U + dim W - dim(U + W), computed independently.
  std::vector<Vector> joined = ua;
  joined.insert(joined.end(), ub.begin(), ub.end());
  const std::size_t dim_sum = testing::gram_rank(joined, tol);
  const SubspaceBasis meet = subspace_intersect({a, b}, tol);
  CHECK(meet.dim() == a.dim() + b.dim() - dim_sum);
  CHECK(meet.dim() == 2);
}

TEST_CASE("subspace_intersect: commutative, associative, monotone") {
  SplitMix64 rng(0xabcdULL);
  std::vector<SubspaceBasis> s;
  for (int k = 0; k < 3; ++k) {
    std::vector<Vector> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(random_gaussian_vector(rng, 5));
    s.push_back(orthonormalize(vs, 5, tol));
  }
  const Matrix p_ab = subspace_intersect({s[0], s[1]}, tol).projection();
  const Matrix p_ba = subspace_intersect({s[1], s[0]}, tol).projection();
  CHECK(frobenius_distance(p_ab, p_ba) < 1e-9);

  const SubspaceBasis ab = subspace_intersect({s[0], s[1]}, tol);
  const Matrix left = subspace_intersect({ab, s[2]}, tol).projection();
  const Matrix flat = subspace_intersect({s[0], s[1], s[2]}, tol).projection();
  CHECK(frobenius_distance(left, flat) < 1e-9);

  CHECK(subspace_intersect({s[0], s[1], s[2]}, tol).dim() <= ab.dim());
}

TEST_CASE("subspace_intersect rejects mixed ambient dimensions") {
  SubspaceBasis a, b;
  a.ambient_dim = 3;
  b.ambient_dim = 4;
  CHECK_THROWS_AS(subspace_intersect({a, b}, tol), DimensionMismatch);
}
