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

// In finite dimension every faithful positive functional is bounded, so the
// left ideal {x : phi(x^H x) finite} and the *-subalgebra it generates both
// coincide with the whole algebra; the GNS space is the algebra itself with
// inner product phi(x^H y), and the involution S is everywhere defined.
// Likewise every vector of the GNS space gives a bounded R_eta, and every
// vector is in the domain of S, so L_xi is defined for all xi.

#include "vna/gns.hpp"

#include <algorithm>
#include <cmath>

namespace vna {
namespace {

double rel(double err, double scale) { return err / std::max(1.0, scale); }

}  // namespace

Vector GnsData::embed(const Matrix& x, const Tolerance& tol) const {
  const ContainsResult c = contains(algebra(), x, tol);
  if (!c.contained)
    throw NotSubalgebra("embed: element outside the algebra (residual " +
                        std::to_string(c.residual) + ")");
  return embed_map.apply(algebra().hs_coords(x));
}

Matrix GnsData::from_gns_coords(const Vector& xi) const {
  return algebra().from_coords(embed_inv.apply(xi));
}

Matrix GnsData::rep_of(const Matrix& x, const Tolerance& tol) const {
  const ContainsResult c = contains(algebra(), x, tol);
  if (!c.contained)
    throw NotSubalgebra("rep_of: element outside the algebra (residual " +
                        std::to_string(c.residual) + ")");
  const Vector coords = algebra().hs_coords(x);
  Matrix acc(gns_dim, gns_dim);
  for (std::size_t i = 0; i < rep.size(); ++i)
    simd::active().axpy(acc.storage().size(), coords[i], rep[i].data(), acc.data());
  return acc;
}

Matrix GnsData::rep_pullback(const Matrix& t, const Tolerance& tol,
                             double* residual) const {
  if (t.rows() != gns_dim || t.cols() != gns_dim)
    throw DimensionMismatch("rep_pullback: operator has wrong shape");
  // Omega separates rep(M): the preimage is determined by T omega.
  const Matrix x = from_gns_coords(t.apply(omega));
  if (residual) {
    const Matrix rx = rep_of(x, tol);
    *residual = frobenius_distance(rx, t);
  }
  return x;
}

GnsData gns_construct(const Functional& phi, const Tolerance& tol) {
  tol.validate();
  const AlgebraBasis& m = phi.algebra;
  const std::size_t n = m.ambient_dim;
  const std::size_t d = m.dim();
  if (phi.density.rows() != n || phi.density.cols() != n)
    throw DimensionMismatch("density has wrong shape");
  phi.density.validate_finite("density");
  if (phi.density.hermitian_defect() > tol.match_eps)
    throw NotPositive("density is not Hermitian");

  {
    const EigResult erho = hermitian_eig(phi.density, tol);
    const double lo = erho.eigenvalues.empty() ? 0.0 : erho.eigenvalues.front();
    if (lo < -tol.match_eps) throw NotPositive("density has a negative eigenvalue");
    if (lo <= tol.rank_eps)
      throw NotFaithful("density eigenvalue at or below rank_eps");
  }

  GnsData g;
  g.functional = phi;
  g.gns_dim = d;

  // Gram of the algebra basis under phi(x^H y).
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix lhs = phi.density * m.basis[i].adjoint();
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = (lhs * m.basis[j]).trace();
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Complex v = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
      gram(i, j) = v;
      gram(j, i) = std::conj(v);
    }

  const EigResult ge = hermitian_eig(gram, tol);
  if (ge.eigenvalues.front() <= tol.rank_eps)
    throw NotFaithful("functional is not faithful on the algebra");
  g.embed_map = eig_function(ge, [](double x) { return std::sqrt(x); });
  g.embed_inv = eig_function(ge, [](double x) { return 1.0 / std::sqrt(x); });

  // Left multiplication in HS coordinates, whitened into GNS coordinates.
  g.rep.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vector col = m.hs_coords(m.basis[i] * m.basis[k]);
      for (std::size_t r = 0; r < d; ++r) l(r, k) = col[r];
    }
    g.rep.push_back(g.embed_map * l * g.embed_inv);
  }
  g.rep_gns.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix acc(d, d);
    for (std::size_t i = 0; i < d; ++i)
      simd::active().axpy(acc.storage().size(), g.embed_inv(i, k),
                          g.rep[i].data(), acc.data());
    g.rep_gns.push_back(std::move(acc));
  }

  g.omega = g.embed_map.apply(m.hs_coords(Matrix::identity(n)));
  g.modular = modular_data(g, tol);
  return g;
}

ModularData modular_data(const GnsData& g, const Tolerance& tol) {
  const AlgebraBasis& m = g.algebra();
  const std::size_t d = g.gns_dim;

  // Adjoint map in HS coordinates: coords(x^H) = K conj(coords(x)).
  Matrix k(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector col = m.hs_coords(m.basis[i].adjoint());
    for (std::size_t r = 0; r < d; ++r) k(r, i) = col[r];
  }

  ModularData md;
  md.s = AntilinearOp(g.embed_map * k * g.embed_inv.conj());
  AntilinearPolar polar = antilinear_polar(md.s, tol);
  md.delta = std::move(polar.delta);
  md.j = std::move(polar.j);
  md.log_delta = hermitian_log(md.delta, tol);
  md.log_delta_eig = hermitian_eig(md.log_delta, tol);
  return md;
}

FlowResult modular_flow(const GnsData& g, double t, const Matrix& x,
                        const Tolerance& tol) {
  const Matrix dit = g.modular.delta_power_it(t);
  const Matrix conjugated = dit * g.rep_of(x, tol) * dit.adjoint();
  FlowResult out;
  out.value = g.rep_pullback(conjugated, tol, &out.membership_residual);
  const double scale = std::max(1.0, conjugated.frobenius_norm());
  if (out.membership_residual > tol.match_eps * scale)
    throw FlowLeavesAlgebra("modular flow left the algebra numerically",
                            out.membership_residual);
  return out;
}

Matrix r_operator(const GnsData& g, const Vector& eta) {
  if (eta.size() != g.gns_dim)
    throw DimensionMismatch("r_operator: vector has wrong length");
  Matrix r(g.gns_dim, g.gns_dim);
  for (std::size_t k = 0; k < g.gns_dim; ++k) {
    const Vector col = g.rep_gns[k].apply(eta);
    for (std::size_t i = 0; i < g.gns_dim; ++i) r(i, k) = col[i];
  }
  return r;
}

Matrix l_operator(const GnsData& g, const Vector& xi) {
  if (xi.size() != g.gns_dim)
    throw DimensionMismatch("l_operator: vector has wrong length");
  Matrix l(g.gns_dim, g.gns_dim);
  for (std::size_t k = 0; k < g.gns_dim; ++k)
    simd::active().axpy(l.storage().size(), xi[k], g.rep_gns[k].data(), l.data());
  return l;
}

AlgebraBasis rep_algebra(const GnsData& g, const Tolerance& tol) {
  return AlgebraBasis::from_span(g.rep, g.gns_dim, tol);
}

ModularChecks modular_checks(const GnsData& g, std::span<const double> ts,
                             const Tolerance& tol, std::size_t span_check_cap) {
  ModularChecks c;
  const AlgebraBasis& m = g.algebra();
  const std::size_t d = g.gns_dim;

  // Gram contract and representation laws on all basis pairs.
  std::vector<Vector> embedded(d);
  for (std::size_t i = 0; i < d; ++i)
    embedded[i] = g.embed_map.apply(m.hs_coords(m.basis[i]));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Complex lhs = dot_conj(embedded[i], embedded[j]);
      const Complex rhs = g.functional.value(m.basis[i].adjoint() * m.basis[j]);
      c.gram_error = std::max(c.gram_error, std::abs(lhs - rhs));

      const Matrix prod = g.rep_of(m.basis[i] * m.basis[j], tol);
      c.rep_homomorphism = std::max(
          c.rep_homomorphism, frobenius_distance(prod, g.rep[i] * g.rep[j]));
    }
  for (std::size_t i = 0; i < d; ++i)
    c.rep_star = std::max(c.rep_star,
                          frobenius_distance(g.rep_of(m.basis[i].adjoint(), tol),
                                             g.rep[i].adjoint()));

  // Cyclic: {rep(b_i) omega} spans the GNS space.
  {
    std::vector<Vector> orbit;
    for (const Matrix& r : g.rep) orbit.push_back(r.apply(g.omega));
    const SubspaceBasis sp = orthonormalize(orbit, d, tol);
    c.cyclic_residual = sp.dim() == d ? 0.0 : 1.0;
  }
  // Separating: ||rep(x) omega|| is bounded below on unit vectors; the
  // smallest singular value of coords -> rep(x) omega certifies it.
  {
    Matrix eval(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector col = g.rep[i].apply(g.omega);
      for (std::size_t r = 0; r < d; ++r) eval(r, i) = col[r];
    }
    const std::vector<double> sv = singular_values(eval, tol);
    c.separating_residual = sv.empty() || sv.back() > tol.rank_eps ? 0.0 : 1.0;
  }

  // Involution contracts.
  const ModularData& md = g.modular;
  for (std::size_t i = 0; i < d; ++i) {
    const Vector lhs = md.s.apply(embedded[i]);
    const Vector rhs = g.embed_map.apply(m.hs_coords(m.basis[i].adjoint()));
    c.s_action = std::max(c.s_action, rel(distance(lhs, rhs), norm(rhs)));
  }
  const Matrix id = Matrix::identity(d);
  c.s_involution = frobenius_distance(md.s.compose_antilinear(md.s), id);
  c.j_involution = frobenius_distance(md.j.compose_antilinear(md.j), id);
  c.j_antiunitary =
      frobenius_distance(md.j.coeff.adjoint() * md.j.coeff, id);
  const Matrix sqrt_delta = hermitian_sqrt(md.delta, tol);
  c.recomposition =
      frobenius_distance(md.s.coeff, md.j.compose_linear(sqrt_delta).coeff);
  c.delta_omega = rel(distance(md.delta.apply(g.omega), g.omega), norm(g.omega));
  c.j_omega = rel(distance(md.j.apply(g.omega), g.omega), norm(g.omega));

  const AlgebraBasis repm = rep_algebra(g, tol);

  // J rep(M) J versus the commutant, as a two-sided span comparison when
  // the vectorized problem stays desk-sized.
  if (d <= span_check_cap) {
    const AlgebraBasis comm = commutant(repm, tol);
    double fwd = 0.0, bwd = 0.0;
    std::vector<Matrix> jmj;
    for (const Matrix& r : g.rep) {
      const Matrix conj_r = md.j.coeff * r.conj() * md.j.coeff.conj();
      jmj.push_back(conj_r);
      fwd = std::max(fwd, rel(contains(comm, conj_r, tol).residual,
                              conj_r.frobenius_norm()));
    }
    const AlgebraBasis jmj_alg = AlgebraBasis::from_span(jmj, d, tol);
    for (const Matrix& x : comm.basis)
      bwd = std::max(bwd, rel(contains(jmj_alg, x, tol).residual,
                              x.frobenius_norm()));
    c.jmj_in_commutant = fwd;
    c.commutant_in_jmj = bwd;
    c.commutant_span_checked = true;
  } else {
    // Necessary condition only: J rep(M) J commutes with rep(M).
    double worst = 0.0;
    for (const Matrix& r : g.rep) {
      const Matrix conj_r = md.j.coeff * r.conj() * md.j.coeff.conj();
      for (const Matrix& r2 : g.rep)
        worst = std::max(worst, rel(commutator_norm(conj_r, r2),
                                    conj_r.frobenius_norm() * r2.frobenius_norm()));
    }
    c.jmj_in_commutant = worst;
    c.commutant_span_checked = false;
  }

  // Flow conjugation preserves rep(M), and phi is flow-invariant.
  for (double t : ts) {
    const Matrix dit = md.delta_power_it(t);
    const Matrix dit_h = dit.adjoint();
    for (std::size_t i = 0; i < d; ++i) {
      const Matrix moved = dit * g.rep[i] * dit_h;
      c.flow_preserves_algebra =
          std::max(c.flow_preserves_algebra,
                   rel(contains(repm, moved, tol).residual,
                       moved.frobenius_norm()));
    }
    for (std::size_t i = 0; i < d; ++i) {
      const FlowResult fr = modular_flow(g, t, m.basis[i], tol);
      const Complex before = g.functional.value(m.basis[i]);
      const Complex after = g.functional.value(fr.value);
      c.flow_invariance = std::max(c.flow_invariance, std::abs(before - after));
    }
  }
  return c;
}

}  // namespace vna
