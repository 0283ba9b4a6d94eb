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

#include "vna/jones.hpp"

#include <algorithm>
#include <cmath>

#include "vna/rng.hpp"

namespace vna {
namespace {

double rel(double err, double scale) { return err / std::max(1.0, scale); }

const double kFlowSamples[] = {0.3, 1.0, 1.4142135623730951};

}  // namespace

SubspaceBasis subspace_hn(const GnsData& g, const AlgebraBasis& n,
                          const Tolerance& tol) {
  if (n.ambient_dim != g.algebra().ambient_dim)
    throw DimensionMismatch("subspace_hn: ambient dims differ");
  std::vector<Vector> embedded;
  for (const Matrix& x : n.basis) {
    const ContainsResult c = contains(g.algebra(), x, tol);
    if (!c.contained)
      throw NotSubalgebra("subalgebra element outside M (residual " +
                          std::to_string(c.residual) + ")");
    embedded.push_back(g.embed_map.apply(g.algebra().hs_coords(x)));
  }
  SubspaceBasis h = orthonormalize(embedded, g.gns_dim, tol);
  // embed is injective, so the subspace dimension equals dim(N).
  if (h.dim() != n.dim())
    throw Error("H_N dimension does not match dim(N); embedding degenerated");
  return h;
}

JonesData jones_projection(const GnsData& g, const AlgebraBasis& n,
                           const Tolerance& tol) {
  JonesData jd;
  jd.sub = n;
  jd.h_n = subspace_hn(g, n, tol);
  jd.e = jd.h_n.projection();
  jd.covariant = is_modular_covariant(g, n, tol).covariant;
  return jd;
}

CovarianceCertificate is_modular_covariant(const GnsData& g,
                                           const AlgebraBasis& n,
                                           const Tolerance& tol) {
  CovarianceCertificate cert;

  // Generator criterion: the derivation [log delta, .] maps N into N.  At
  // finite dimension one-parameter-group invariance is equivalent to the
  // generator being a derivation of N.
  bool derivation_ok = true;
  for (const Matrix& x : n.basis) {
    const Matrix rx = g.rep_of(x, tol);
    const Matrix comm = g.modular.log_delta * rx - rx * g.modular.log_delta;
    double pullback = 0.0;
    const Matrix y = g.rep_pullback(comm, tol, &pullback);
    cert.pullback_residual =
        std::max(cert.pullback_residual, rel(pullback, comm.frobenius_norm()));
    const ContainsResult c = contains(n, y, tol);
    cert.derivation_residual =
        std::max(cert.derivation_residual, rel(c.residual, y.frobenius_norm()));
    derivation_ok = derivation_ok && c.contained;
  }

  // Sampled-flow cross-check.
  bool flow_ok = true;
  for (double t : kFlowSamples) {
    for (const Matrix& x : n.basis) {
      const FlowResult fr = modular_flow(g, t, x, tol);
      const ContainsResult c = contains(n, fr.value, tol);
      cert.flow_residual = std::max(
          cert.flow_residual, rel(c.residual, fr.value.frobenius_norm()));
      flow_ok = flow_ok && c.contained;
    }
  }

  if (derivation_ok != flow_ok)
    throw Inconsistent(
        "derivation and sampled-flow covariance tests disagree (derivation " +
        std::to_string(cert.derivation_residual) + ", flow " +
        std::to_string(cert.flow_residual) + ")");

  cert.covariant = derivation_ok;
  return cert;
}

Matrix conditional_expectation(const GnsData& g, const JonesData& jd,
                               const Tolerance& tol) {
  const AlgebraBasis& m = g.algebra();
  const AlgebraBasis& n = jd.sub;
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();

  Matrix expectation(dn, dm);
  std::vector<Matrix> images(dm);
  for (std::size_t i = 0; i < dm; ++i) {
    // The vector equation: E(x) omega = e x omega, solved through the
    // separating vector.
    const Vector v = jd.e.apply(g.embed_map.apply(m.hs_coords(m.basis[i])));
    const Matrix y = g.from_gns_coords(v);
    const ContainsResult rec = contains(n, y, tol);
    if (!rec.contained)
      throw Error("expectation recovery left N (residual " +
                  std::to_string(rec.residual) + ")");
    const Vector coords = n.hs_coords(y);
    for (std::size_t r = 0; r < dn; ++r) expectation(r, i) = coords[r];
    images[i] = n.from_coords(coords);
  }

  // The defining identity must hold as a full operator equation, not just
  // on omega; its failure is exactly the Takesaki obstruction.
  for (std::size_t i = 0; i < dm; ++i) {
    const Matrix rx = g.rep_of(m.basis[i], tol);
    const Matrix lhs = g.rep_of(images[i], tol) * jd.e;
    const Matrix rhs = jd.e * rx * jd.e;
    const double residual = frobenius_distance(lhs, rhs);
    if (residual > tol.match_eps * std::max(1.0, rx.frobenius_norm()))
      throw NotCovariant("no conditional expectation: operator identity fails",
                         residual);
  }
  return expectation;
}

Matrix apply_expectation(const GnsData& g, const JonesData& jd,
                         const Matrix& expectation, const Matrix& x,
                         const Tolerance& tol) {
  const ContainsResult c = contains(g.algebra(), x, tol);
  if (!c.contained)
    throw NotSubalgebra("apply_expectation: element outside M");
  return jd.sub.from_coords(expectation.apply(g.algebra().hs_coords(x)));
}

ExpectationReport verify_expectation(const GnsData& g, const JonesData& jd,
                                     const Matrix& expectation,
                                     const Tolerance& tol) {
  ExpectationReport report;
  const AlgebraBasis& m = g.algebra();
  const AlgebraBasis& n = jd.sub;
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();

  // Idempotence through the inclusion of N-coordinates back into M.
  Matrix inclusion(dm, dn);
  for (std::size_t j = 0; j < dn; ++j) {
    const Vector c = m.hs_coords(n.basis[j]);
    for (std::size_t r = 0; r < dm; ++r) inclusion(r, j) = c[r];
  }
  report.idempotent_err =
      frobenius_distance(expectation * inclusion * expectation, expectation);

  // N-bimodule property on basis triples.
  for (const Matrix& a : n.basis)
    for (const Matrix& x : m.basis)
      for (const Matrix& b : n.basis) {
        const Matrix lhs = apply_expectation(g, jd, expectation, a * x * b, tol);
        const Matrix rhs = a * apply_expectation(g, jd, expectation, x, tol) * b;
        report.bimodule_err =
            std::max(report.bimodule_err, frobenius_distance(lhs, rhs));
      }

  // Positivity on random elements.
  SplitMix64 rng(0x45787065ULL);
  for (int s = 0; s < 8; ++s) {
    Vector coords(dm);
    for (std::size_t i = 0; i < dm; ++i) coords[i] = rng.cgaussian();
    const Matrix x = m.from_coords(coords);
    Matrix z = apply_expectation(g, jd, expectation, x.adjoint() * x, tol);
    const Matrix zh = (z + z.adjoint()) * Complex(0.5, 0.0);
    const double defect = frobenius_distance(z, zh);
    const EigResult e = hermitian_eig(zh, tol);
    const double min_eig = e.eigenvalues.empty() ? 0.0 : e.eigenvalues.front();
    const double scale = std::max(1.0, zh.frobenius_norm());
    if (defect > tol.match_eps * scale || min_eig < -tol.match_eps * scale)
      report.positivity_flag = false;
  }

  // phi o E = phi and range inside N.
  for (const Matrix& x : m.basis) {
    const Matrix ex = apply_expectation(g, jd, expectation, x, tol);
    report.phi_invariance_err =
        std::max(report.phi_invariance_err,
                 std::abs(g.functional.value(ex) - g.functional.value(x)));
    report.range_err = std::max(report.range_err, contains(n, ex, tol).residual);
  }
  return report;
}

LemmaReport lemma_eprime_check(const GnsData& g, const JonesData& jd,
                               const Tolerance& tol) {
  const AlgebraBasis& m = g.algebra();
  const std::size_t dm = m.dim();
  const std::size_t d2 = g.gns_dim * g.gns_dim;

  // Commutator-with-e map restricted to rep(M), in M-coordinates.
  Matrix stacked(d2, dm);
  for (std::size_t i = 0; i < dm; ++i) {
    const Matrix c = g.rep[i] * jd.e - jd.e * g.rep[i];
    for (std::size_t r = 0; r < d2; ++r) stacked(r, i) = c.data()[r];
  }
  const SubspaceBasis commuting = nullspace(stacked, tol);

  // N's coordinates inside M (orthonormal since both bases are).
  std::vector<Vector> ncoords;
  for (const Matrix& x : jd.sub.basis) ncoords.push_back(m.hs_coords(x));
  SubspaceBasis nspan;
  nspan.ambient_dim = dm;
  nspan.vectors = ncoords;

  LemmaReport report;
  for (const Vector& v : commuting.vectors)
    report.forward_residual =
        std::max(report.forward_residual, nspan.containment_residual(v));
  for (const Vector& v : ncoords)
    report.backward_residual =
        std::max(report.backward_residual, commuting.containment_residual(v));
  report.equal = commuting.dim() == jd.sub.dim() &&
                 report.forward_residual <= tol.match_eps &&
                 report.backward_residual <= tol.match_eps;
  return report;
}

PropLxiReport prop_lxi_check(const GnsData& g, const JonesData& jd,
                             std::size_t samples, const Tolerance& tol,
                             std::uint64_t seed) {
  PropLxiReport report;
  report.samples = samples;

  std::vector<Matrix> rep_n;
  for (const Matrix& x : jd.sub.basis) rep_n.push_back(g.rep_of(x, tol));
  const AlgebraBasis rep_n_alg =
      AlgebraBasis::from_span(rep_n, g.gns_dim, tol);
  const AlgebraBasis comm_n = commutant(rep_n_alg, tol);

  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    // xi inside H_N.
    Vector xi(g.gns_dim, Complex(0.0, 0.0));
    for (const Vector& b : jd.h_n.vectors) axpy(rng.cgaussian(), b, xi);
    const Matrix l = l_operator(g, xi);
    const double lscale = std::max(1.0, l.frobenius_norm());

    report.max_e_commutation =
        std::max(report.max_e_commutation,
                 frobenius_distance(jd.e * l, l * jd.e) / lscale);
    for (const Matrix& c : comm_n.basis)
      report.max_commutant_commutation =
          std::max(report.max_commutant_commutation,
                   commutator_norm(l, c) / lscale);

    const Vector eta = random_gaussian_vector(rng, g.gns_dim);
    const Matrix r_eta = r_operator(g, eta);
    const Matrix lhs = jd.e * r_eta * jd.e;
    const Matrix rhs = r_operator(g, jd.e.apply(eta)) * jd.e;
    report.max_exchange_residual =
        std::max(report.max_exchange_residual,
                 frobenius_distance(lhs, rhs) /
                     std::max(1.0, r_eta.frobenius_norm()));
  }
  return report;
}

}  // namespace vna
