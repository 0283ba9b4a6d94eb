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

#include "vna/scenario.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "vna/jones.hpp"
#include "vna/rng.hpp"

namespace vna {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kRetries = 8;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 mixer(seed ^ (0xA5A5A5A5DEADBEEFULL + salt * 0x9E3779B97F4A7C15ULL));
  return mixer.next();
}

bool density_is_tracial(const Matrix& rho, const Tolerance& tol) {
  const std::size_t n = rho.rows();
  const Complex mean = rho.trace() * Complex(1.0 / double(n), 0.0);
  Matrix diff = rho;
  for (std::size_t i = 0; i < n; ++i) diff(i, i) -= mean;
  return diff.frobenius_norm() <= tol.match_eps * std::max(1.0, rho.frobenius_norm());
}

// Random *-subalgebra of {rho}' /\ M; pointwise fixed by the modular flow.
AlgebraBasis density_commutant_subalgebra(const GnsData& g, std::size_t gens,
                                          std::uint64_t seed,
                                          const Tolerance& tol) {
  const std::size_t n = g.algebra().ambient_dim;
  const AlgebraBasis rho_alg = generate({g.functional.density}, n, tol);
  const AlgebraBasis fixed = intersect({commutant(rho_alg, tol), g.algebra()}, tol);

  SplitMix64 rng(seed);
  std::vector<Matrix> picked;
  for (std::size_t i = 0; i < std::max<std::size_t>(gens, 1); ++i) {
    Vector coords(fixed.dim());
    for (auto& c : coords) c = rng.cgaussian();
    const Matrix y = fixed.from_coords(coords);
    picked.push_back((y + y.adjoint()) * Complex(0.5, 0.0));
  }
  return generate(picked, n, tol);
}

AlgebraBasis spectral_diagonal_subalgebra(const GnsData& g, const Tolerance& tol) {
  const std::size_t n = g.algebra().ambient_dim;
  const EigResult e = hermitian_eig(g.functional.density, tol);
  // Group nearby eigenvalues; their spectral projections commute with rho.
  const double gap = 1e-6 * std::max(1.0, std::abs(e.eigenvalues.back()));
  std::vector<Matrix> projections;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= e.eigenvalues.size(); ++i) {
    if (i == e.eigenvalues.size() || e.eigenvalues[i] - e.eigenvalues[i - 1] > gap) {
      Matrix p(n, n);
      for (std::size_t k = start; k < i; ++k) {
        Vector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = e.vectors(r, k);
        p += Matrix::outer(v, v);
      }
      projections.push_back(std::move(p));
      start = i;
    }
  }
  for (const Matrix& p : projections) {
    const ContainsResult c = contains(g.algebra(), p, tol);
    if (!c.contained)
      throw StrategyFailed("spectral projection of the density is outside M");
  }
  return generate(projections, n, tol);
}

AlgebraBasis tensor_factor_subalgebra(const GnsData& g, std::size_t n1,
                                      std::size_t n2, std::size_t factor,
                                      bool diagonal, const Tolerance& tol) {
  const std::size_t n = g.algebra().ambient_dim;
  if (n1 * n2 != n)
    throw StrategyFailed("tensor-factor strategy needs a tensor ambient");
  AlgebraBasis out;
  if (factor == 0) {
    const AlgebraBasis a =
        diagonal ? AlgebraBasis::diagonal(n1) : AlgebraBasis::full(n1);
    out = AlgebraBasis::tensor_left(a, n2, tol);
  } else {
    const AlgebraBasis b =
        diagonal ? AlgebraBasis::diagonal(n2) : AlgebraBasis::full(n2);
    out = AlgebraBasis::tensor_right(n1, b, tol);
  }
  for (const Matrix& x : out.basis)
    if (!contains(g.algebra(), x, tol).contained)
      throw StrategyFailed("tensor factor is not inside M");
  return out;
}

AlgebraBasis build_covariant(const GnsData& g, const SubalgebraSpec& s,
                             std::size_t n1, std::size_t n2,
                             std::uint64_t seed, const Tolerance& tol) {
  switch (s.strategy) {
    case Strategy::density_commutant:
      return density_commutant_subalgebra(g, s.generators, seed, tol);
    case Strategy::tensor_factor:
      return tensor_factor_subalgebra(g, n1, n2, s.factor, s.diagonal_factor, tol);
    case Strategy::spectral_diagonal:
      return spectral_diagonal_subalgebra(g, tol);
    case Strategy::rotated:
      break;
  }
  throw StrategyFailed("rotated is not a covariant strategy");
}

}  // namespace

void InstanceSpec::validate() const {
  if (ambient_dim < 1 || ambient_dim > 8)
    throw Error("ambient_dim must be between 1 and 8 (GNS dimension <= 64)");
  if (algebra_gen.kind == AlgebraGenSpec::Kind::tensor &&
      algebra_gen.factor1 * algebra_gen.factor2 != ambient_dim)
    throw Error("tensor factors do not multiply to ambient_dim");
  if (density.kind == DensitySpec::Kind::explicit_eigenvalues) {
    if (density.eigenvalues.size() != ambient_dim)
      throw Error("explicit eigenvalue list length must equal ambient_dim");
    for (double v : density.eigenvalues)
      if (!(v > 0.0)) throw Error("density eigenvalues must be strictly positive");
  }
}

std::vector<AlgebraBasis> gen_covariant_family(const GnsData& g, std::size_t k,
                                               Strategy strategy,
                                               std::uint64_t seed,
                                               const Tolerance& tol) {
  // Tensor shape is recovered from a square split when possible; callers
  // with explicit tensor instances go through build_instance instead.
  std::size_t n1 = 0, n2 = 0;
  const std::size_t n = g.algebra().ambient_dim;
  for (std::size_t f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      n1 = f;
      n2 = n / f;
      break;
    }

  std::vector<AlgebraBasis> family;
  for (std::size_t i = 0; i < k; ++i) {
    SubalgebraSpec s;
    s.strategy = strategy;
    s.generators = 1 + (i % 2);
    s.factor = i % 2;
    s.diagonal_factor = (i / 2) % 2 == 1;
    bool accepted = false;
    for (int attempt = 0; attempt < kRetries && !accepted; ++attempt) {
      const std::uint64_t sub_seed = derive_seed(seed, i * 97 + attempt);
      AlgebraBasis cand = build_covariant(g, s, n1, n2, sub_seed, tol);
      if (is_modular_covariant(g, cand, tol).covariant) {
        family.push_back(std::move(cand));
        accepted = true;
      }
    }
    if (!accepted)
      throw StrategyFailed("covariance certification failed after retries");
  }
  return family;
}

AlgebraBasis gen_noncovariant(const GnsData& g, std::uint64_t seed,
                              const Tolerance& tol) {
  if (density_is_tracial(g.functional.density, tol))
    throw Degenerate("tracial density: every subalgebra is covariant");

  const std::size_t n = g.algebra().ambient_dim;
  AlgebraBasis base;
  try {
    base = spectral_diagonal_subalgebra(g, tol);
  } catch (const StrategyFailed&) {
    base = density_commutant_subalgebra(g, 1, derive_seed(seed, 13), tol);
  }

  for (int attempt = 0; attempt < kRetries; ++attempt) {
    SplitMix64 rng(derive_seed(seed, 1000 + attempt));
    const Matrix u = random_unitary(rng, n);
    AlgebraBasis cand;
    try {
      cand = AlgebraBasis::conjugated(base, u, tol);
    } catch (const Error&) {
      continue;
    }
    bool inside = true;
    for (const Matrix& x : cand.basis)
      inside = inside && contains(g.algebra(), x, tol).contained;
    if (!inside) continue;
    if (!is_modular_covariant(g, cand, tol).covariant) return cand;
  }
  throw StrategyFailed("could not produce a certified non-covariant subalgebra");
}

Instance build_instance(const InstanceSpec& spec, const Tolerance& tol) {
  spec.validate();
  const std::size_t n = spec.ambient_dim;
  SplitMix64 rng(spec.seed);

  Instance inst;
  inst.spec = spec;

  switch (spec.algebra_gen.kind) {
    case AlgebraGenSpec::Kind::full:
    case AlgebraGenSpec::Kind::tensor:
      inst.algebra = AlgebraBasis::full(n);
      break;
    case AlgebraGenSpec::Kind::generated: {
      std::vector<Matrix> gens;
      for (std::size_t i = 0; i < spec.algebra_gen.generator_count; ++i)
        gens.push_back(random_hermitian(rng, n));
      inst.algebra = generate(gens, n, tol);
      break;
    }
  }

  std::vector<double> eigenvalues;
  const double floor = std::max(10.0 * tol.rank_eps, 1e-3 / double(n));
  if (spec.density.kind == DensitySpec::Kind::explicit_eigenvalues) {
    eigenvalues = spec.density.eigenvalues;
  } else if (spec.algebra_gen.kind == AlgebraGenSpec::Kind::tensor) {
    // Product draw keeps the density a product state, so the tensor legs
    // are flow-invariant.
    const auto w1 = dirichlet_weights(rng, spec.algebra_gen.factor1, floor);
    const auto w2 = dirichlet_weights(rng, spec.algebra_gen.factor2, floor);
    for (double a : w1)
      for (double b : w2) eigenvalues.push_back(a * b);
  } else {
    eigenvalues = dirichlet_weights(rng, n, floor);
  }
  inst.density = Matrix::diagonal(eigenvalues);

  const GnsData g = gns_construct({inst.algebra, inst.density}, tol);

  for (std::size_t i = 0; i < spec.subalgebras.size(); ++i) {
    const SubalgebraSpec& s = spec.subalgebras[i];
    const std::uint64_t sub_seed = derive_seed(spec.seed, 7 + i);
    if (s.strategy == Strategy::rotated) {
      inst.subalgebras.push_back(gen_noncovariant(g, sub_seed, tol));
      inst.intended_covariant.push_back(false);
      continue;
    }
    bool accepted = false;
    for (int attempt = 0; attempt < kRetries && !accepted; ++attempt) {
      AlgebraBasis cand = build_covariant(
          g, s, spec.algebra_gen.factor1, spec.algebra_gen.factor2,
          derive_seed(sub_seed, attempt), tol);
      if (is_modular_covariant(g, cand, tol).covariant) {
        inst.subalgebras.push_back(std::move(cand));
        inst.intended_covariant.push_back(true);
        accepted = true;
      }
    }
    if (!accepted)
      throw StrategyFailed("subalgebra " + std::to_string(i) +
                           ": covariance certification failed after retries");
  }
  return inst;
}

// --- serialization ---

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex number must be [re, im]", path);
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nested array", path);
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("ragged matrix rows", path + "[" + std::to_string(i) + "]");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = complex_from_json(j[i][c], path + "[" + std::to_string(i) + "][" +
                                               std::to_string(c) + "]");
  }
  m.validate_finite("deserialized matrix");
  return m;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::density_commutant: return "density-commutant";
    case Strategy::tensor_factor: return "tensor-factor";
    case Strategy::spectral_diagonal: return "spectral-diagonal";
    case Strategy::rotated: return "rotated";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name, const std::string& path) {
  if (name == "density-commutant") return Strategy::density_commutant;
  if (name == "tensor-factor") return Strategy::tensor_factor;
  if (name == "spectral-diagonal") return Strategy::spectral_diagonal;
  if (name == "rotated") return Strategy::rotated;
  throw ParseError("unknown strategy '" + name + "'", path);
}

json spec_to_json(const InstanceSpec& spec) {
  json algebra;
  switch (spec.algebra_gen.kind) {
    case AlgebraGenSpec::Kind::full:
      algebra = {{"kind", "full"}};
      break;
    case AlgebraGenSpec::Kind::tensor:
      algebra = {{"kind", "tensor"},
                 {"factors", {spec.algebra_gen.factor1, spec.algebra_gen.factor2}}};
      break;
    case AlgebraGenSpec::Kind::generated:
      algebra = {{"kind", "generated"},
                 {"generators", spec.algebra_gen.generator_count}};
      break;
  }
  json density;
  if (spec.density.kind == DensitySpec::Kind::explicit_eigenvalues)
    density = {{"kind", "explicit"}, {"eigenvalues", spec.density.eigenvalues}};
  else
    density = {{"kind", "dirichlet"}};

  json subs = json::array();
  for (const SubalgebraSpec& s : spec.subalgebras) {
    json e = {{"strategy", strategy_name(s.strategy)}};
    if (s.strategy == Strategy::density_commutant) e["generators"] = s.generators;
    if (s.strategy == Strategy::tensor_factor) {
      e["factor"] = s.factor;
      e["diagonal"] = s.diagonal_factor;
    }
    subs.push_back(std::move(e));
  }

  return {{"ambient_dim", spec.ambient_dim},
          {"seed", spec.seed},
          {"algebra", std::move(algebra)},
          {"density", std::move(density)},
          {"subalgebras", std::move(subs)}};
}

InstanceSpec spec_from_json(const json& j) {
  InstanceSpec spec;
  if (!j.is_object()) throw ParseError("spec must be an object", "spec");
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_unsigned())
    throw ParseError("missing or invalid field", "spec.ambient_dim");
  spec.ambient_dim = j["ambient_dim"].get<std::size_t>();
  if (!j.contains("seed") || !j["seed"].is_number())
    throw ParseError("missing or invalid field", "spec.seed");
  spec.seed = j["seed"].get<std::uint64_t>();

  if (!j.contains("algebra") || !j["algebra"].is_object() ||
      !j["algebra"].contains("kind"))
    throw ParseError("missing or invalid field", "spec.algebra");
  const std::string kind = j["algebra"]["kind"].get<std::string>();
  if (kind == "full") {
    spec.algebra_gen.kind = AlgebraGenSpec::Kind::full;
  } else if (kind == "tensor") {
    spec.algebra_gen.kind = AlgebraGenSpec::Kind::tensor;
    const json& f = j["algebra"].contains("factors") ? j["algebra"]["factors"] : json();
    if (!f.is_array() || f.size() != 2)
      throw ParseError("tensor algebra needs two factors", "spec.algebra.factors");
    spec.algebra_gen.factor1 = f[0].get<std::size_t>();
    spec.algebra_gen.factor2 = f[1].get<std::size_t>();
  } else if (kind == "generated") {
    spec.algebra_gen.kind = AlgebraGenSpec::Kind::generated;
    if (!j["algebra"].contains("generators"))
      throw ParseError("generated algebra needs a generator count",
                       "spec.algebra.generators");
    spec.algebra_gen.generator_count = j["algebra"]["generators"].get<std::size_t>();
  } else {
    throw ParseError("unknown algebra kind '" + kind + "'", "spec.algebra.kind");
  }

  if (!j.contains("density") || !j["density"].is_object() ||
      !j["density"].contains("kind"))
    throw ParseError("missing or invalid field", "spec.density");
  const std::string dkind = j["density"]["kind"].get<std::string>();
  if (dkind == "explicit") {
    spec.density.kind = DensitySpec::Kind::explicit_eigenvalues;
    if (!j["density"].contains("eigenvalues") || !j["density"]["eigenvalues"].is_array())
      throw ParseError("explicit density needs an eigenvalue list",
                       "spec.density.eigenvalues");
    for (std::size_t i = 0; i < j["density"]["eigenvalues"].size(); ++i) {
      const json& v = j["density"]["eigenvalues"][i];
      if (!v.is_number())
        throw ParseError("eigenvalue must be a number",
                         "spec.density.eigenvalues[" + std::to_string(i) + "]");
      spec.density.eigenvalues.push_back(v.get<double>());
    }
  } else if (dkind == "dirichlet") {
    spec.density.kind = DensitySpec::Kind::dirichlet;
  } else {
    throw ParseError("unknown density kind '" + dkind + "'", "spec.density.kind");
  }

  if (j.contains("subalgebras")) {
    if (!j["subalgebras"].is_array())
      throw ParseError("subalgebras must be an array", "spec.subalgebras");
    for (std::size_t i = 0; i < j["subalgebras"].size(); ++i) {
      const json& e = j["subalgebras"][i];
      const std::string path = "spec.subalgebras[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("strategy"))
        throw ParseError("subalgebra entry needs a strategy", path);
      SubalgebraSpec s;
      s.strategy = strategy_from_name(e["strategy"].get<std::string>(),
                                      path + ".strategy");
      if (e.contains("generators")) s.generators = e["generators"].get<std::size_t>();
      if (e.contains("factor")) s.factor = e["factor"].get<std::size_t>();
      if (e.contains("diagonal")) s.diagonal_factor = e["diagonal"].get<bool>();
      spec.subalgebras.push_back(s);
    }
  }

  try {
    spec.validate();
  } catch (const Error& err) {
    throw ParseError(err.what(), "spec");
  }
  return spec;
}

}  // namespace

std::string canonical_spec_text(const InstanceSpec& spec) {
  return spec_to_json(spec).dump();
}

std::string spec_hash(const InstanceSpec& spec) {
  const std::string text = canonical_spec_text(spec);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string serialize_instance(const InstanceSpec& spec, const Instance* computed) {
  json doc = {{"schema_version", kSchemaVersion}, {"spec", spec_to_json(spec)}};
  if (computed) {
    json artifacts;
    artifacts["density"] = matrix_to_json(computed->density);
    json basis = json::array();
    for (const Matrix& b : computed->algebra.basis) basis.push_back(matrix_to_json(b));
    artifacts["algebra_basis"] = std::move(basis);
    json subs = json::array();
    for (const AlgebraBasis& a : computed->subalgebras) {
      json sb = json::array();
      for (const Matrix& b : a.basis) sb.push_back(matrix_to_json(b));
      subs.push_back(std::move(sb));
    }
    artifacts["subalgebra_bases"] = std::move(subs);
    doc["artifacts"] = std::move(artifacts);
  }
  return doc.dump(2) + "\n";
}

SerializedInstance deserialize_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "document");
  }
  if (!doc.is_object()) throw ParseError("document must be an object", "document");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
    throw ParseError("missing schema_version", "schema_version");
  if (doc["schema_version"].get<int>() != kSchemaVersion)
    throw SchemaVersionMismatch("unsupported schema_version " +
                                doc["schema_version"].dump());
  if (!doc.contains("spec")) throw ParseError("missing spec", "spec");

  SerializedInstance si;
  si.spec = spec_from_json(doc["spec"]);

  if (doc.contains("artifacts")) {
    const json& a = doc["artifacts"];
    if (!a.is_object()) throw ParseError("artifacts must be an object", "artifacts");
    InstanceArtifacts art;
    if (!a.contains("density"))
      throw ParseError("artifacts need a density", "artifacts.density");
    art.density = matrix_from_json(a["density"], "artifacts.density");
    if (a.contains("algebra_basis")) {
      for (std::size_t i = 0; i < a["algebra_basis"].size(); ++i)
        art.algebra_basis.push_back(matrix_from_json(
            a["algebra_basis"][i], "artifacts.algebra_basis[" + std::to_string(i) + "]"));
    }
    if (a.contains("subalgebra_bases")) {
      for (std::size_t i = 0; i < a["subalgebra_bases"].size(); ++i) {
        std::vector<Matrix> sb;
        const json& arr = a["subalgebra_bases"][i];
        if (!arr.is_array())
          throw ParseError("subalgebra basis must be an array",
                           "artifacts.subalgebra_bases[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < arr.size(); ++k)
          sb.push_back(matrix_from_json(
              arr[k], "artifacts.subalgebra_bases[" + std::to_string(i) + "][" +
                          std::to_string(k) + "]"));
        art.subalgebra_bases.push_back(std::move(sb));
      }
    }
    si.artifacts = std::move(art);
  }
  return si;
}

Instance instance_from_serialized(const SerializedInstance& si,
                                  const Tolerance& tol) {
  if (!si.artifacts) return build_instance(si.spec, tol);

  const InstanceArtifacts& art = *si.artifacts;
  Instance inst;
  inst.spec = si.spec;
  inst.density = art.density;

  auto rebuild = [&](const std::vector<Matrix>& basis,
                     const char* what) -> AlgebraBasis {
    if (basis.empty()) throw ParseError("empty basis", what);
    AlgebraBasis a;
    a.ambient_dim = si.spec.ambient_dim;
    a.basis = basis;
    const AlgebraInvariants inv = algebra_invariants(a, tol);
    const double worst = std::max({inv.orthonormality, inv.adjoint_closure,
                                   inv.product_closure, inv.identity_residual});
    if (worst > tol.match_eps)
      throw ParseError("stored basis is not a valid algebra (residual " +
                           std::to_string(worst) + ")",
                       what);
    a.contains_identity = true;
    return a;
  };

  inst.algebra = rebuild(art.algebra_basis, "artifacts.algebra_basis");
  for (std::size_t i = 0; i < art.subalgebra_bases.size(); ++i)
    inst.subalgebras.push_back(rebuild(
        art.subalgebra_bases[i],
        ("artifacts.subalgebra_bases[" + std::to_string(i) + "]").c_str()));
  for (std::size_t i = 0; i < inst.subalgebras.size(); ++i)
    inst.intended_covariant.push_back(
        i < si.spec.subalgebras.size()
            ? si.spec.subalgebras[i].strategy != Strategy::rotated
            : true);
  return inst;
}

}  // namespace vna
