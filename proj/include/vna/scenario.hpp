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
#include <string>
#include <vector>

#include "vna/gns.hpp"

namespace vna {

/// Subalgebra generation strategies.
///   density_commutant — random elements of {rho}' /\ M (pointwise flow-fixed)
///   tensor_factor     — A (x) 1 or 1 (x) B on a tensor ambient
///   spectral_diagonal — generated by the spectral projections of rho
///   rotated           — a covariant base conjugated by a random unitary;
///                       certified non-covariant (the contrast case)
enum class Strategy { density_commutant, tensor_factor, spectral_diagonal, rotated };

struct SubalgebraSpec {
  Strategy strategy = Strategy::spectral_diagonal;
  std::size_t generators = 1;   // density_commutant
  std::size_t factor = 0;       // tensor_factor: which leg
  bool diagonal_factor = false; // tensor_factor: diagonal instead of full
};

struct AlgebraGenSpec {
  enum class Kind { full, tensor, generated } kind = Kind::full;
  std::size_t factor1 = 2, factor2 = 2;  // tensor
  std::size_t generator_count = 1;       // generated
};

struct DensitySpec {
  enum class Kind { explicit_eigenvalues, dirichlet } kind = Kind::dirichlet;
  std::vector<double> eigenvalues;  // explicit only; strictly positive
};

/// Everything needed to rebuild an instance deterministically.
struct InstanceSpec {
  std::size_t ambient_dim = 2;  // <= 8 (GNS dimension <= 64)
  AlgebraGenSpec algebra_gen;
  DensitySpec density;
  std::vector<SubalgebraSpec> subalgebras;
  std::uint64_t seed = 0;

  void validate() const;
};

/// A built instance: the algebra M, the density, and the subalgebra family
/// with the covariance intent recorded per entry (rotated => false).
struct Instance {
  InstanceSpec spec;
  AlgebraBasis algebra;
  Matrix density;
  std::vector<AlgebraBasis> subalgebras;
  std::vector<bool> intended_covariant;
};

/// Deterministic build; throws StrategyFailed / Degenerate per strategy
/// contract.
Instance build_instance(const InstanceSpec& spec, const Tolerance& tol);

/// k certified-covariant subalgebras of g's algebra.  Retries with derived
/// seeds a bounded number of times; throws StrategyFailed.
std::vector<AlgebraBasis> gen_covariant_family(const GnsData& g, std::size_t k,
                                               Strategy strategy,
                                               std::uint64_t seed,
                                               const Tolerance& tol);

/// One certified non-covariant subalgebra (rotated covariant base).
/// Throws Degenerate when the density is numerically tracial.
AlgebraBasis gen_noncovariant(const GnsData& g, std::uint64_t seed,
                              const Tolerance& tol);

// --- serialization (versioned JSON; complex numbers as [re, im], matrices
// as row-major nested arrays) ---

struct InstanceArtifacts {
  Matrix density;
  std::vector<Matrix> algebra_basis;
  std::vector<std::vector<Matrix>> subalgebra_bases;
};

struct SerializedInstance {
  InstanceSpec spec;
  std::optional<InstanceArtifacts> artifacts;
};

std::string serialize_instance(const InstanceSpec& spec,
                               const Instance* computed = nullptr);
SerializedInstance deserialize_instance(const std::string& text);

/// Canonical text of the spec alone; the suite's record key is a 64-bit
/// FNV-1a hash of this string.
std::string canonical_spec_text(const InstanceSpec& spec);
std::string spec_hash(const InstanceSpec& spec);

/// Rebuild an Instance from a deserialized file, preferring stored
/// artifacts when present (validated), else rebuilding from the spec.
Instance instance_from_serialized(const SerializedInstance& si,
                                  const Tolerance& tol);

}  // namespace vna
