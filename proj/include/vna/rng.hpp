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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "vna/matrix.hpp"

namespace vna {

/// SplitMix64: the fixture PRNG.  The exact update is part of the file
/// format contract so serialized instances reproduce bit-for-bit:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
/// Doubles are (z >> 11) * 2^-53 in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Box-Muller; two uniforms per call, no state beyond the counter.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Derive an independent stream (for per-instance sub-seeding).
  std::uint64_t fork(std::uint64_t salt) {
    SplitMix64 mixer(state_ ^ (salt * 0x9E3779B97F4A7C15ULL));
    return mixer.next();
  }

 private:
  std::uint64_t state_;
};

/// Symmetric Dirichlet(alpha = 2) draw on the k-simplex via normalized
/// Gamma(2) variates, clamped below and renormalized so the smallest
/// weight keeps a faithfulness and conditioning margin.
std::vector<double> dirichlet_weights(SplitMix64& rng, std::size_t k,
                                      double floor);

/// Haar-ish random unitary: Gram-Schmidt of a complex Gaussian matrix.
Matrix random_unitary(SplitMix64& rng, std::size_t n);

/// Random Hermitian matrix with unit Frobenius scale.
Matrix random_hermitian(SplitMix64& rng, std::size_t n);

/// Random complex matrix with i.i.d. Gaussian entries.
Matrix random_gaussian_matrix(SplitMix64& rng, std::size_t rows,
                              std::size_t cols);

Vector random_gaussian_vector(SplitMix64& rng, std::size_t n);

}  // namespace vna
