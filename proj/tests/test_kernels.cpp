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

#include <array>
#include <cmath>
#include <vector>

#include "vna/rng.hpp"
#include "vna/simd/kernels.hpp"

using namespace vna;
using simd::Kernels;

namespace {

std::vector<Complex> random_buf(SplitMix64& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.cgaussian();
  return v;
}

// Sizes cover empty, sub-vector, odd tails, and multi-register spans.
const std::size_t kSizes[] = {0, 1, 2, 3, 5, 8, 16, 33, 64, 257};

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
  if (!simd::avx2_supported()) {
    MESSAGE("AVX2 unavailable; equivalence suite skipped");
    return;
  }
  const Kernels& ref = simd::scalar_kernels();
  const Kernels& vec = simd::avx2_kernels();
  SplitMix64 rng(0x51eadULL);

  for (std::size_t n : kSizes) {
    const auto a = random_buf(rng, n);
    const auto b = random_buf(rng, n);

    // dot_conj and norm_sq: reassociation-level agreement.
    const Complex d0 = ref.dot_conj(n, a.data(), b.data());
    const Complex d1 = vec.dot_conj(n, a.data(), b.data());
    CHECK(std::abs(d0 - d1) <= 1e-12 * (1.0 + std::abs(d0)));
    CHECK(ref.norm_sq(n, a.data()) ==
          doctest::Approx(vec.norm_sq(n, a.data())).epsilon(1e-12));

    const Complex alpha = rng.cgaussian();
    auto y0 = b, y1 = b;
    ref.axpy(n, alpha, a.data(), y0.data());
    vec.axpy(n, alpha, a.data(), y1.data());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(y0[i] - y1[i]) <= 1e-13 * (1.0 + std::abs(y0[i])));

    auto s0 = a, s1 = a;
    ref.scale(n, alpha, s0.data());
    vec.scale(n, alpha, s1.data());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(s0[i] - s1[i]) <= 1e-13 * (1.0 + std::abs(s0[i])));

    const double c = std::cos(0.7);
    const Complex s = std::sin(0.7) * Complex(0.6, -0.8);
    auto x0 = a, x1 = a, z0 = b, z1 = b;
    ref.rot(n, x0.data(), z0.data(), c, s);
    vec.rot(n, x1.data(), z1.data(), c, s);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(x0[i] - x1[i]) <= 1e-13 * (1.0 + std::abs(x0[i])));
      CHECK(std::abs(z0[i] - z1[i]) <= 1e-13 * (1.0 + std::abs(z0[i])));
    }
  }

  // gemm on assorted shapes.
  for (auto [m, k, n] : {std::array<std::size_t, 3>{1, 1, 1},
                         std::array<std::size_t, 3>{2, 3, 4},
                         std::array<std::size_t, 3>{5, 7, 3},
                         std::array<std::size_t, 3>{16, 16, 16},
                         std::array<std::size_t, 3>{33, 9, 17}}) {
    const auto a = random_buf(rng, m * k);
    const auto b = random_buf(rng, k * n);
    std::vector<Complex> c0(m * n), c1(m * n);
    ref.gemm(m, k, n, a.data(), b.data(), c0.data());
    vec.gemm(m, k, n, a.data(), b.data(), c1.data());
    for (std::size_t i = 0; i < m * n; ++i)
      CHECK(std::abs(c0[i] - c1[i]) <= 1e-12 * (1.0 + std::abs(c0[i])));
  }
}

TEST_CASE("kernel semantics on hand values") {
  const Kernels& k = simd::active();

  const std::vector<Complex> a = {{1, 2}, {3, -1}, {0, 1}};
  const std::vector<Complex> b = {{2, 0}, {1, 1}, {-1, 0}};
  // sum conj(a_i) b_i = (1-2i)(2) + (3+i)(1+i) + (-i)(-1)
  //                   = (2-4i) + (2+4i) + (i) = 4 + i
  const Complex d = k.dot_conj(3, a.data(), b.data());
  CHECK(std::abs(d - Complex(4, 1)) < 1e-14);

  CHECK(k.norm_sq(3, a.data()) == doctest::Approx(16.0));

  // rot with c=0, s=1 swaps with a sign.
  std::vector<Complex> x = {{1, 0}}, y = {{0, 1}};
  k.rot(1, x.data(), y.data(), 0.0, Complex(1, 0));
  CHECK(std::abs(x[0] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(y[0] - Complex(-1, 0)) < 1e-15);
}

TEST_CASE("backend selection is overridable") {
  const std::string before = simd::active().name;
  simd::set_active("scalar");
  CHECK(std::string(simd::active().name) == "scalar");
  CHECK_THROWS_AS(simd::set_active("neon"), Error);
  simd::set_active(before);
}
