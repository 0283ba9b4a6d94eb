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

// Scalar reference kernels.  These define the semantics; the AVX2 variant
// must agree with them within reassociation error.

#include <algorithm>

#include "vna/simd/kernels.hpp"

namespace vna::simd {
namespace {

Complex dot_conj_scalar(std::size_t n, const Complex* a, const Complex* b) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double norm_sq_scalar(std::size_t n, const Complex* a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return acc;
}

void axpy_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Complex(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void scale_scalar(std::size_t n, Complex alpha, Complex* x) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = Complex(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void rot_scalar(std::size_t n, Complex* x, Complex* y, double c, Complex s) {
  const Complex sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xi = x[i], yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -sc * xi + c * yi;
  }
}

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
                 const Complex* b, Complex* c) {
  if (m == 0 || n == 0) return;
  std::fill(c, c + m * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Complex ail = a[i * k + l];
      if (ail == Complex(0.0, 0.0)) continue;
      axpy_scalar(n, ail, b + l * n, crow);
    }
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {"scalar",      dot_conj_scalar, norm_sq_scalar,
                            axpy_scalar,   scale_scalar,    rot_scalar,
                            gemm_scalar};
  return k;
}

}  // namespace vna::simd
