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

// AVX2 kernels.  Two complex doubles per 256-bit vector, interleaved
// [re0, im0, re1, im1].  Compiled with -mavx2 -mfma; only dispatched when
// the CPU reports both features.

#include <algorithm>

#include <immintrin.h>

#include "vna/simd/kernels.hpp"

namespace vna::simd {
namespace {

// alpha * v for two packed complex values; ar/ai hold alpha broadcast.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d vswap = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vswap));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex dot_conj_avx2(std::size_t n, const Complex* a, const Complex* b) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d vre = _mm256_setzero_pd();
  __m256d vim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d vbswap = _mm256_permute_pd(vb, 0b0101);
    vre = _mm256_fmadd_pd(va, vb, vre);
    vim = _mm256_fmadd_pd(va, vbswap, vim);
  }
  // im per pair = even lane - odd lane
  const __m256d signs = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  double re = hsum(vre);
  double im = hsum(_mm256_xor_pd(vim, signs));
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double norm_sq_avx2(std::size_t n, const Complex* a) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void axpy_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, cmul_broadcast(ar, ai, vx)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Complex(alpha.real() * xr - alpha.imag() * xi,
                    alpha.real() * xi + alpha.imag() * xr);
  }
}

void scale_avx2(std::size_t n, Complex alpha, Complex* x) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  double* px = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(px + 2 * i, cmul_broadcast(ar, ai, vx));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = Complex(alpha.real() * xr - alpha.imag() * xi,
                   alpha.real() * xi + alpha.imag() * xr);
  }
}

void rot_avx2(std::size_t n, Complex* x, Complex* y, double c, Complex s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  // -conj(s)
  const __m256d mr = _mm256_set1_pd(-s.real());
  const __m256d mi = _mm256_set1_pd(s.imag());
  double* px = reinterpret_cast<double*>(x);
  double* py = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d vy = _mm256_loadu_pd(py + 2 * i);
    const __m256d nx =
        _mm256_add_pd(_mm256_mul_pd(vc, vx), cmul_broadcast(sr, si, vy));
    const __m256d ny =
        _mm256_add_pd(cmul_broadcast(mr, mi, vx), _mm256_mul_pd(vc, vy));
    _mm256_storeu_pd(px + 2 * i, nx);
    _mm256_storeu_pd(py + 2 * i, ny);
  }
  const Complex sc = std::conj(s);
  for (; i < n; ++i) {
    const Complex xi = x[i], yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -sc * xi + c * yi;
  }
}

void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
               const Complex* b, Complex* c) {
  if (m == 0 || n == 0) return;
  std::fill(c, c + m * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Complex ail = a[i * k + l];
      if (ail == Complex(0.0, 0.0)) continue;
      axpy_avx2(n, ail, b + l * n, crow);
    }
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k = {"avx2",    dot_conj_avx2, norm_sq_avx2, axpy_avx2,
                            scale_avx2, rot_avx2,     gemm_avx2};
  return k;
}

}  // namespace vna::simd
