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

#include <complex>
#include <cstddef>
#include <string>

namespace vna::simd {

using Complex = std::complex<double>;

// Dense complex-double kernels behind all matrix/vector arithmetic.
// One scalar reference implementation plus an AVX2 variant selected at
// runtime; both compute the same contracts:
//
//   dot_conj(n,a,b)        -> sum_i conj(a_i) * b_i
//   norm_sq(n,a)           -> sum_i |a_i|^2
//   axpy(n,alpha,x,y)      -> y_i += alpha * x_i
//   scale(n,alpha,x)       -> x_i *= alpha
//   rot(n,x,y,c,s)         -> [x_i, y_i] <- [c x_i + s y_i, -conj(s) x_i + c y_i]
//   gemm(m,k,n,A,B,C)      -> C = A * B  (row-major, C overwritten)
struct Kernels {
  const char* name;
  Complex (*dot_conj)(std::size_t n, const Complex* a, const Complex* b);
  double (*norm_sq)(std::size_t n, const Complex* a);
  void (*axpy)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
  void (*scale)(std::size_t n, Complex alpha, Complex* x);
  void (*rot)(std::size_t n, Complex* x, Complex* y, double c, Complex s);
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
               const Complex* b, Complex* c);
};

const Kernels& scalar_kernels();

// True when the CPU (and this build) can run the AVX2 variant.
bool avx2_supported();
const Kernels& avx2_kernels();

// Active backend: AVX2 when supported, scalar otherwise.  The environment
// variable VNA_SIMD=scalar|avx2 forces a choice at startup.
const Kernels& active();

// Force a backend by name ("scalar" or "avx2"); used by equivalence tests.
// Throws on unknown/unsupported names.
void set_active(const std::string& name);

}  // namespace vna::simd
