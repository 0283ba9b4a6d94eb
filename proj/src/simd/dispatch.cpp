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

#include <atomic>
#include <cstdlib>

#include "vna/errors.hpp"
#include "vna/simd/kernels.hpp"

namespace vna::simd {
namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* pick_default() {
  if (const char* env = std::getenv("VNA_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && avx2_supported()) return &avx2_kernels();
  }
  return avx2_supported() ? &avx2_kernels() : &scalar_kernels();
}

}  // namespace

bool avx2_supported() {
#ifdef VNA_HAVE_AVX2
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_default();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void set_active(const std::string& name) {
  if (name == "scalar") {
    g_active.store(&scalar_kernels(), std::memory_order_release);
  } else if (name == "avx2") {
    if (!avx2_supported()) throw Error("AVX2 backend not supported here");
    g_active.store(&avx2_kernels(), std::memory_order_release);
  } else {
    throw Error("unknown SIMD backend: " + name);
  }
}

#ifndef VNA_HAVE_AVX2
const Kernels& avx2_kernels() { throw Error("AVX2 kernels not built"); }
#endif

}  // namespace vna::simd
