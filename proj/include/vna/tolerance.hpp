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

#include <cstddef>

#include "vna/errors.hpp"

namespace vna {

/// Numerical thresholds shared by every operation.
///   rank_eps  — singular/eigenvalue cutoff for rank decisions
///   match_eps — equality-of-operators threshold
///   iter_eps  — convergence threshold for iterative methods
///   max_iter  — iteration cap for iterative methods
struct Tolerance {
  double rank_eps = 1e-9;
  double match_eps = 1e-8;
  double iter_eps = 1e-10;
  std::size_t max_iter = 10000;

  void validate() const {
    if (!(rank_eps > 0.0) || !(match_eps > 0.0) || !(iter_eps > 0.0) ||
        max_iter == 0)
      throw Error("Tolerance fields must be strictly positive");
    if (!(rank_eps < 1.0)) throw Error("rank_eps must be < 1");
  }
};

}  // namespace vna
