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

#include <string>
#include <vector>

#include "vna/scenario.hpp"

namespace vna {

/// Residual thresholds every suite instance is graded against.  They are
/// fixed here, not calibrated per run.
struct SuiteThresholds {
  double modular_oracle = 1e-8;     // Delta/J against the analytic oracle
  double fundamental_relations = 1e-8;
  double recomposition = 1e-10;
  double s_action = 1e-12;
  double expectation = 1e-8;
  double lemma = 1e-8;
  double proposition = 1e-8;
  double theorem = 1e-8;
  double commutation = 1e-8;
  double meet_agreement = 1e-6;
};

struct InstanceRecord {
  std::string hash;
  std::string label;
  bool ok = false;       // instance ran to completion
  std::string error;     // failure description when !ok
  bool passed = false;   // every graded check within threshold

  // modular apparatus
  double gram_error = 0.0;
  double s_action = 0.0;
  double recomposition = 0.0;
  double fundamental_fwd = 0.0;  // J rep(M) J inside commutant
  double fundamental_bwd = 0.0;
  double flow_preserves = 0.0;
  double flow_invariance = 0.0;

  // subalgebra family
  std::vector<bool> covariance_flags;
  std::vector<bool> intended_covariant;
  bool takesaki_consistent = true;  // covariant <=> expectation exists
  double max_expectation_err = 0.0;
  double max_lemma_residual = 0.0;
  double max_prop_residual = 0.0;
  double max_commutation_delta = 0.0;  // ||[e, Delta]|| on covariant e
  double max_commutation_j = 0.0;      // ||eJ - Je||

  // theorem verdict and meets
  double theorem_verdict = 0.0;
  double containment_residual = 0.0;
  bool intersection_covariant = false;
  double rigidity_verdict = 0.0;  // verdict over the full family (any covariance)
  std::size_t meet_iterations = 0;
  double meet_agreement = 0.0;

  double max_residual = 0.0;
};

struct SuiteSummary {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double max_residual = 0.0;
  double wall_seconds = 0.0;
};

struct SuiteReport {
  std::vector<InstanceRecord> records;  // sorted by spec hash
  SuiteSummary summary;
};

/// Runs every check on every instance; individual failures are recorded,
/// never abort the suite.  Deterministic given the specs.
SuiteReport run_suite(const std::vector<InstanceSpec>& specs,
                      const Tolerance& tol,
                      const SuiteThresholds& thresholds = {});

/// Deterministic randomized batch for `suite --count --seed --dims`.
std::vector<InstanceSpec> make_random_specs(std::size_t count,
                                            std::uint64_t seed,
                                            const std::vector<std::size_t>& dims);

/// Machine-readable form; wall time lives only in the summary so reports
/// are comparable across runs.
std::string report_to_json(const SuiteReport& report, bool include_wall_time);
std::string report_to_table(const SuiteReport& report);

}  // namespace vna
