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

#include "vna/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "vna/lattice.hpp"
#include "vna/rng.hpp"

namespace vna {
namespace {

using nlohmann::json;

const double kFlowTimes[] = {0.5, -0.5, 1.0, 2.0};

std::string instance_label(const InstanceSpec& spec) {
  std::string kind;
  switch (spec.algebra_gen.kind) {
    case AlgebraGenSpec::Kind::full: kind = "full"; break;
    case AlgebraGenSpec::Kind::tensor:
      kind = "tensor(" + std::to_string(spec.algebra_gen.factor1) + "," +
             std::to_string(spec.algebra_gen.factor2) + ")";
      break;
    case AlgebraGenSpec::Kind::generated:
      kind = "generated(" + std::to_string(spec.algebra_gen.generator_count) + ")";
      break;
  }
  return kind + " n=" + std::to_string(spec.ambient_dim) +
         " subs=" + std::to_string(spec.subalgebras.size()) +
         " seed=" + std::to_string(spec.seed);
}

void run_instance(const InstanceSpec& spec, const Tolerance& tol,
                  const SuiteThresholds& th, InstanceRecord& rec) {
  const Instance inst = build_instance(spec, tol);
  const GnsData g = gns_construct({inst.algebra, inst.density}, tol);

  const ModularChecks mc = modular_checks(g, kFlowTimes, tol);
  rec.gram_error = mc.gram_error;
  rec.s_action = mc.s_action;
  rec.recomposition = mc.recomposition;
  rec.fundamental_fwd = mc.jmj_in_commutant;
  rec.fundamental_bwd = mc.commutant_in_jmj;
  rec.flow_preserves = mc.flow_preserves_algebra;
  rec.flow_invariance = mc.flow_invariance;

  rec.intended_covariant = inst.intended_covariant;

  std::vector<Matrix> all_projections;
  std::vector<AlgebraBasis> covariant_family;
  std::vector<Matrix> covariant_projections;

  for (std::size_t i = 0; i < inst.subalgebras.size(); ++i) {
    const AlgebraBasis& n = inst.subalgebras[i];
    JonesData jd = jones_projection(g, n, tol);
    rec.covariance_flags.push_back(jd.covariant);
    all_projections.push_back(jd.e);

    bool expectation_exists = false;
    try {
      const Matrix e_map = conditional_expectation(g, jd, tol);
      expectation_exists = true;
      if (jd.covariant) {
        const ExpectationReport er = verify_expectation(g, jd, e_map, tol);
        rec.max_expectation_err =
            std::max({rec.max_expectation_err, er.idempotent_err,
                      er.bimodule_err, er.phi_invariance_err, er.range_err});
        if (!er.positivity_flag) rec.takesaki_consistent = false;
      }
    } catch (const NotCovariant&) {
      expectation_exists = false;
    }
    if (expectation_exists != jd.covariant) rec.takesaki_consistent = false;

    if (jd.covariant) {
      covariant_family.push_back(n);
      covariant_projections.push_back(jd.e);

      const LemmaReport lr = lemma_eprime_check(g, jd, tol);
      rec.max_lemma_residual =
          std::max({rec.max_lemma_residual, lr.forward_residual,
                    lr.backward_residual});

      const PropLxiReport pr = prop_lxi_check(g, jd, 20, tol);
      rec.max_prop_residual =
          std::max({rec.max_prop_residual, pr.max_e_commutation,
                    pr.max_commutant_commutation, pr.max_exchange_residual});

      rec.max_commutation_delta =
          std::max(rec.max_commutation_delta,
                   commutator_norm(jd.e, g.modular.delta));
      rec.max_commutation_j =
          std::max(rec.max_commutation_j,
                   frobenius_distance(jd.e * g.modular.j.coeff,
                                      g.modular.j.coeff * jd.e.conj()));
    }
  }

  if (!covariant_family.empty()) {
    const TheoremReport tr = theorem_check(g, covariant_family, tol, false);
    rec.theorem_verdict = tr.verdict_norm;
    rec.containment_residual = tr.containment_residual;
    rec.intersection_covariant = tr.intersection_certificate.covariant;
  }
  if (!inst.subalgebras.empty()) {
    const TheoremReport tr = theorem_check(g, inst.subalgebras, tol, false);
    rec.rigidity_verdict = tr.verdict_norm;
    rec.containment_residual =
        std::max(rec.containment_residual, tr.containment_residual);

    const MeetResult exact = meet_exact(all_projections, tol);
    const MeetResult alt = meet_alternating(all_projections, tol);
    rec.meet_iterations = alt.iterations;
    rec.meet_agreement = frobenius_distance(exact.meet, alt.meet);
  }

  rec.max_residual = std::max(
      {rec.gram_error, rec.s_action, rec.recomposition, rec.fundamental_fwd,
       rec.fundamental_bwd, rec.flow_preserves, rec.flow_invariance,
       rec.max_expectation_err, rec.max_lemma_residual, rec.max_prop_residual,
       rec.max_commutation_delta, rec.max_commutation_j, rec.theorem_verdict,
       rec.rigidity_verdict, rec.containment_residual, rec.meet_agreement});

  rec.passed =
      rec.takesaki_consistent && rec.gram_error <= th.modular_oracle &&
      rec.s_action <= th.s_action && rec.recomposition <= th.recomposition &&
      rec.fundamental_fwd <= th.fundamental_relations &&
      rec.fundamental_bwd <= th.fundamental_relations &&
      rec.flow_preserves <= th.fundamental_relations &&
      rec.flow_invariance <= th.fundamental_relations &&
      rec.max_expectation_err <= th.expectation &&
      rec.max_lemma_residual <= th.lemma &&
      rec.max_prop_residual <= th.proposition &&
      rec.max_commutation_delta <= th.commutation &&
      rec.max_commutation_j <= th.commutation &&
      rec.theorem_verdict <= th.theorem &&
      rec.rigidity_verdict <= th.theorem &&
      rec.containment_residual <= th.theorem &&
      rec.meet_agreement <= th.meet_agreement;
  for (std::size_t i = 0; i < rec.covariance_flags.size(); ++i)
    if (rec.covariance_flags[i] != rec.intended_covariant[i]) rec.passed = false;
  rec.ok = true;
}

}  // namespace

SuiteReport run_suite(const std::vector<InstanceSpec>& specs,
                      const Tolerance& tol, const SuiteThresholds& thresholds) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  for (const InstanceSpec& spec : specs) {
    InstanceRecord rec;
    rec.hash = spec_hash(spec);
    rec.label = instance_label(spec);
    try {
      run_instance(spec, tol, thresholds, rec);
    } catch (const Error& e) {
      rec.ok = false;
      rec.passed = false;
      rec.error = e.what();
    }
    report.records.push_back(std::move(rec));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const InstanceRecord& a, const InstanceRecord& b) {
                     return a.hash < b.hash;
                   });

  report.summary.instances = report.records.size();
  for (const InstanceRecord& r : report.records) {
    if (r.passed)
      ++report.summary.passed;
    else
      ++report.summary.failed;
    report.summary.max_residual =
        std::max(report.summary.max_residual, r.max_residual);
  }
  report.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<InstanceSpec> make_random_specs(std::size_t count,
                                            std::uint64_t seed,
                                            const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw Error("make_random_specs: no dimensions given");
  SplitMix64 rng(seed);
  std::vector<InstanceSpec> specs;
  for (std::size_t i = 0; i < count; ++i) {
    InstanceSpec spec;
    spec.seed = rng.next();
    spec.ambient_dim = dims[rng.next() % dims.size()];
    spec.density.kind = DensitySpec::Kind::dirichlet;

    const bool can_tensor = spec.ambient_dim >= 4 && spec.ambient_dim % 2 == 0;
    const std::uint64_t pick = rng.next() % 4;
    if (can_tensor && pick == 0) {
      spec.algebra_gen.kind = AlgebraGenSpec::Kind::tensor;
      spec.algebra_gen.factor1 = 2;
      spec.algebra_gen.factor2 = spec.ambient_dim / 2;
      SubalgebraSpec a, b;
      a.strategy = Strategy::tensor_factor;
      a.factor = 0;
      a.diagonal_factor = rng.next() % 2 == 1;
      b.strategy = Strategy::tensor_factor;
      b.factor = 1;
      b.diagonal_factor = rng.next() % 2 == 1;
      spec.subalgebras = {a, b};
      if (rng.next() % 2 == 0) {
        SubalgebraSpec c;
        c.strategy = Strategy::spectral_diagonal;
        spec.subalgebras.push_back(c);
      }
    } else if (pick == 1) {
      spec.algebra_gen.kind = AlgebraGenSpec::Kind::generated;
      spec.algebra_gen.generator_count = 1 + rng.next() % 2;
      SubalgebraSpec a, b;
      a.strategy = Strategy::density_commutant;
      a.generators = 1;
      b.strategy = Strategy::density_commutant;
      b.generators = 2;
      spec.subalgebras = {a, b};
    } else {
      spec.algebra_gen.kind = AlgebraGenSpec::Kind::full;
      SubalgebraSpec a, b;
      a.strategy = Strategy::spectral_diagonal;
      b.strategy = Strategy::density_commutant;
      b.generators = 1 + rng.next() % 2;
      spec.subalgebras = {a, b};
      if (rng.next() % 2 == 0) {
        SubalgebraSpec c;
        c.strategy = Strategy::rotated;
        spec.subalgebras.push_back(c);
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::string report_to_json(const SuiteReport& report, bool include_wall_time) {
  json records = json::array();
  for (const InstanceRecord& r : report.records) {
    json rec = {{"hash", r.hash},
                {"label", r.label},
                {"ok", r.ok},
                {"passed", r.passed},
                {"covariance_flags", r.covariance_flags},
                {"intended_covariant", r.intended_covariant},
                {"takesaki_consistent", r.takesaki_consistent},
                {"gram_error", r.gram_error},
                {"s_action", r.s_action},
                {"recomposition", r.recomposition},
                {"fundamental_fwd", r.fundamental_fwd},
                {"fundamental_bwd", r.fundamental_bwd},
                {"flow_preserves", r.flow_preserves},
                {"flow_invariance", r.flow_invariance},
                {"max_expectation_err", r.max_expectation_err},
                {"max_lemma_residual", r.max_lemma_residual},
                {"max_prop_residual", r.max_prop_residual},
                {"max_commutation_delta", r.max_commutation_delta},
                {"max_commutation_j", r.max_commutation_j},
                {"theorem_verdict", r.theorem_verdict},
                {"rigidity_verdict", r.rigidity_verdict},
                {"containment_residual", r.containment_residual},
                {"intersection_covariant", r.intersection_covariant},
                {"meet_iterations", r.meet_iterations},
                {"meet_agreement", r.meet_agreement},
                {"max_residual", r.max_residual}};
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(std::move(rec));
  }
  json summary = {{"instances", report.summary.instances},
                  {"passed", report.summary.passed},
                  {"failed", report.summary.failed},
                  {"max_residual", report.summary.max_residual}};
  if (include_wall_time) summary["wall_seconds"] = report.summary.wall_seconds;
  const json doc = {{"schema_version", 1},
                    {"records", std::move(records)},
                    {"summary", std::move(summary)}};
  return doc.dump(2) + "\n";
}

std::string report_to_table(const SuiteReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-16s  %-34s  %-6s  %-10s  %s\n", "hash",
                "instance", "pass", "max resid", "notes");
  out += line;
  for (const InstanceRecord& r : report.records) {
    std::snprintf(line, sizeof(line), "%-16s  %-34s  %-6s  %-10.2e  %s\n",
                  r.hash.c_str(), r.label.c_str(), r.passed ? "yes" : "NO",
                  r.max_residual, r.error.c_str());
    out += line;
  }
  std::snprintf(line, sizeof(line),
                "instances %zu, passed %zu, failed %zu, max residual %.2e, "
                "wall %.2fs\n",
                report.summary.instances, report.summary.passed,
                report.summary.failed, report.summary.max_residual,
                report.summary.wall_seconds);
  out += line;
  return out;
}

}  // namespace vna
