// Copyright 2026 The pcralloc Authors
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

#include "pcralloc/oracle.hpp"

#include <algorithm>

#include "pcralloc/allocator.hpp"
#include "pcralloc/prioritizer.hpp"

namespace pcralloc {

namespace {

struct Enumeration {
  const std::vector<PrioritizedModel>* models = nullptr;
  std::int64_t budget = 0;
  std::vector<std::int64_t> suffix_min;  // sum of minimum bitrates from i on
  std::vector<int> current;
  OracleResult result;
  bool found = false;

  // Depth-first over level vectors in ascending lexicographic order, so the
  // first maximizer seen is the lexicographically smallest one.
  void walk(std::size_t i, std::int64_t spent, const Rational& quality) {
    const auto& list = *models;
    if (i == list.size()) {
      ++result.enumerated_count;
      if (!found || quality > result.optimal_quality) {
        found = true;
        result.optimal_quality = quality;
        result.optimal_levels = current;
      }
      return;
    }
    const auto& ladder = list[i].model->ladder.levels_bps;
    const std::int64_t rest = suffix_min[i + 1];
    for (std::size_t k = 0; k < ladder.size(); ++k) {
      if (spent + ladder[k] + rest > budget) continue;  // subtree infeasible
      current[i] = static_cast<int>(k);
      walk(i + 1, spent + ladder[k],
           quality + list[i].coefficient * Rational(ladder[k]));
    }
  }
};

GapRow run_trial(const GeneratorParams& params, std::uint64_t seed,
                 std::uint64_t trial, const PriorityWeights& weights,
                 std::size_t cap) {
  GeneratedInstance instance = make_instance(params, seed, trial);
  PrioritizationConfig config;
  config.weights = weights;
  auto prioritized = prioritize_serial(instance.scene, instance.view, config);

  Allocation heuristic = allocate(prioritized, instance.budget_bps);
  OracleResult oracle = solve_exact(prioritized, instance.budget_bps, cap);

  GapRow row;
  row.trial = trial;
  row.model_count = instance.scene.model_count();
  row.max_level = instance.scene.max_level();
  row.budget_bps = instance.budget_bps;
  row.heuristic_quality = heuristic.total_quality;
  row.optimal_quality = oracle.optimal_quality;
  row.abs_gap = oracle.optimal_quality - heuristic.total_quality;
  row.rel_gap = oracle.optimal_quality == Rational(0)
                    ? 0.0
                    : row.abs_gap.to_double() / oracle.optimal_quality.to_double();
  const auto& trail = heuristic.trail;
  row.paper_bound_term = trail.boundary_index < heuristic.entries.size()
                             ? trail.w_sequence[trail.boundary_index + 1]
                             : 0;
  return row;
}

// Trials execute inside a parallel region, so anything that could throw
// there (infeasible budgets, oracle cap) is rejected up front.
void check_gap_params(const GeneratorParams& params, std::size_t cap) {
  if (auto errors = validate_params(params); !errors.empty()) {
    throw std::invalid_argument("bad generator params: " + errors.front());
  }
  if (params.infeasible_probability != 0.0) {
    throw std::invalid_argument(
        "gap report requires feasible budgets (infeasible_probability = 0)");
  }
  if (static_cast<std::size_t>(params.n_max) > cap) {
    throw OracleCapExceeded(params.n_max, cap);
  }
}

GapReport assemble(std::vector<GapRow> rows) {
  GapReport report;
  report.rows = std::move(rows);
  if (report.rows.empty()) return report;
  double sum_abs = 0.0, sum_rel = 0.0;
  report.min_abs_gap = report.max_abs_gap = report.rows.front().abs_gap.to_double();
  report.min_rel_gap = report.max_rel_gap = report.rows.front().rel_gap;
  for (const auto& row : report.rows) {
    double abs = row.abs_gap.to_double();
    sum_abs += abs;
    sum_rel += row.rel_gap;
    report.min_abs_gap = std::min(report.min_abs_gap, abs);
    report.max_abs_gap = std::max(report.max_abs_gap, abs);
    report.min_rel_gap = std::min(report.min_rel_gap, row.rel_gap);
    report.max_rel_gap = std::max(report.max_rel_gap, row.rel_gap);
  }
  report.mean_abs_gap = sum_abs / static_cast<double>(report.rows.size());
  report.mean_rel_gap = sum_rel / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace

OracleResult solve_exact(const std::vector<PrioritizedModel>& prioritized,
                         std::int64_t budget_bps, std::size_t cap) {
  if (prioritized.size() > cap) {
    throw OracleCapExceeded(prioritized.size(), cap);
  }
  Enumeration state;
  state.models = &prioritized;
  state.budget = budget_bps;
  state.suffix_min.assign(prioritized.size() + 1, 0);
  for (std::size_t i = prioritized.size(); i-- > 0;) {
    state.suffix_min[i] =
        state.suffix_min[i + 1] + prioritized[i].model->ladder.minimum_bps();
  }
  if (state.suffix_min[0] > budget_bps) {
    throw InfeasibleBudget(budget_bps, state.suffix_min[0]);
  }
  state.current.assign(prioritized.size(), 0);
  state.walk(0, 0, Rational(0));
  return std::move(state.result);
}

GapReport gap_report(const GeneratorParams& params, std::uint64_t trials,
                     std::uint64_t seed, const PriorityWeights& weights,
                     std::size_t cap) {
  check_gap_params(params, cap);
  std::vector<GapRow> rows(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < count; ++t) {
    rows[t] = run_trial(params, seed, static_cast<std::uint64_t>(t), weights, cap);
  }
  return assemble(std::move(rows));
}

GapReport gap_report_serial(const GeneratorParams& params, std::uint64_t trials,
                            std::uint64_t seed, const PriorityWeights& weights,
                            std::size_t cap) {
  check_gap_params(params, cap);
  std::vector<GapRow> rows(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    rows[t] = run_trial(params, seed, t, weights, cap);
  }
  return assemble(std::move(rows));
}

}  // namespace pcralloc
