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

#ifndef PCRALLOC_ORACLE_HPP
#define PCRALLOC_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pcralloc/generator.hpp"
#include "pcralloc/scene.hpp"

namespace pcralloc {

/// Ground truth for small instances: the exact optimum of the
/// one-level-per-model selection under the budget.
struct OracleResult {
  Rational optimal_quality;
  std::vector<int> optimal_levels;  // one level index per model, input order
  std::uint64_t enumerated_count = 0;  // feasible complete assignments seen
};

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("oracle cap exceeded: " + std::to_string(n) +
                           " models > cap " + std::to_string(cap)) {}
};

/// Exhaustive enumeration (with remaining-minimum pruning) of one level per
/// model. Ties broken by the lexicographically smallest level vector.
/// Throws InfeasibleBudget when even all-minimum exceeds the budget and
/// OracleCapExceeded when the instance is too large to enumerate.
OracleResult solve_exact(const std::vector<PrioritizedModel>& prioritized,
                         std::int64_t budget_bps, std::size_t cap = 12);

/// One heuristic-vs-oracle comparison. paper_bound_term is the residual
/// upgrade budget left right after the boundary model was adapted (the
/// unspent headroom the heuristic could not convert into quality); the
/// absolute gap never exceeds it.
struct GapRow {
  std::uint64_t trial = 0;
  int model_count = 0;
  int max_level = 0;
  std::int64_t budget_bps = 0;
  Rational heuristic_quality;
  Rational optimal_quality;
  Rational abs_gap;
  double rel_gap = 0.0;
  std::int64_t paper_bound_term = 0;
};

struct GapReport {
  std::vector<GapRow> rows;
  double min_abs_gap = 0.0;
  double mean_abs_gap = 0.0;
  double max_abs_gap = 0.0;
  double min_rel_gap = 0.0;
  double mean_rel_gap = 0.0;
  double max_rel_gap = 0.0;
};

/// Runs `trials` random instances from (params, seed), solving each with the
/// heuristic and the oracle. Trials run in parallel when OpenMP is enabled;
/// per-trial seeds derive from (seed, trial) so the result is identical
/// either way. Generator params must keep n within the oracle cap.
GapReport gap_report(const GeneratorParams& params, std::uint64_t trials,
                     std::uint64_t seed,
                     const PriorityWeights& weights = PriorityWeights{},
                     std::size_t cap = 12);

/// Single-threaded reference for gap_report; must produce identical output.
GapReport gap_report_serial(const GeneratorParams& params, std::uint64_t trials,
                            std::uint64_t seed,
                            const PriorityWeights& weights = PriorityWeights{},
                            std::size_t cap = 12);

}  // namespace pcralloc

#endif  // PCRALLOC_ORACLE_HPP
