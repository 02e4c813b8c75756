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

#ifndef PCRALLOC_ALLOCATOR_HPP
#define PCRALLOC_ALLOCATOR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcralloc/scene.hpp"

namespace pcralloc {

/// Budget accounting of one allocator run. w_sequence holds the residual
/// upgrade budgets W_0..W_n where W_0 = W - w_min and
/// W_i = W_{i-1} - (chosen bitrate_i - minimum bitrate_i); it is
/// non-increasing and non-negative. boundary_index is the first model (in
/// priority order) that could not be upgraded to level 0, or n if all were.
struct BudgetTrail {
  std::int64_t w_min = 0;
  std::vector<std::int64_t> w_sequence;
  std::size_t boundary_index = 0;
};

struct AllocationEntry {
  std::string model_id;
  PriorityClass cls = PriorityClass::C3;
  Rational coefficient;
  int level = 0;                 // chosen level index, 0 = highest bitrate
  std::int64_t bitrate_bps = 0;  // chosen bitrate
  Rational quality;              // coefficient x bitrate
};

/// Result of one allocator run: one entry per model in priority order,
/// totals and the budget trail. total_bitrate_bps <= budget_bps always.
struct Allocation {
  std::vector<AllocationEntry> entries;
  std::int64_t budget_bps = 0;
  std::int64_t total_bitrate_bps = 0;
  std::int64_t residual_budget_bps = 0;
  Rational total_quality;
  BudgetTrail trail;
};

/// Budget below the feasibility floor W_min (the sum of minimum-level
/// bitrates); the request cannot deliver every model.
class InfeasibleBudget : public std::runtime_error {
 public:
  InfeasibleBudget(std::int64_t budget_bps, std::int64_t w_min_bps);

  std::int64_t budget_bps() const { return budget_bps_; }
  std::int64_t w_min_bps() const { return w_min_bps_; }

 private:
  std::int64_t budget_bps_;
  std::int64_t w_min_bps_;
};

/// Sum of every model's minimum-level bitrate, the feasibility floor.
std::int64_t w_min(const Scene& scene);
std::int64_t w_min(const std::vector<PrioritizedModel>& models);

/// The rate-allocation heuristic. Starting from the minimum level for every
/// model, walks the priority-sorted list upgrading each model to level 0 as
/// long as the upgrade fits the residual budget; from the first model where
/// it does not (the boundary), gives each remaining model the lowest level
/// index L' whose bitrate fits the residual plus its own minimum.
///
/// Requires `prioritized` sorted as produced by prioritize. Throws
/// InfeasibleBudget when budget_bps < W_min.
Allocation allocate(const std::vector<PrioritizedModel>& prioritized,
                    std::int64_t budget_bps);

/// Recomputes the sum of coefficient x chosen bitrate over all entries.
Rational total_quality(const Allocation& allocation);

}  // namespace pcralloc

#endif  // PCRALLOC_ALLOCATOR_HPP
