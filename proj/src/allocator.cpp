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

#include "pcralloc/allocator.hpp"

#include <algorithm>
#include <cassert>

namespace pcralloc {

InfeasibleBudget::InfeasibleBudget(std::int64_t budget_bps, std::int64_t w_min_bps)
    : std::runtime_error("infeasible budget: W=" + std::to_string(budget_bps) +
                         " bps is below W_min=" + std::to_string(w_min_bps) +
                         " bps"),
      budget_bps_(budget_bps),
      w_min_bps_(w_min_bps) {}

std::int64_t w_min(const Scene& scene) {
  std::int64_t sum = 0;
  for (const auto& model : scene.models) sum += model.ladder.minimum_bps();
  return sum;
}

std::int64_t w_min(const std::vector<PrioritizedModel>& models) {
  std::int64_t sum = 0;
  for (const auto& tagged : models) sum += tagged.model->ladder.minimum_bps();
  return sum;
}

Allocation allocate(const std::vector<PrioritizedModel>& prioritized,
                    std::int64_t budget_bps) {
#ifndef NDEBUG
  for (std::size_t i = 0; i + 1 < prioritized.size(); ++i) {
    assert(prioritized[i].coefficient >= prioritized[i + 1].coefficient);
  }
#endif
  const std::size_t n = prioritized.size();
  const std::int64_t minimum_total = w_min(prioritized);
  if (budget_bps < minimum_total) {
    throw InfeasibleBudget(budget_bps, minimum_total);
  }

  Allocation out;
  out.budget_bps = budget_bps;
  out.trail.w_min = minimum_total;
  out.trail.boundary_index = n;
  out.trail.w_sequence.reserve(n + 1);
  out.entries.reserve(n);

  // One pass over the (priority-ordered, hence scattered) models copies ids
  // and ladders into flat storage; the walk below then touches nothing else.
  const std::size_t level_count =
      n == 0 ? 0 : prioritized.front().model->ladder.levels_bps.size();
  std::vector<std::int64_t> ladders(n * level_count);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& tagged = *prioritized[i].model;
    assert(tagged.ladder.levels_bps.size() == level_count);  // shared L+1
    AllocationEntry entry;
    entry.model_id = tagged.id;
    entry.cls = prioritized[i].cls;
    entry.coefficient = prioritized[i].coefficient;
    out.entries.push_back(std::move(entry));
    std::copy(tagged.ladder.levels_bps.begin(), tagged.ladder.levels_bps.end(),
              ladders.begin() + i * level_count);
  }

  std::int64_t residual = budget_bps - minimum_total;  // W_0
  out.trail.w_sequence.push_back(residual);

  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t* levels = ladders.data() + i * level_count;
    const std::int64_t minimum = levels[level_count - 1];

    // Lowest level index whose bitrate fits the residual plus this model's
    // minimum; the minimum level itself always does. Compared as an upgrade
    // delta so huge budgets cannot overflow.
    std::size_t chosen = 0;
    while (levels[chosen] - minimum > residual) ++chosen;
    if (chosen > 0 && out.trail.boundary_index == n) {
      out.trail.boundary_index = i;
    }

    residual -= levels[chosen] - minimum;
    out.trail.w_sequence.push_back(residual);

    AllocationEntry& entry = out.entries[i];
    entry.level = static_cast<int>(chosen);
    entry.bitrate_bps = levels[chosen];
    entry.quality = entry.coefficient * Rational(entry.bitrate_bps);
    out.total_bitrate_bps += entry.bitrate_bps;
    out.total_quality += entry.quality;
  }

  out.residual_budget_bps = budget_bps - out.total_bitrate_bps;
  assert(out.residual_budget_bps == residual);
  return out;
}

Rational total_quality(const Allocation& allocation) {
  Rational sum;
  for (const auto& entry : allocation.entries) sum += entry.quality;
  return sum;
}

}  // namespace pcralloc
