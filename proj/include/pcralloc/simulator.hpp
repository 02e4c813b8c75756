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

#ifndef PCRALLOC_SIMULATOR_HPP
#define PCRALLOC_SIMULATOR_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcralloc/allocator.hpp"
#include "pcralloc/generator.hpp"
#include "pcralloc/prioritizer.hpp"
#include "pcralloc/scene.hpp"

namespace pcralloc {

struct TraceInterval {
  double duration_s = 0.0;      // > 0
  std::int64_t budget_bps = 0;  // >= 0
  ViewState view;
};

/// Time series of bandwidth budgets and camera poses, one row per interval.
struct SessionTrace {
  std::vector<TraceInterval> intervals;
};

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delimited text, one row per interval:
///   interval_index,duration_s,budget_bps,cam_x,cam_y,cam_z,
///   fwd_x,fwd_y,fwd_z,fov_half_deg,near_threshold
/// A leading header row and '#' comment lines are accepted. The forward
/// vector is normalized on load.
SessionTrace load_trace(std::string_view text);
SessionTrace load_trace_file(const std::string& path);
std::string serialize_trace(const SessionTrace& trace);
void save_trace_file(const SessionTrace& trace, const std::string& path);

/// Outcome of one interval; allocation is empty when the interval's budget
/// was below W_min (infeasibility is data, not an error).
struct IntervalOutcome {
  double duration_s = 0.0;
  std::int64_t budget_bps = 0;
  std::int64_t w_min_bps = 0;
  std::optional<Allocation> allocation;
};

struct ClassBitrateStat {
  std::int64_t total_bps = 0;
  std::uint64_t samples = 0;  // (interval, model) pairs in this class

  double mean_bps() const {
    return samples == 0 ? 0.0
                        : static_cast<double>(total_bps) / static_cast<double>(samples);
  }
};

/// Per-session aggregates. All aggregate fields recompute exactly from the
/// per-interval outcomes; feasible intervals only, except where noted.
struct SessionReport {
  std::vector<IntervalOutcome> intervals;
  int feasible_intervals = 0;
  int infeasible_intervals = 0;
  /// Sum of per-interval total quality.
  Rational quality_sum;
  /// Sum(duration x quality) / sum(duration) over feasible intervals.
  double time_weighted_mean_quality = 0.0;
  /// Chosen-bitrate statistics grouped by the class assigned per interval.
  std::array<ClassBitrateStat, 3> class_bitrate;
  /// Per model: count of consecutive feasible interval pairs whose chosen
  /// level differs.
  std::map<std::string, int> level_switches;
};

/// Replays the trace: each interval independently runs prioritize with its
/// own view, then allocate with its own budget (no budget carry-over).
/// Intervals run in parallel when OpenMP is enabled; the report preserves
/// trace order and is identical to the serial result.
SessionReport run_session(const Scene& scene, const SessionTrace& trace,
                          const PrioritizationConfig& config);

/// Single-threaded reference for run_session; must produce identical output.
SessionReport run_session_serial(const Scene& scene, const SessionTrace& trace,
                                 const PrioritizationConfig& config);

/// Synthetic trace for a scene: budgets sampled in [W_min, sum of highest
/// bitrates] (below W_min with params.infeasible_probability), views sampled
/// from the generator's geometry ranges. Deterministic under seed.
SessionTrace generate_trace(const GeneratorParams& params, const Scene& scene,
                            int interval_count, std::uint64_t seed);

}  // namespace pcralloc

#endif  // PCRALLOC_SIMULATOR_HPP
