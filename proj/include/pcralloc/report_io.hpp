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

#ifndef PCRALLOC_REPORT_IO_HPP
#define PCRALLOC_REPORT_IO_HPP

#include <string>

#include "pcralloc/allocator.hpp"
#include "pcralloc/oracle.hpp"
#include "pcralloc/simulator.hpp"

namespace pcralloc {

// All serializers are byte-deterministic for equal inputs. Quality values
// are exact decimal strings (or num/den for non-terminating fractions).

/// One row per model (priority order): id, class, level, bitrate, quality;
/// followed by '#' summary lines with totals and the budget trail.
std::string allocation_to_csv(const Allocation& allocation);
std::string allocation_to_json(const Allocation& allocation);

/// Per-interval rows: index, duration, budget, feasible flag and totals.
std::string session_intervals_csv(const SessionReport& report);
/// One row per (interval, model) pair with the chosen level and quality.
std::string session_allocations_csv(const SessionReport& report);
/// Aggregates: quality sums, per-class bitrate means, switch counts.
std::string session_report_json(const SessionReport& report);

/// Columns: trial,n,L,W,heuristic_q,optimal_q,abs_gap,rel_gap,paper_bound_term.
std::string gap_to_csv(const GapReport& report);
std::string gap_summary_json(const GapReport& report);

void write_file(const std::string& path, const std::string& content);

}  // namespace pcralloc

#endif  // PCRALLOC_REPORT_IO_HPP
