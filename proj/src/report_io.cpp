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

#include "pcralloc/report_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace pcralloc {

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string trail_to_string(const BudgetTrail& trail) {
  std::string out;
  for (std::size_t i = 0; i < trail.w_sequence.size(); ++i) {
    if (i > 0) out += ':';
    out += std::to_string(trail.w_sequence[i]);
  }
  return out;
}

json allocation_json_node(const Allocation& allocation) {
  json node;
  node["budget_bps"] = allocation.budget_bps;
  node["w_min_bps"] = allocation.trail.w_min;
  node["total_bitrate_bps"] = allocation.total_bitrate_bps;
  node["residual_budget_bps"] = allocation.residual_budget_bps;
  node["total_quality"] = allocation.total_quality.to_string();
  node["boundary_index"] = allocation.trail.boundary_index;
  node["budget_trail"] = allocation.trail.w_sequence;
  json models = json::array();
  for (const auto& entry : allocation.entries) {
    json row;
    row["id"] = entry.model_id;
    row["class"] = to_string(entry.cls);
    row["coefficient"] = entry.coefficient.to_string();
    row["level"] = entry.level;
    row["bitrate_bps"] = entry.bitrate_bps;
    row["quality"] = entry.quality.to_string();
    models.push_back(std::move(row));
  }
  node["models"] = std::move(models);
  return node;
}

}  // namespace

std::string allocation_to_csv(const Allocation& allocation) {
  std::string out = "model_id,class,level,bitrate_bps,quality\n";
  for (const auto& entry : allocation.entries) {
    out += entry.model_id;
    out += ',';
    out += to_string(entry.cls);
    out += ',' + std::to_string(entry.level);
    out += ',' + std::to_string(entry.bitrate_bps);
    out += ',' + entry.quality.to_string();
    out += '\n';
  }
  out += "# budget_bps=" + std::to_string(allocation.budget_bps);
  out += " w_min_bps=" + std::to_string(allocation.trail.w_min);
  out += " total_bitrate_bps=" + std::to_string(allocation.total_bitrate_bps);
  out += " residual_budget_bps=" + std::to_string(allocation.residual_budget_bps);
  out += " total_quality=" + allocation.total_quality.to_string();
  out += " boundary_index=" + std::to_string(allocation.trail.boundary_index);
  out += "\n# budget_trail=" + trail_to_string(allocation.trail) + "\n";
  return out;
}

std::string allocation_to_json(const Allocation& allocation) {
  return allocation_json_node(allocation).dump(2) + "\n";
}

std::string session_intervals_csv(const SessionReport& report) {
  std::string out =
      "interval,duration_s,budget_bps,feasible,w_min_bps,"
      "total_bitrate_bps,total_quality\n";
  for (std::size_t i = 0; i < report.intervals.size(); ++i) {
    const auto& outcome = report.intervals[i];
    out += std::to_string(i);
    out += ',' + format_double(outcome.duration_s);
    out += ',' + std::to_string(outcome.budget_bps);
    if (outcome.allocation) {
      out += ",1," + std::to_string(outcome.w_min_bps);
      out += ',' + std::to_string(outcome.allocation->total_bitrate_bps);
      out += ',' + outcome.allocation->total_quality.to_string();
    } else {
      out += ",0," + std::to_string(outcome.w_min_bps) + ",,";
    }
    out += '\n';
  }
  return out;
}

std::string session_allocations_csv(const SessionReport& report) {
  std::string out = "interval,model_id,class,level,bitrate_bps,quality\n";
  for (std::size_t i = 0; i < report.intervals.size(); ++i) {
    const auto& outcome = report.intervals[i];
    if (!outcome.allocation) continue;
    for (const auto& entry : outcome.allocation->entries) {
      out += std::to_string(i);
      out += ',' + entry.model_id;
      out += ',';
      out += to_string(entry.cls);
      out += ',' + std::to_string(entry.level);
      out += ',' + std::to_string(entry.bitrate_bps);
      out += ',' + entry.quality.to_string();
      out += '\n';
    }
  }
  return out;
}

std::string session_report_json(const SessionReport& report) {
  json node;
  node["intervals"] = report.intervals.size();
  node["feasible_intervals"] = report.feasible_intervals;
  node["infeasible_intervals"] = report.infeasible_intervals;
  node["quality_sum"] = report.quality_sum.to_string();
  node["time_weighted_mean_quality"] = report.time_weighted_mean_quality;
  json classes;
  const char* names[] = {"C1", "C2", "C3"};
  for (std::size_t c = 0; c < 3; ++c) {
    json stat;
    stat["total_bps"] = report.class_bitrate[c].total_bps;
    stat["samples"] = report.class_bitrate[c].samples;
    stat["mean_bps"] = report.class_bitrate[c].mean_bps();
    classes[names[c]] = std::move(stat);
  }
  node["class_bitrate"] = std::move(classes);
  json switches;
  for (const auto& [id, count] : report.level_switches) switches[id] = count;
  node["level_switches"] = std::move(switches);
  return node.dump(2) + "\n";
}

std::string gap_to_csv(const GapReport& report) {
  std::string out = "trial,n,L,W,heuristic_q,optimal_q,abs_gap,rel_gap,paper_bound_term\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.trial);
    out += ',' + std::to_string(row.model_count);
    out += ',' + std::to_string(row.max_level);
    out += ',' + std::to_string(row.budget_bps);
    out += ',' + row.heuristic_quality.to_string();
    out += ',' + row.optimal_quality.to_string();
    out += ',' + row.abs_gap.to_string();
    out += ',' + format_double(row.rel_gap);
    out += ',' + std::to_string(row.paper_bound_term);
    out += '\n';
  }
  return out;
}

std::string gap_summary_json(const GapReport& report) {
  json node;
  node["trials"] = report.rows.size();
  node["abs_gap"] = {{"min", report.min_abs_gap},
                     {"mean", report.mean_abs_gap},
                     {"max", report.max_abs_gap}};
  node["rel_gap"] = {{"min", report.min_rel_gap},
                     {"mean", report.mean_rel_gap},
                     {"max", report.max_rel_gap}};
  return node.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace pcralloc
