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

#include "pcralloc/simulator.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace pcralloc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr char kTraceHeader[] =
    "interval_index,duration_s,budget_bps,cam_x,cam_y,cam_z,"
    "fwd_x,fwd_y,fwd_z,fov_half_deg,near_threshold";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view field, std::size_t line_no, const char* what) {
  field = trim(field);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw TraceError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                     std::string(field) + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view field, std::size_t line_no, const char* what) {
  field = trim(field);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw TraceError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                     std::string(field) + "'");
  }
  return value;
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

// Shared by the serial and parallel drivers so both assemble byte-identical
// reports from the same per-interval outcomes.
SessionReport assemble(const Scene& scene, std::vector<IntervalOutcome> outcomes) {
  SessionReport report;
  report.intervals = std::move(outcomes);
  for (const auto& model : scene.models) report.level_switches[model.id] = 0;

  double duration_sum = 0.0;
  double weighted_quality_sum = 0.0;
  std::unordered_map<std::string, int> previous_levels;
  bool have_previous = false;

  for (const auto& outcome : report.intervals) {
    if (!outcome.allocation) {
      ++report.infeasible_intervals;
      have_previous = false;
      previous_levels.clear();
      continue;
    }
    const Allocation& allocation = *outcome.allocation;
    ++report.feasible_intervals;
    report.quality_sum += allocation.total_quality;
    duration_sum += outcome.duration_s;
    weighted_quality_sum += outcome.duration_s * allocation.total_quality.to_double();

    std::unordered_map<std::string, int> levels;
    levels.reserve(allocation.entries.size());
    for (const auto& entry : allocation.entries) {
      auto& stat = report.class_bitrate[static_cast<std::size_t>(entry.cls)];
      stat.total_bps += entry.bitrate_bps;
      ++stat.samples;
      levels.emplace(entry.model_id, entry.level);
      if (have_previous) {
        auto it = previous_levels.find(entry.model_id);
        if (it != previous_levels.end() && it->second != entry.level) {
          ++report.level_switches[entry.model_id];
        }
      }
    }
    previous_levels = std::move(levels);
    have_previous = true;
  }
  report.time_weighted_mean_quality =
      duration_sum > 0.0 ? weighted_quality_sum / duration_sum : 0.0;
  return report;
}

void check_session_inputs(const Scene& scene, const SessionTrace& trace,
                          const PrioritizationConfig& config) {
  if (auto errors = validate_scene(scene); !errors.empty()) {
    throw std::invalid_argument("invalid scene: " + errors.front());
  }
  if (auto errors = validate_weights(config.weights); !errors.empty()) {
    throw std::invalid_argument("invalid weights: " + errors.front());
  }
  if (trace.intervals.empty()) {
    throw std::invalid_argument("trace must have at least one interval");
  }
  for (std::size_t i = 0; i < trace.intervals.size(); ++i) {
    const auto& interval = trace.intervals[i];
    if (!(interval.duration_s > 0.0) || !std::isfinite(interval.duration_s)) {
      throw std::invalid_argument("interval " + std::to_string(i) +
                                  ": duration must be > 0");
    }
    if (interval.budget_bps < 0) {
      throw std::invalid_argument("interval " + std::to_string(i) +
                                  ": budget must be >= 0");
    }
    if (auto errors = validate_view(interval.view); !errors.empty()) {
      throw std::invalid_argument("interval " + std::to_string(i) + ": " +
                                  errors.front());
    }
  }
}

IntervalOutcome run_interval(const Scene& scene, const TraceInterval& interval,
                             const PrioritizationConfig& config,
                             std::int64_t scene_w_min) {
  IntervalOutcome outcome;
  outcome.duration_s = interval.duration_s;
  outcome.budget_bps = interval.budget_bps;
  outcome.w_min_bps = scene_w_min;
  if (interval.budget_bps < scene_w_min) return outcome;  // marked infeasible
  auto prioritized = prioritize_serial(scene, interval.view, config);
  outcome.allocation = allocate(prioritized, interval.budget_bps);
  return outcome;
}

}  // namespace

SessionTrace load_trace(std::string_view text) {
  SessionTrace trace;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 14) == "interval_index") continue;  // header row

    auto fields = split_fields(line);
    if (fields.size() != 11) {
      throw TraceError("line " + std::to_string(line_no) + ": expected 11 fields, got " +
                       std::to_string(fields.size()));
    }
    parse_int(fields[0], line_no, "interval_index");
    TraceInterval interval;
    interval.duration_s = parse_double(fields[1], line_no, "duration_s");
    interval.budget_bps = parse_int(fields[2], line_no, "budget_bps");
    interval.view.position = {parse_double(fields[3], line_no, "cam_x"),
                              parse_double(fields[4], line_no, "cam_y"),
                              parse_double(fields[5], line_no, "cam_z")};
    Vec3 forward{parse_double(fields[6], line_no, "fwd_x"),
                 parse_double(fields[7], line_no, "fwd_y"),
                 parse_double(fields[8], line_no, "fwd_z")};
    double len = norm(forward);
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw TraceError("line " + std::to_string(line_no) + ": forward vector is zero");
    }
    // normalize only when needed so unit vectors round-trip bit-exactly
    if (std::fabs(len - 1.0) > 1e-9) {
      forward = {forward.x / len, forward.y / len, forward.z / len};
    }
    interval.view.forward = forward;
    double fov_half_deg = parse_double(fields[9], line_no, "fov_half_deg");
    interval.view.fov_half_angle = fov_half_deg * kPi / 180.0;
    interval.view.near_distance_threshold =
        parse_double(fields[10], line_no, "near_threshold");

    if (!(interval.duration_s > 0.0)) {
      throw TraceError("line " + std::to_string(line_no) + ": duration_s must be > 0");
    }
    if (interval.budget_bps < 0) {
      throw TraceError("line " + std::to_string(line_no) + ": budget_bps must be >= 0");
    }
    if (auto errors = validate_view(interval.view); !errors.empty()) {
      throw TraceError("line " + std::to_string(line_no) + ": " + errors.front());
    }
    trace.intervals.push_back(interval);
  }
  if (trace.intervals.empty()) {
    throw TraceError("trace has no intervals");
  }
  return trace;
}

SessionTrace load_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TraceError("cannot open trace '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_trace(buffer.str());
}

std::string serialize_trace(const SessionTrace& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (std::size_t i = 0; i < trace.intervals.size(); ++i) {
    const auto& interval = trace.intervals[i];
    out += std::to_string(i);
    out += ',' + format_double(interval.duration_s);
    out += ',' + std::to_string(interval.budget_bps);
    out += ',' + format_double(interval.view.position.x);
    out += ',' + format_double(interval.view.position.y);
    out += ',' + format_double(interval.view.position.z);
    out += ',' + format_double(interval.view.forward.x);
    out += ',' + format_double(interval.view.forward.y);
    out += ',' + format_double(interval.view.forward.z);
    out += ',' + format_double(interval.view.fov_half_angle * 180.0 / kPi);
    out += ',' + format_double(interval.view.near_distance_threshold);
    out += '\n';
  }
  return out;
}

void save_trace_file(const SessionTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TraceError("cannot write trace '" + path + "'");
  out << serialize_trace(trace);
}

SessionReport run_session(const Scene& scene, const SessionTrace& trace,
                          const PrioritizationConfig& config) {
  check_session_inputs(scene, trace, config);
  const std::int64_t scene_w_min = w_min(scene);
  std::vector<IntervalOutcome> outcomes(trace.intervals.size());
  const auto count = static_cast<std::int64_t>(trace.intervals.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    outcomes[i] = run_interval(scene, trace.intervals[i], config, scene_w_min);
  }
  return assemble(scene, std::move(outcomes));
}

SessionReport run_session_serial(const Scene& scene, const SessionTrace& trace,
                                 const PrioritizationConfig& config) {
  check_session_inputs(scene, trace, config);
  const std::int64_t scene_w_min = w_min(scene);
  std::vector<IntervalOutcome> outcomes;
  outcomes.reserve(trace.intervals.size());
  for (const auto& interval : trace.intervals) {
    outcomes.push_back(run_interval(scene, interval, config, scene_w_min));
  }
  return assemble(scene, std::move(outcomes));
}

SessionTrace generate_trace(const GeneratorParams& params, const Scene& scene,
                            int interval_count, std::uint64_t seed) {
  if (auto errors = validate_params(params); !errors.empty()) {
    throw std::invalid_argument("bad generator params: " + errors.front());
  }
  if (interval_count < 1) {
    throw std::invalid_argument("interval_count must be >= 1");
  }
  std::int64_t floor_bps = 0;
  std::int64_t ceiling_bps = 0;
  for (const auto& model : scene.models) {
    floor_bps += model.ladder.minimum_bps();
    ceiling_bps += model.ladder.highest_bps();
  }
  std::seed_seq sequence{seed, std::uint64_t{0x7261636b7472ULL}};
  std::mt19937_64 rng(sequence);
  std::uniform_real_distribution<double> duration(0.5, 2.0);
  std::bernoulli_distribution infeasible(params.infeasible_probability);
  std::uniform_int_distribution<std::int64_t> budget(floor_bps, ceiling_bps);

  SessionTrace trace;
  trace.intervals.reserve(interval_count);
  for (int i = 0; i < interval_count; ++i) {
    TraceInterval interval;
    interval.duration_s = duration(rng);
    if (params.infeasible_probability > 0.0 && infeasible(rng) && floor_bps > 0) {
      std::uniform_int_distribution<std::int64_t> below(0, floor_bps - 1);
      interval.budget_bps = below(rng);
    } else {
      interval.budget_bps = budget(rng);
    }
    interval.view = sample_view(params, rng);
    trace.intervals.push_back(interval);
  }
  return trace;
}

}  // namespace pcralloc
