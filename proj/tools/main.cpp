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

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcralloc/allocator.hpp"
#include "pcralloc/generator.hpp"
#include "pcralloc/manifest.hpp"
#include "pcralloc/oracle.hpp"
#include "pcralloc/prioritizer.hpp"
#include "pcralloc/report_io.hpp"
#include "pcralloc/simulator.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// 0 = success, 1 = input/validation error, 2 = infeasible budget.
enum ExitCode { kOk = 0, kInputError = 1, kInfeasible = 2 };

pcralloc::Vec3 parse_vec3(const std::string& text, const char* flag) {
  pcralloc::Vec3 v;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3 ||
      !std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
    throw std::invalid_argument(std::string(flag) + " expects \"x,y,z\", got '" +
                                text + "'");
  }
  return v;
}

pcralloc::PriorityWeights parse_weights(const std::string& text) {
  auto first = text.find(',');
  auto second = text.find(',', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(',', second + 1) != std::string::npos) {
    throw std::invalid_argument("--weights expects \"c1,c2,c3\", got '" + text + "'");
  }
  pcralloc::PriorityWeights weights;
  weights.c1 = pcralloc::Rational::parse(text.substr(0, first));
  weights.c2 = pcralloc::Rational::parse(text.substr(first + 1, second - first - 1));
  weights.c3 = pcralloc::Rational::parse(text.substr(second + 1));
  if (auto errors = pcralloc::validate_weights(weights); !errors.empty()) {
    throw std::invalid_argument("bad --weights: " + errors.front());
  }
  return weights;
}

pcralloc::ViewState build_view(const std::string& cam, const std::string& fwd,
                               double fov_half_deg, double near_threshold) {
  pcralloc::ViewState view;
  view.position = parse_vec3(cam, "--cam");
  pcralloc::Vec3 forward = parse_vec3(fwd, "--fwd");
  double len = pcralloc::norm(forward);
  if (!(len > 0.0)) throw std::invalid_argument("--fwd must be a non-zero vector");
  view.forward = {forward.x / len, forward.y / len, forward.z / len};
  view.fov_half_angle = fov_half_deg * kPi / 180.0;
  view.near_distance_threshold = near_threshold;
  if (auto errors = pcralloc::validate_view(view); !errors.empty()) {
    throw std::invalid_argument("bad view: " + errors.front());
  }
  return view;
}

struct GeneratorFlags {
  pcralloc::GeneratorParams params;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n-min", params.n_min, "Minimum model count");
    cmd->add_option("--n-max", params.n_max, "Maximum model count");
    cmd->add_option("--l-min", params.level_min, "Minimum max-level index L");
    cmd->add_option("--l-max", params.level_max, "Maximum max-level index L");
    cmd->add_option("--bitrate-min", params.bitrate_min_bps, "Minimum bitrate (bps)");
    cmd->add_option("--bitrate-max", params.bitrate_max_bps, "Maximum bitrate (bps)");
    cmd->add_option("--extent", params.extent, "Scene box half-size");
    cmd->add_option("--radius-min", params.radius_min, "Minimum bounding radius");
    cmd->add_option("--radius-max", params.radius_max, "Maximum bounding radius");
    cmd->add_option("--infeasible-prob", params.infeasible_probability,
                    "Probability of an infeasible budget draw");
  }
};

int cmd_validate(const std::string& manifest_path) {
  // load_manifest_file throws on any syntax/schema/invariant violation.
  pcralloc::Scene scene = pcralloc::load_manifest_file(manifest_path);
  std::cout << "ok: " << scene.model_count() << " models, "
            << scene.ladder_level_count << " ladder levels\n";
  return kOk;
}

int cmd_allocate(const std::string& manifest_path, std::int64_t budget_bps,
                 const pcralloc::ViewState& view,
                 const pcralloc::PrioritizationConfig& config,
                 const std::string& format, const std::string& out_dir) {
  if (budget_bps < 0) throw std::invalid_argument("--budget-bps must be >= 0");
  pcralloc::Scene scene = pcralloc::load_manifest_file(manifest_path);
  auto prioritized = pcralloc::prioritize(scene, view, config);
  pcralloc::Allocation allocation = pcralloc::allocate(prioritized, budget_bps);
  std::string report = format == "json" ? pcralloc::allocation_to_json(allocation)
                                        : pcralloc::allocation_to_csv(allocation);
  std::cout << report;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::string name = format == "json" ? "allocation.json" : "allocation.csv";
    pcralloc::write_file((std::filesystem::path(out_dir) / name).string(), report);
  }
  return kOk;
}

int cmd_simulate(const std::string& manifest_path, const std::string& trace_path,
                 const pcralloc::PrioritizationConfig& config,
                 const std::string& out_dir) {
  pcralloc::Scene scene = pcralloc::load_manifest_file(manifest_path);
  pcralloc::SessionTrace trace = pcralloc::load_trace_file(trace_path);
  pcralloc::SessionReport report = pcralloc::run_session(scene, trace, config);
  std::string summary = pcralloc::session_report_json(report);
  std::cout << summary;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    pcralloc::write_file((dir / "session_report.json").string(), summary);
    pcralloc::write_file((dir / "session_intervals.csv").string(),
                         pcralloc::session_intervals_csv(report));
    pcralloc::write_file((dir / "session_allocations.csv").string(),
                         pcralloc::session_allocations_csv(report));
  }
  return kOk;
}

int cmd_gap(const pcralloc::GeneratorParams& params, std::uint64_t trials,
            std::uint64_t seed, const pcralloc::PriorityWeights& weights,
            std::size_t oracle_cap, const std::string& out_dir) {
  pcralloc::GapReport report =
      pcralloc::gap_report(params, trials, seed, weights, oracle_cap);
  std::string csv = pcralloc::gap_to_csv(report);
  if (out_dir.empty()) {
    std::cout << csv;
  } else {
    std::filesystem::create_directories(out_dir);
    pcralloc::write_file((std::filesystem::path(out_dir) / "gap.csv").string(), csv);
    std::cout << pcralloc::gap_summary_json(report);
  }
  return kOk;
}

int cmd_gen(const pcralloc::GeneratorParams& params, std::uint64_t seed,
            int intervals, const std::string& out_dir) {
  pcralloc::InstanceGenerator generator(params, seed);
  pcralloc::GeneratedInstance instance = generator.next();
  pcralloc::SessionTrace trace =
      pcralloc::generate_trace(params, instance.scene, intervals, seed);
  std::filesystem::create_directories(out_dir);
  std::filesystem::path dir(out_dir);
  pcralloc::save_manifest_file(instance.scene, (dir / "manifest.json").string());
  pcralloc::save_trace_file(trace, (dir / "trace.csv").string());
  std::cout << "wrote " << (dir / "manifest.json").string() << " ("
            << instance.scene.model_count() << " models) and "
            << (dir / "trace.csv").string() << " (" << trace.intervals.size()
            << " intervals)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"view-aware rate allocation for point-cloud streaming"};
  app.require_subcommand(1);

  std::string manifest_path, trace_path, out_dir;
  std::string cam = "0,0,0", fwd = "0,0,1", weights_text;
  std::string format = "csv";
  double fov_half_deg = 45.0, near_threshold = 0.0;
  std::int64_t budget_bps = -1;
  std::uint64_t trials = 1000, seed = 42;
  std::size_t oracle_cap = 12;
  int intervals = 10;
  GeneratorFlags gap_flags, gen_flags;

  CLI::App* validate = app.add_subcommand("validate", "Check a manifest");
  validate->add_option("--manifest", manifest_path, "Manifest path")->required();

  CLI::App* allocate = app.add_subcommand("allocate", "Single rate allocation");
  allocate->add_option("--manifest", manifest_path, "Manifest path")->required();
  allocate->add_option("--budget-bps", budget_bps, "Bandwidth budget W (bps)")
      ->required();
  allocate->add_option("--cam", cam, "Camera position \"x,y,z\"");
  allocate->add_option("--fwd", fwd, "Camera forward \"x,y,z\"");
  allocate->add_option("--fov-half-deg", fov_half_deg, "Half field of view (deg)");
  allocate->add_option("--near", near_threshold, "Near-distance threshold")
      ->required();
  allocate->add_option("--weights", weights_text, "Class weights \"c1,c2,c3\"");
  allocate->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  allocate->add_option("--out-dir", out_dir, "Also write the report here");

  CLI::App* simulate = app.add_subcommand("simulate", "Replay a session trace");
  simulate->add_option("--manifest", manifest_path, "Manifest path")->required();
  simulate->add_option("--trace", trace_path, "Trace path")->required();
  simulate->add_option("--weights", weights_text, "Class weights \"c1,c2,c3\"");
  simulate->add_option("--out-dir", out_dir, "Report output directory");

  CLI::App* gap = app.add_subcommand("gap", "Heuristic-vs-oracle gap study");
  gap->add_option("--trials", trials, "Number of random instances");
  gap->add_option("--seed", seed, "RNG seed");
  gap->add_option("--weights", weights_text, "Class weights \"c1,c2,c3\"");
  gap->add_option("--oracle-cap", oracle_cap, "Largest n the oracle will enumerate");
  gap->add_option("--out-dir", out_dir, "Write gap.csv here instead of stdout");
  gap_flags.attach(gap);

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic manifest + trace");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--intervals", intervals, "Trace length");
  gen->add_option("--out-dir", out_dir, "Output directory")->required();
  gen_flags.attach(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kInputError;
  }

  try {
    pcralloc::PrioritizationConfig config;
    if (!weights_text.empty()) config.weights = parse_weights(weights_text);
    config.near_distance_threshold = near_threshold;

    if (app.got_subcommand(validate)) return cmd_validate(manifest_path);
    if (app.got_subcommand(allocate)) {
      auto view = build_view(cam, fwd, fov_half_deg, near_threshold);
      return cmd_allocate(manifest_path, budget_bps, view, config, format, out_dir);
    }
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(manifest_path, trace_path, config, out_dir);
    }
    if (app.got_subcommand(gap)) {
      return cmd_gap(gap_flags.params, trials, seed, config.weights, oracle_cap,
                     out_dir);
    }
    if (app.got_subcommand(gen)) {
      return cmd_gen(gen_flags.params, seed, intervals, out_dir);
    }
    return kInputError;
  } catch (const pcralloc::InfeasibleBudget& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
