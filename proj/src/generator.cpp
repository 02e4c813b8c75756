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

#include "pcralloc/generator.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace pcralloc {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq sequence{seed, index, std::uint64_t{0x9e3779b97f4a7c15}};
  return std::mt19937_64(sequence);
}

RepresentationLadder sample_ladder(std::mt19937_64& rng, int level_count,
                                   std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> bitrate(lo, hi);
  std::set<std::int64_t> drawn;
  while (static_cast<int>(drawn.size()) < level_count) {
    drawn.insert(bitrate(rng));
  }
  RepresentationLadder ladder;
  ladder.levels_bps.assign(drawn.rbegin(), drawn.rend());  // descending
  return ladder;
}

Vec3 sample_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    double len = norm(v);
    if (len > 1e-6) return {v.x / len, v.y / len, v.z / len};
  }
}

}  // namespace

std::vector<std::string> validate_params(const GeneratorParams& p) {
  std::vector<std::string> errors;
  if (p.n_min < 1 || p.n_min > p.n_max) {
    errors.push_back("model count range must satisfy 1 <= n_min <= n_max");
  }
  if (p.level_min < 0 || p.level_min > p.level_max) {
    errors.push_back("level range must satisfy 0 <= level_min <= level_max");
  }
  if (p.bitrate_min_bps < 1 || p.bitrate_min_bps > p.bitrate_max_bps) {
    errors.push_back("bitrate range must satisfy 1 <= min <= max");
  } else if (p.bitrate_max_bps - p.bitrate_min_bps + 1 <
             static_cast<std::int64_t>(p.level_max) + 1) {
    errors.push_back("bitrate range too narrow to draw " +
                     std::to_string(p.level_max + 1) + " distinct values");
  }
  if (p.radius_min < 0.0 || p.radius_min > p.radius_max) {
    errors.push_back("radius range must satisfy 0 <= min <= max");
  }
  if (!(p.extent > 0.0)) errors.push_back("extent must be > 0");
  if (!(p.fov_half_deg_min > 0.0) || p.fov_half_deg_min > p.fov_half_deg_max ||
      !(p.fov_half_deg_max < 180.0)) {
    errors.push_back("fov half-angle range must lie within (0, 180) degrees");
  }
  if (!(p.near_min > 0.0) || p.near_min > p.near_max) {
    errors.push_back("near threshold range must satisfy 0 < min <= max");
  }
  if (p.infeasible_probability < 0.0 || p.infeasible_probability > 1.0) {
    errors.push_back("infeasible_probability must be in [0, 1]");
  }
  return errors;
}

ViewState sample_view(const GeneratorParams& params, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-params.extent, params.extent);
  std::uniform_real_distribution<double> fov_deg(params.fov_half_deg_min,
                                                 params.fov_half_deg_max);
  std::uniform_real_distribution<double> near(params.near_min, params.near_max);
  ViewState view;
  view.position = {coord(rng), coord(rng), coord(rng)};
  view.forward = sample_unit(rng);
  view.fov_half_angle = fov_deg(rng) * kPi / 180.0;
  view.near_distance_threshold = near(rng);
  return view;
}

GeneratedInstance make_instance(const GeneratorParams& params, std::uint64_t seed,
                                std::uint64_t index) {
  if (auto errors = validate_params(params); !errors.empty()) {
    throw std::invalid_argument("bad generator params: " + errors.front());
  }
  auto rng = engine_for(seed, index);
  std::uniform_int_distribution<int> n_dist(params.n_min, params.n_max);
  std::uniform_int_distribution<int> level_dist(params.level_min, params.level_max);
  std::uniform_real_distribution<double> coord(-params.extent, params.extent);
  std::uniform_real_distribution<double> radius(params.radius_min, params.radius_max);

  GeneratedInstance instance;
  const int n = n_dist(rng);
  const int level_count = level_dist(rng) + 1;
  instance.scene.ladder_level_count = level_count;
  instance.scene.models.reserve(n);
  for (int i = 0; i < n; ++i) {
    PointCloudModel model;
    model.id = "m" + std::to_string(i);
    model.ladder = sample_ladder(rng, level_count, params.bitrate_min_bps,
                                 params.bitrate_max_bps);
    model.center = {coord(rng), coord(rng), coord(rng)};
    model.radius = radius(rng);
    instance.scene.models.push_back(std::move(model));
  }

  instance.view = sample_view(params, rng);

  std::int64_t floor_bps = 0;
  std::int64_t ceiling_bps = 0;
  for (const auto& model : instance.scene.models) {
    floor_bps += model.ladder.minimum_bps();
    ceiling_bps += model.ladder.highest_bps();
  }
  std::bernoulli_distribution infeasible(params.infeasible_probability);
  if (params.infeasible_probability > 0.0 && infeasible(rng)) {
    std::uniform_int_distribution<std::int64_t> below(0, floor_bps - 1);
    instance.budget_bps = below(rng);
  } else {
    std::uniform_int_distribution<std::int64_t> budget(floor_bps, ceiling_bps);
    instance.budget_bps = budget(rng);
  }
  return instance;
}

InstanceGenerator::InstanceGenerator(const GeneratorParams& params,
                                     std::uint64_t seed)
    : params_(params), seed_(seed) {
  if (auto errors = validate_params(params_); !errors.empty()) {
    throw std::invalid_argument("bad generator params: " + errors.front());
  }
}

}  // namespace pcralloc
