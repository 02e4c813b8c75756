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

#include "pcralloc/scene.hpp"

#include <cmath>
#include <unordered_set>

namespace pcralloc {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kUnitTolerance = 1e-9;
}  // namespace

const char* to_string(PriorityClass cls) {
  switch (cls) {
    case PriorityClass::C1: return "C1";
    case PriorityClass::C2: return "C2";
    default: return "C3";
  }
}

std::vector<std::string> validate_scene(const Scene& scene) {
  std::vector<std::string> errors;
  if (scene.models.empty()) {
    errors.push_back("n >= 1 required: scene has no models");
  }
  if (scene.ladder_level_count < 1) {
    errors.push_back("ladder_level_count must be >= 1");
  }
  std::unordered_set<std::string> seen;
  std::unordered_set<std::string> reported;
  for (const auto& model : scene.models) {
    if (!seen.insert(model.id).second && reported.insert(model.id).second) {
      errors.push_back("duplicate id " + model.id);
    }
    const auto& levels = model.ladder.levels_bps;
    if (levels.empty()) {
      errors.push_back("model '" + model.id + "': ladder has no levels");
      continue;
    }
    if (scene.ladder_level_count >= 1 &&
        static_cast<int>(levels.size()) != scene.ladder_level_count) {
      errors.push_back("model '" + model.id + "': ladder has " +
                       std::to_string(levels.size()) + " levels, expected " +
                       std::to_string(scene.ladder_level_count));
    }
    for (std::size_t k = 0; k < levels.size(); ++k) {
      if (levels[k] <= 0) {
        errors.push_back("model '" + model.id + "': bitrate at level " +
                         std::to_string(k) + " must be > 0");
        break;
      }
    }
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      if (levels[k] <= levels[k + 1]) {
        errors.push_back("model '" + model.id +
                         "': ladder not strictly decreasing at index " +
                         std::to_string(k));
        break;
      }
    }
    if (model.radius < 0.0 || !std::isfinite(model.radius)) {
      errors.push_back("model '" + model.id + "': radius must be >= 0");
    }
  }
  return errors;
}

std::vector<std::string> validate_view(const ViewState& view) {
  std::vector<std::string> errors;
  double len = norm(view.forward);
  if (!std::isfinite(len) || std::fabs(len - 1.0) > kUnitTolerance) {
    errors.push_back("forward vector must be unit length");
  }
  if (!(view.fov_half_angle > 0.0) || !(view.fov_half_angle < kPi)) {
    errors.push_back("fov_half_angle must be in (0, pi)");
  }
  if (!(view.near_distance_threshold > 0.0)) {
    errors.push_back("near_distance_threshold must be > 0");
  }
  return errors;
}

std::vector<std::string> validate_weights(const PriorityWeights& weights) {
  std::vector<std::string> errors;
  if (!(weights.c3 > Rational(0))) {
    errors.push_back("weights must be positive");
  }
  if (!(weights.c1 > weights.c2 && weights.c2 > weights.c3)) {
    errors.push_back("weights must satisfy C1 > C2 > C3");
  }
  if (weights.c1 > Rational(1)) {
    errors.push_back("weights must be <= 1");
  }
  return errors;
}

}  // namespace pcralloc
