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

#ifndef PCRALLOC_TESTS_HELPERS_HPP
#define PCRALLOC_TESTS_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "pcralloc/prioritizer.hpp"
#include "pcralloc/scene.hpp"

namespace testutil {

using namespace pcralloc;

constexpr std::int64_t kMbps = 1'000'000;

// The worked instance: three identical ladders [10, 6, 3] Mbps. Geometry
// puts A near on-axis (C1), B far on-axis (C2) and C behind the camera
// (C3), so with default weights the priority order is A, B, C with
// coefficients 1.0, 0.6, 0.3.
inline Scene i1_scene() {
  Scene scene;
  scene.ladder_level_count = 3;
  RepresentationLadder ladder{{10 * kMbps, 6 * kMbps, 3 * kMbps}};
  scene.models.push_back({"A", ladder, {0.0, 0.0, 5.0}, 1.0});
  scene.models.push_back({"B", ladder, {0.0, 0.0, 40.0}, 1.0});
  scene.models.push_back({"C", ladder, {0.0, 0.0, -20.0}, 1.0});
  return scene;
}

inline ViewState i1_view() {
  ViewState view;
  view.position = {0.0, 0.0, 0.0};
  view.forward = {0.0, 0.0, 1.0};
  view.fov_half_angle = 45.0 * 3.14159265358979323846 / 180.0;
  view.near_distance_threshold = 10.0;
  return view;
}

inline std::vector<PrioritizedModel> i1_prioritized(const Scene& scene) {
  return prioritize_serial(scene, i1_view(), PrioritizationConfig{});
}

// Builds a priority-sorted list directly from (coefficient, ladder) specs,
// bypassing geometry. The scene passed in owns the models and must outlive
// the returned list.
inline std::vector<PrioritizedModel> make_list(
    Scene& scene,
    const std::vector<std::pair<Rational, std::vector<std::int64_t>>>& specs) {
  scene.models.clear();
  scene.ladder_level_count =
      specs.empty() ? 0 : static_cast<int>(specs.front().second.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    PointCloudModel model;
    model.id = "m" + std::to_string(i);
    model.ladder.levels_bps = specs[i].second;
    scene.models.push_back(std::move(model));
  }
  std::vector<PrioritizedModel> list;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    PrioritizedModel tagged;
    tagged.model = &scene.models[i];
    tagged.cls = PriorityClass::C1;
    tagged.coefficient = specs[i].first;
    tagged.q_max = tagged.coefficient * Rational(specs[i].second.front());
    list.push_back(tagged);
  }
  return list;
}

}  // namespace testutil

#endif  // PCRALLOC_TESTS_HELPERS_HPP
