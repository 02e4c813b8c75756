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

#ifndef PCRALLOC_PRIORITIZER_HPP
#define PCRALLOC_PRIORITIZER_HPP

#include <vector>

#include "pcralloc/scene.hpp"

namespace pcralloc {

/// Class weights plus the default near-distance cut used when a view is
/// built from config rather than carried by a trace row.
struct PrioritizationConfig {
  PriorityWeights weights;
  double near_distance_threshold = 0.0;
};

/// Cone test against the model's bounding sphere: visible iff the angle
/// between forward and (center - position) is at most fov_half_angle plus
/// the sphere's angular radius asin(min(1, radius/dist)). A sphere that
/// contains the camera is visible.
bool visibility(const ViewState& view, const PointCloudModel& model);

/// C1: visible and center within near_distance_threshold.
/// C2: visible but farther. C3: not visible.
PriorityClass classify(const ViewState& view, const PointCloudModel& model);

/// Tags every model with class, coefficient and q_max, then sorts by
/// (coefficient desc, q_max desc, id asc). The result is a permutation of
/// scene.models and is invariant under input order. Classification runs in
/// parallel when OpenMP is enabled.
std::vector<PrioritizedModel> prioritize(const Scene& scene, const ViewState& view,
                                         const PrioritizationConfig& config);

/// Single-threaded reference for prioritize; must produce identical output.
std::vector<PrioritizedModel> prioritize_serial(const Scene& scene,
                                                const ViewState& view,
                                                const PrioritizationConfig& config);

}  // namespace pcralloc

#endif  // PCRALLOC_PRIORITIZER_HPP
