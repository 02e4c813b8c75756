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

#include "pcralloc/prioritizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcralloc {

namespace {

PrioritizedModel tag_model(const PointCloudModel& model, const ViewState& view,
                           const PriorityWeights& weights) {
  PrioritizedModel tagged;
  tagged.model = &model;
  tagged.cls = classify(view, model);
  tagged.coefficient = weights.of(tagged.cls);
  tagged.q_max = tagged.coefficient * Rational(model.ladder.highest_bps());
  return tagged;
}

void require_descending(const PriorityWeights& weights) {
  if (!(weights.c1 > weights.c2 && weights.c2 > weights.c3 &&
        weights.c3 > Rational(0))) {
    throw std::invalid_argument("class weights must satisfy C1 > C2 > C3 > 0");
  }
}

// Sorts by (coefficient desc, q_max desc, id asc). With strictly decreasing
// weights the coefficient order is the class order, and within one class
// q_max = coefficient x top bitrate orders like the top bitrate alone, so
// the comparisons stay in plain integers.
void sort_by_priority(std::vector<PrioritizedModel>& tagged) {
  struct Key {
    int rank;
    std::int64_t top_bps;
    std::uint32_t index;
  };
  std::vector<Key> keys(tagged.size());
  for (std::uint32_t i = 0; i < tagged.size(); ++i) {
    keys[i] = {static_cast<int>(tagged[i].cls),
               tagged[i].model->ladder.highest_bps(), i};
  }
  std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.top_bps != b.top_bps) return a.top_bps > b.top_bps;
    return tagged[a.index].model->id < tagged[b.index].model->id;
  });
  std::vector<PrioritizedModel> ordered;
  ordered.reserve(tagged.size());
  for (const Key& key : keys) ordered.push_back(tagged[key.index]);
  tagged = std::move(ordered);
}

}  // namespace

bool visibility(const ViewState& view, const PointCloudModel& model) {
  Vec3 to_center = model.center - view.position;
  double dist = norm(to_center);
  if (dist <= model.radius) return true;  // camera inside the bounding sphere
  double cos_angle = dot(view.forward, to_center) / dist;
  double angle = std::acos(std::clamp(cos_angle, -1.0, 1.0));
  double angular_radius = std::asin(std::min(1.0, model.radius / dist));
  return angle <= view.fov_half_angle + angular_radius;
}

PriorityClass classify(const ViewState& view, const PointCloudModel& model) {
  if (!visibility(view, model)) return PriorityClass::C3;
  double dist = norm(model.center - view.position);
  return dist <= view.near_distance_threshold ? PriorityClass::C1
                                              : PriorityClass::C2;
}

std::vector<PrioritizedModel> prioritize(const Scene& scene, const ViewState& view,
                                         const PrioritizationConfig& config) {
  require_descending(config.weights);
  const auto n = static_cast<std::int64_t>(scene.models.size());
  std::vector<PrioritizedModel> tagged(scene.models.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    tagged[i] = tag_model(scene.models[i], view, config.weights);
  }
  sort_by_priority(tagged);
  return tagged;
}

std::vector<PrioritizedModel> prioritize_serial(const Scene& scene,
                                                const ViewState& view,
                                                const PrioritizationConfig& config) {
  require_descending(config.weights);
  std::vector<PrioritizedModel> tagged;
  tagged.reserve(scene.models.size());
  for (const auto& model : scene.models) {
    tagged.push_back(tag_model(model, view, config.weights));
  }
  sort_by_priority(tagged);
  return tagged;
}

}  // namespace pcralloc
