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

#ifndef PCRALLOC_SCENE_HPP
#define PCRALLOC_SCENE_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pcralloc/rational.hpp"

namespace pcralloc {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Vec3&) const = default;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Ordered encodings of one model: levels_bps[0] is the highest bitrate
/// (level 0), levels_bps.back() the minimum acceptable bitrate (level L).
/// Strictly decreasing, all positive.
struct RepresentationLadder {
  std::vector<std::int64_t> levels_bps;

  int level_count() const { return static_cast<int>(levels_bps.size()); }
  std::int64_t highest_bps() const { return levels_bps.front(); }
  std::int64_t minimum_bps() const { return levels_bps.back(); }

  bool operator==(const RepresentationLadder&) const = default;
};

/// One streamable object: identity, its representation ladder and a bounding
/// sphere in scene coordinates.
struct PointCloudModel {
  std::string id;
  RepresentationLadder ladder;
  Vec3 center;
  double radius = 0.0;

  bool operator==(const PointCloudModel&) const = default;
};

/// All models of a session. Every ladder carries exactly ladder_level_count
/// levels (the level index space is shared; the bitrates are per-model).
struct Scene {
  std::vector<PointCloudModel> models;
  int ladder_level_count = 0;

  int model_count() const { return static_cast<int>(models.size()); }
  /// Highest level index L (level_count - 1).
  int max_level() const { return ladder_level_count - 1; }

  bool operator==(const Scene&) const = default;
};

/// Importance bucket from the user's viewpoint. C1 outranks C2 outranks C3.
enum class PriorityClass { C1 = 0, C2 = 1, C3 = 2 };

const char* to_string(PriorityClass cls);

/// Numeric coefficient per class, strictly decreasing C1 > C2 > C3 > 0 and
/// each in (0, 1].
struct PriorityWeights {
  Rational c1{1};
  Rational c2{3, 5};
  Rational c3{3, 10};

  const Rational& of(PriorityClass cls) const {
    switch (cls) {
      case PriorityClass::C1: return c1;
      case PriorityClass::C2: return c2;
      default: return c3;
    }
  }

  bool operator==(const PriorityWeights&) const = default;
};

/// Camera pose plus the distance cut between near (C1) and far (C2) models.
struct ViewState {
  Vec3 position;
  Vec3 forward{0.0, 0.0, 1.0};  // unit length within 1e-9
  double fov_half_angle = 0.0;  // radians, in (0, pi)
  double near_distance_threshold = 0.0;  // scene units, > 0
};

/// A model tagged with its class, coefficient and best-case quality
/// q_max = coefficient x highest-level bitrate.
struct PrioritizedModel {
  const PointCloudModel* model = nullptr;
  PriorityClass cls = PriorityClass::C3;
  Rational coefficient;
  Rational q_max;
};

/// Returns every violated scene invariant (empty means valid): n >= 1,
/// unique ids, per-model ladder length matching ladder_level_count,
/// strictly decreasing positive bitrates, non-negative radii.
std::vector<std::string> validate_scene(const Scene& scene);

/// Returns every violated view invariant (unit forward, fov in (0, pi),
/// positive near threshold).
std::vector<std::string> validate_view(const ViewState& view);

/// Returns every violated weight invariant (C1 > C2 > C3 > 0, all <= 1).
std::vector<std::string> validate_weights(const PriorityWeights& weights);

}  // namespace pcralloc

#endif  // PCRALLOC_SCENE_HPP
