#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "pcralloc/generator.hpp"
#include "pcralloc/scene.hpp"

using namespace pcralloc;

namespace {

bool mentions(const std::vector<std::string>& errors, const std::string& needle) {
  for (const auto& error : errors) {
    if (error.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("valid scene passes validation") {
  CHECK(validate_scene(testutil::i1_scene()).empty());
}

TEST_CASE("non-decreasing ladder is rejected") {
  Scene scene = testutil::i1_scene();
  scene.models[0].ladder.levels_bps = {10 * testutil::kMbps, 10 * testutil::kMbps,
                                       3 * testutil::kMbps};
  auto errors = validate_scene(scene);
  REQUIRE_FALSE(errors.empty());
  CHECK(mentions(errors, "not strictly decreasing"));
}

TEST_CASE("duplicate ids are rejected") {
  Scene scene = testutil::i1_scene();
  scene.models[1].id = "A";
  auto errors = validate_scene(scene);
  CHECK(mentions(errors, "duplicate id A"));
}

TEST_CASE("empty scene is rejected") {
  Scene scene;
  scene.ladder_level_count = 3;
  CHECK(mentions(validate_scene(scene), "n >= 1"));
}

TEST_CASE("level count mismatch is rejected") {
  Scene scene = testutil::i1_scene();
  scene.models[2].ladder.levels_bps = {10 * testutil::kMbps, 6 * testutil::kMbps};
  CHECK(mentions(validate_scene(scene), "expected 3"));
}

TEST_CASE("non-positive bitrates are rejected") {
  Scene scene = testutil::i1_scene();
  scene.models[0].ladder.levels_bps = {10 * testutil::kMbps, 6 * testutil::kMbps, 0};
  CHECK(mentions(validate_scene(scene), "must be > 0"));
}

TEST_CASE("negative radius is rejected") {
  Scene scene = testutil::i1_scene();
  scene.models[0].radius = -1.0;
  CHECK(mentions(validate_scene(scene), "radius"));
}

TEST_CASE("every violation is reported, not just the first") {
  Scene scene = testutil::i1_scene();
  scene.models[0].ladder.levels_bps = {5 * testutil::kMbps, 5 * testutil::kMbps,
                                       3 * testutil::kMbps};
  scene.models[1].id = "A";  // also duplicates model 0 after the ladder error
  scene.models[2].radius = -2.0;
  auto errors = validate_scene(scene);
  CHECK(errors.size() >= 3);
}

TEST_CASE("view validation") {
  ViewState view = testutil::i1_view();
  CHECK(validate_view(view).empty());
  view.forward = {0.0, 0.0, 2.0};
  CHECK_FALSE(validate_view(view).empty());
  view = testutil::i1_view();
  view.fov_half_angle = 0.0;
  CHECK_FALSE(validate_view(view).empty());
  view = testutil::i1_view();
  view.near_distance_threshold = 0.0;
  CHECK_FALSE(validate_view(view).empty());
}

TEST_CASE("weight validation enforces C1 > C2 > C3 in (0, 1]") {
  CHECK(validate_weights(PriorityWeights{}).empty());
  PriorityWeights weights;
  weights.c2 = Rational(1, 10);
  weights.c3 = Rational(2, 10);
  CHECK_FALSE(validate_weights(weights).empty());
  weights = PriorityWeights{};
  weights.c3 = Rational(0);
  CHECK_FALSE(validate_weights(weights).empty());
  weights = PriorityWeights{};
  weights.c1 = Rational(3, 2);
  CHECK_FALSE(validate_weights(weights).empty());
}

TEST_CASE("generated scenes pass, single-invariant mutations fail") {
  GeneratorParams params;
  params.n_min = 2;
  params.n_max = 8;
  params.level_min = 1;
  params.level_max = 4;
  for (std::uint64_t i = 0; i < 60; ++i) {
    Scene scene = make_instance(params, 171, i).scene;
    REQUIRE(validate_scene(scene).empty());
    Scene mutated = scene;
    switch (i % 5) {
      case 0:  // duplicate id
        mutated.models[1].id = mutated.models[0].id;
        break;
      case 1:  // flatten the ladder
        mutated.models[0].ladder.levels_bps[0] =
            mutated.models[0].ladder.levels_bps[1];
        break;
      case 2:  // drop a level from one model
        mutated.models[0].ladder.levels_bps.pop_back();
        break;
      case 3:
        mutated.models[0].radius = -0.5;
        break;
      default:
        mutated.models.clear();
        break;
    }
    CHECK_FALSE(validate_scene(mutated).empty());
  }
}

TEST_CASE("priority class names") {
  CHECK(std::string(to_string(PriorityClass::C1)) == "C1");
  CHECK(std::string(to_string(PriorityClass::C2)) == "C2");
  CHECK(std::string(to_string(PriorityClass::C3)) == "C3");
}
