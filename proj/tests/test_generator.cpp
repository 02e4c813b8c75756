#include <stdexcept>

#include "doctest.h"
#include "pcralloc/allocator.hpp"
#include "pcralloc/generator.hpp"
#include "pcralloc/manifest.hpp"

using namespace pcralloc;

TEST_CASE("same seed, same stream") {
  GeneratorParams params;
  InstanceGenerator first(params, 7);
  InstanceGenerator second(params, 7);
  for (int i = 0; i < 20; ++i) {
    GeneratedInstance a = first.next();
    GeneratedInstance b = second.next();
    CHECK(a.scene == b.scene);
    CHECK(a.budget_bps == b.budget_bps);
    CHECK(a.view.position == b.view.position);
    CHECK(a.view.forward == b.view.forward);
    CHECK(a.view.fov_half_angle == b.view.fov_half_angle);
  }
  // a different seed diverges
  InstanceGenerator third(params, 8);
  CHECK(third.next().scene != InstanceGenerator(params, 7).next().scene);
}

TEST_CASE("instances are valid and budgets in range") {
  GeneratorParams params;
  params.n_min = 1;
  params.n_max = 10;
  params.level_min = 0;
  params.level_max = 4;
  InstanceGenerator generator(params, 3);
  for (int i = 0; i < 200; ++i) {
    GeneratedInstance instance = generator.next();
    CHECK(validate_scene(instance.scene).empty());
    CHECK(validate_view(instance.view).empty());
    CHECK(instance.scene.model_count() >= 1);
    CHECK(instance.scene.model_count() <= 10);
    std::int64_t floor = w_min(instance.scene);
    std::int64_t ceiling = 0;
    for (const auto& model : instance.scene.models) {
      ceiling += model.ladder.highest_bps();
    }
    CHECK(instance.budget_bps >= floor);
    CHECK(instance.budget_bps <= ceiling);
  }
}

TEST_CASE("structural shape follows the params") {
  GeneratorParams params;
  params.n_min = params.n_max = 3;
  params.level_min = params.level_max = 2;
  GeneratedInstance instance = make_instance(params, 5, 0);
  CHECK(instance.scene.model_count() == 3);
  CHECK(instance.scene.ladder_level_count == 3);
  for (const auto& model : instance.scene.models) {
    CHECK(model.ladder.level_count() == 3);
  }
}

TEST_CASE("all-infeasible probability forces budgets below the floor") {
  GeneratorParams params;
  params.infeasible_probability = 1.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    GeneratedInstance instance = make_instance(params, 11, i);
    CHECK(instance.budget_bps < w_min(instance.scene));
  }
}

TEST_CASE("a bitrate range too narrow for distinct levels is rejected") {
  GeneratorParams params;
  params.bitrate_min_bps = 1;
  params.bitrate_max_bps = 2;
  params.level_max = 3;  // needs 4 distinct values out of 2
  auto errors = validate_params(params);
  REQUIRE_FALSE(errors.empty());
  CHECK(errors.front().find("distinct") != std::string::npos);
  CHECK_THROWS_AS(InstanceGenerator(params, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(params, 1, 0), std::invalid_argument);
}

TEST_CASE("a barely wide enough range still draws a full ladder") {
  GeneratorParams params;
  params.n_min = params.n_max = 2;
  params.level_min = params.level_max = 3;
  params.bitrate_min_bps = 10;
  params.bitrate_max_bps = 13;  // exactly 4 values for 4 levels
  GeneratedInstance instance = make_instance(params, 2, 0);
  for (const auto& model : instance.scene.models) {
    CHECK(model.ladder.levels_bps == std::vector<std::int64_t>{13, 12, 11, 10});
  }
}

TEST_CASE("bad ranges are rejected") {
  GeneratorParams params;
  params.n_min = 0;
  CHECK_FALSE(validate_params(params).empty());
  params = GeneratorParams{};
  params.n_min = 5;
  params.n_max = 2;
  CHECK_FALSE(validate_params(params).empty());
  params = GeneratorParams{};
  params.level_min = -1;
  CHECK_FALSE(validate_params(params).empty());
  params = GeneratorParams{};
  params.radius_min = -1.0;
  CHECK_FALSE(validate_params(params).empty());
  params = GeneratorParams{};
  params.infeasible_probability = 1.5;
  CHECK_FALSE(validate_params(params).empty());
  CHECK(validate_params(GeneratorParams{}).empty());
}
