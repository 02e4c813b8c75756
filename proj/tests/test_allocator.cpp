#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pcralloc/allocator.hpp"
#include "pcralloc/generator.hpp"
#include "pcralloc/prioritizer.hpp"

using namespace pcralloc;
using testutil::kMbps;

namespace {

std::vector<int> levels_of(const Allocation& allocation) {
  std::vector<int> levels;
  for (const auto& entry : allocation.entries) levels.push_back(entry.level);
  return levels;
}

// All-minimum assignment value, the floor every allocation must dominate.
Rational baseline_quality(const std::vector<PrioritizedModel>& list) {
  Rational sum;
  for (const auto& tagged : list) {
    sum += tagged.coefficient * Rational(tagged.model->ladder.minimum_bps());
  }
  return sum;
}

}  // namespace

TEST_CASE("w_min sums the minimum-level bitrates") {
  Scene scene = testutil::i1_scene();
  CHECK(w_min(scene) == 9 * kMbps);
  CHECK(w_min(testutil::i1_prioritized(scene)) == 9 * kMbps);

  Scene single;
  auto list = testutil::make_list(single, {{Rational(1), {10 * kMbps}}});
  CHECK(w_min(single) == 10 * kMbps);
  CHECK(w_min(list) == 10 * kMbps);
}

TEST_CASE("worked instance at W=22 Mbps") {
  Scene scene = testutil::i1_scene();
  auto list = testutil::i1_prioritized(scene);
  Allocation a = allocate(list, 22 * kMbps);
  CHECK(levels_of(a) == std::vector<int>{0, 1, 1});
  CHECK(a.total_bitrate_bps == 22 * kMbps);
  CHECK(a.residual_budget_bps == 0);
  CHECK(a.total_quality == Rational(15'400'000));
  CHECK(a.trail.w_min == 9 * kMbps);
  CHECK(a.trail.boundary_index == 1);  // B is the first non-full model
  CHECK(a.trail.w_sequence ==
        std::vector<std::int64_t>{13 * kMbps, 6 * kMbps, 3 * kMbps, 0});
  CHECK(a.entries[0].model_id == "A");
  CHECK(a.entries[0].bitrate_bps == 10 * kMbps);
  CHECK(a.entries[1].quality == Rational(3'600'000));
  CHECK(a.entries[2].quality == Rational(1'800'000));
}

TEST_CASE("worked instance at W=20 Mbps") {
  Scene scene = testutil::i1_scene();
  Allocation a = allocate(testutil::i1_prioritized(scene), 20 * kMbps);
  CHECK(levels_of(a) == std::vector<int>{0, 1, 2});
  CHECK(a.total_bitrate_bps == 19 * kMbps);
  CHECK(a.residual_budget_bps == 1 * kMbps);
  CHECK(a.total_quality == Rational(14'500'000));
  CHECK(a.trail.boundary_index == 1);
  CHECK(a.trail.w_sequence ==
        std::vector<std::int64_t>{11 * kMbps, 4 * kMbps, 1 * kMbps, 1 * kMbps});
}

TEST_CASE("worked instance at W = W_min forces the minimum everywhere") {
  Scene scene = testutil::i1_scene();
  Allocation a = allocate(testutil::i1_prioritized(scene), 9 * kMbps);
  CHECK(levels_of(a) == std::vector<int>{2, 2, 2});
  CHECK(a.total_bitrate_bps == 9 * kMbps);
  CHECK(a.total_quality == Rational(5'700'000));
  CHECK(a.trail.boundary_index == 0);
  CHECK(a.trail.w_sequence == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("full budget upgrades everything") {
  Scene scene = testutil::i1_scene();
  Allocation a = allocate(testutil::i1_prioritized(scene), 30 * kMbps);
  CHECK(levels_of(a) == std::vector<int>{0, 0, 0});
  CHECK(a.total_bitrate_bps == 30 * kMbps);
  CHECK(a.total_quality == Rational(19'000'000));
  CHECK(a.trail.boundary_index == 3);  // no boundary: everything upgraded
}

TEST_CASE("budget below W_min is an error, not a degrade") {
  Scene scene = testutil::i1_scene();
  auto list = testutil::i1_prioritized(scene);
  CHECK_THROWS_WITH_AS(allocate(list, 8 * kMbps), doctest::Contains("W_min"),
                       InfeasibleBudget);
  try {
    allocate(list, 8 * kMbps);
  } catch (const InfeasibleBudget& e) {
    CHECK(e.budget_bps() == 8 * kMbps);
    CHECK(e.w_min_bps() == 9 * kMbps);
  }
}

TEST_CASE("slack after the boundary still buys intermediate levels") {
  // At W=22 model C (after the boundary at B) gets level 1, not the minimum.
  Scene scene = testutil::i1_scene();
  Allocation a = allocate(testutil::i1_prioritized(scene), 22 * kMbps);
  CHECK(a.entries[2].level == 1);
}

TEST_CASE("single-level ladders never block the walk") {
  Scene scene;
  auto list = testutil::make_list(
      scene, {{Rational(1), {5 * kMbps}}, {Rational(1, 2), {5 * kMbps}}});
  Allocation a = allocate(list, 10 * kMbps);
  CHECK(levels_of(a) == std::vector<int>{0, 0});
  CHECK(a.trail.boundary_index == 2);
  CHECK(a.residual_budget_bps == 0);
}

TEST_CASE("total_quality recomputes the stored sum") {
  Scene scene = testutil::i1_scene();
  Allocation a = allocate(testutil::i1_prioritized(scene), 22 * kMbps);
  CHECK(total_quality(a) == a.total_quality);
  CHECK(total_quality(a) == Rational(15'400'000));

  Scene zero_scene;
  auto zeros = testutil::make_list(
      zero_scene, {{Rational(0), {4 * kMbps, kMbps}}, {Rational(0), {2 * kMbps, kMbps}}});
  CHECK(allocate(zeros, 6 * kMbps).total_quality == Rational(0));

  Scene one_scene;
  auto one = testutil::make_list(one_scene, {{Rational(1), {10 * kMbps}}});
  CHECK(allocate(one, 10 * kMbps).total_quality == Rational(10 * kMbps));
}

TEST_CASE("identical inputs give identical allocations") {
  Scene scene = testutil::i1_scene();
  auto list = testutil::i1_prioritized(scene);
  Allocation a = allocate(list, 21 * kMbps);
  Allocation b = allocate(list, 21 * kMbps);
  CHECK(levels_of(a) == levels_of(b));
  CHECK(a.total_quality == b.total_quality);
  CHECK(a.trail.w_sequence == b.trail.w_sequence);
  CHECK(a.trail.boundary_index == b.trail.boundary_index);
}

TEST_CASE("allocator invariants hold over random instances") {
  GeneratorParams params;
  params.n_min = 1;
  params.n_max = 12;
  params.level_min = 0;
  params.level_max = 4;
  PrioritizationConfig config;
  for (std::uint64_t i = 0; i < 400; ++i) {
    GeneratedInstance instance = make_instance(params, 31, i);
    auto list = prioritize_serial(instance.scene, instance.view, config);
    Allocation a = allocate(list, instance.budget_bps);
    const std::size_t n = list.size();

    // feasibility and floor
    CHECK(a.total_bitrate_bps <= instance.budget_bps);
    CHECK(a.residual_budget_bps >= 0);
    REQUIRE(a.entries.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& ladder = list[k].model->ladder;
      CHECK(a.entries[k].level >= 0);
      CHECK(a.entries[k].level <= ladder.level_count() - 1);
      CHECK(a.entries[k].bitrate_bps >= ladder.minimum_bps());
    }

    // baseline dominance
    CHECK(a.total_quality >= baseline_quality(list));

    // prefix-full structure
    const std::size_t boundary = a.trail.boundary_index;
    CHECK(boundary <= n);
    for (std::size_t k = 0; k < boundary; ++k) CHECK(a.entries[k].level == 0);
    if (boundary < n) {
      // the full upgrade did not fit at the boundary
      const auto& ladder = list[boundary].model->ladder;
      CHECK(ladder.highest_bps() - ladder.minimum_bps() >
            a.trail.w_sequence[boundary]);
      CHECK(a.entries[boundary].level > 0);
    }

    // budget trail recurrence, non-negative and non-increasing
    REQUIRE(a.trail.w_sequence.size() == n + 1);
    CHECK(a.trail.w_sequence[0] == instance.budget_bps - a.trail.w_min);
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t upgrade =
          a.entries[k].bitrate_bps - list[k].model->ladder.minimum_bps();
      CHECK(a.trail.w_sequence[k + 1] == a.trail.w_sequence[k] - upgrade);
      CHECK(a.trail.w_sequence[k + 1] >= 0);
      CHECK(a.trail.w_sequence[k + 1] <= a.trail.w_sequence[k]);
    }
    CHECK(a.trail.w_sequence[n] == a.residual_budget_bps);
  }
}
