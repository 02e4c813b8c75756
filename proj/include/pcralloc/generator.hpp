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

#ifndef PCRALLOC_GENERATOR_HPP
#define PCRALLOC_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcralloc/scene.hpp"

namespace pcralloc {

/// Ranges for synthetic instances. level_* bound the maximum level index L,
/// so a ladder draws between level_min+1 and level_max+1 distinct bitrates.
struct GeneratorParams {
  int n_min = 2;
  int n_max = 6;
  int level_min = 1;
  int level_max = 3;
  std::int64_t bitrate_min_bps = 200'000;
  std::int64_t bitrate_max_bps = 10'000'000;
  double extent = 50.0;  // models and camera live in [-extent, extent]^3
  double radius_min = 0.5;
  double radius_max = 5.0;
  double fov_half_deg_min = 30.0;
  double fov_half_deg_max = 75.0;
  double near_min = 10.0;
  double near_max = 80.0;
  /// Probability of drawing a budget below W_min (for error-path testing);
  /// otherwise W is uniform in [W_min, sum of highest bitrates].
  double infeasible_probability = 0.0;
};

struct GeneratedInstance {
  Scene scene;
  ViewState view;
  std::int64_t budget_bps = 0;
};

/// Empty when params are usable: non-empty ranges, and a bitrate range wide
/// enough to draw level_max+1 distinct values.
std::vector<std::string> validate_params(const GeneratorParams& params);

/// Instance `index` of the stream identified by (params, seed). Stateless so
/// trials can run in parallel and still reproduce the sequential stream.
/// Every emitted scene passes validate_scene. Throws std::invalid_argument
/// on bad params.
GeneratedInstance make_instance(const GeneratorParams& params, std::uint64_t seed,
                                std::uint64_t index);

/// View sampled from the params' geometry ranges.
ViewState sample_view(const GeneratorParams& params, std::mt19937_64& rng);

/// Sequential view of make_instance.
class InstanceGenerator {
 public:
  InstanceGenerator(const GeneratorParams& params, std::uint64_t seed);

  GeneratedInstance next() { return make_instance(params_, seed_, index_++); }
  const GeneratorParams& params() const { return params_; }

 private:
  GeneratorParams params_;
  std::uint64_t seed_;
  std::uint64_t index_ = 0;
};

}  // namespace pcralloc

#endif  // PCRALLOC_GENERATOR_HPP
