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

// Compares the OpenMP kernels against their serial references and checks
// the allocator's n log n scaling shape.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcralloc/allocator.hpp"
#include "pcralloc/generator.hpp"
#include "pcralloc/oracle.hpp"
#include "pcralloc/prioritizer.hpp"
#include "pcralloc/simulator.hpp"

using namespace pcralloc;

namespace {

double now_s() {
  auto t = std::chrono::steady_clock::now().time_since_epoch();
  return std::chrono::duration<double>(t).count();
}

template <typename F>
double best_of(int runs, F&& f) {
  double best = 1e300;
  for (int i = 0; i < runs; ++i) {
    double t0 = now_s();
    f();
    double dt = now_s() - t0;
    if (dt < best) best = dt;
  }
  return best;
}

GeneratedInstance big_instance(int n, std::uint64_t seed) {
  GeneratorParams params;
  params.n_min = params.n_max = n;
  params.level_min = params.level_max = 3;
  params.bitrate_min_bps = 100'000;
  params.bitrate_max_bps = 20'000'000;
  return make_instance(params, seed, 0);
}

void bench_prioritize(int n) {
  GeneratedInstance instance = big_instance(n, 1);
  PrioritizationConfig config;
  Rational serial_q, parallel_q;
  double t_serial = best_of(3, [&] {
    auto list = prioritize_serial(instance.scene, instance.view, config);
    serial_q = list.front().q_max;
  });
  double t_parallel = best_of(3, [&] {
    auto list = prioritize(instance.scene, instance.view, config);
    parallel_q = list.front().q_max;
  });
  std::printf("prioritize   n=%-8d serial %8.2f ms   omp %8.2f ms   x%.2f   %s\n", n,
              t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
              serial_q == parallel_q ? "match" : "MISMATCH");
}

void bench_session(int n, int intervals) {
  GeneratedInstance instance = big_instance(n, 2);
  GeneratorParams params;
  params.n_min = params.n_max = n;
  SessionTrace trace = generate_trace(params, instance.scene, intervals, 7);
  PrioritizationConfig config;
  Rational serial_q, parallel_q;
  double t_serial = best_of(3, [&] {
    serial_q = run_session_serial(instance.scene, trace, config).quality_sum;
  });
  double t_parallel = best_of(3, [&] {
    parallel_q = run_session(instance.scene, trace, config).quality_sum;
  });
  std::printf("session      n=%-4d k=%-3d serial %8.2f ms   omp %8.2f ms   x%.2f   %s\n",
              n, intervals, t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
              serial_q == parallel_q ? "match" : "MISMATCH");
}

void bench_gap(std::uint64_t trials) {
  GeneratorParams params;  // defaults: n in [2,6], L in [1,3]
  double serial_mean = 0.0, parallel_mean = 0.0;
  double t_serial =
      best_of(3, [&] { serial_mean = gap_report_serial(params, trials, 42).mean_rel_gap; });
  double t_parallel =
      best_of(3, [&] { parallel_mean = gap_report(params, trials, 42).mean_rel_gap; });
  std::printf("gap trials=%-6llu     serial %8.2f ms   omp %8.2f ms   x%.2f   %s\n",
              static_cast<unsigned long long>(trials), t_serial * 1e3, t_parallel * 1e3,
              t_serial / t_parallel, serial_mean == parallel_mean ? "match" : "MISMATCH");
}

void bench_allocate_scaling() {
  PrioritizationConfig config;
  GeneratedInstance instances[2] = {big_instance(100'000, 3),
                                    big_instance(200'000, 3)};
  for (auto& instance : instances) {
    std::int64_t floor = 0, ceiling = 0;
    for (const auto& model : instance.scene.models) {
      floor += model.ladder.minimum_bps();
      ceiling += model.ladder.highest_bps();
    }
    instance.budget_bps = floor + (ceiling - floor) * 3 / 5;  // same shape
  }
  auto run_once = [&](const GeneratedInstance& instance) {
    double t0 = now_s();
    auto list = prioritize_serial(instance.scene, instance.view, config);
    Allocation allocation = allocate(list, instance.budget_bps);
    (void)allocation;
    return now_s() - t0;
  };
  // interleaved medians so frequency drift hits both sizes alike
  std::vector<double> samples[2];
  run_once(instances[0]);
  run_once(instances[1]);
  for (int rep = 0; rep < 7; ++rep) {
    samples[0].push_back(run_once(instances[0]));
    samples[1].push_back(run_once(instances[1]));
  }
  double t[2];
  for (int i = 0; i < 2; ++i) {
    std::sort(samples[i].begin(), samples[i].end());
    t[i] = samples[i][samples[i].size() / 2];
  }
  std::printf("prioritize+allocate n=100000   %8.2f ms\n", t[0] * 1e3);
  std::printf("prioritize+allocate n=200000   %8.2f ms   ratio x%.2f\n", t[1] * 1e3,
              t[1] / t[0]);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif
  bench_prioritize(20'000);
  bench_prioritize(100'000);
  bench_prioritize(200'000);
  bench_session(2'000, 64);
  bench_gap(200);
  bench_allocate_scaling();
  return 0;
}
