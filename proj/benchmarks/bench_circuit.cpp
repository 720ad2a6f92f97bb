// Copyright 2026 The murlab Authors
//
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

#include <benchmark/benchmark.h>

#include "murlab/lund_wiseman.hpp"
#include "murlab/sampling.hpp"

namespace {

using namespace murlab;

CircuitConfig make_config() {
  CircuitConfig cfg;
  cfg.alpha = Complex(0.6, 0.0);
  cfg.beta = Complex(0.0, 0.8);
  cfg.gamma = 0.9;
  cfg.theta = 0.3;
  return cfg;
}

void BM_CircuitSimulate(benchmark::State& state) {
  const CircuitConfig cfg = make_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(cfg).raw());
  }
}
BENCHMARK(BM_CircuitSimulate);

void BM_CircuitPovm8(benchmark::State& state) {
  const CircuitConfig cfg = make_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(povm_8(cfg).effects[0](0, 0));
  }
}
BENCHMARK(BM_CircuitPovm8);

void BM_SampleCircuit(benchmark::State& state) {
  const OutcomeDistribution8 dist = simulate(make_config());
  const std::size_t shots = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_distribution(dist, shots, ++seed).shots());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_SampleCircuit)->Arg(1024)->Arg(65536);

}  // namespace

BENCHMARK_MAIN();
