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

#include <vector>

#include <benchmark/benchmark.h>

#include "murlab/observables.hpp"
#include "murlab/qcore.hpp"
#include "murlab/sampling.hpp"
#include "murlab/transport.hpp"

namespace {

using namespace murlab;

DiscreteDistribution make_distribution(std::size_t n, std::uint64_t stream) {
  Pcg32 rng(7, stream);
  std::vector<DiscreteDistribution::Atom> atoms(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    atoms[i].value = 6.0 * static_cast<double>(i) + rng.uniform01();
    atoms[i].weight = 0.1 + rng.uniform01();
    total += atoms[i].weight;
  }
  for (auto& atom : atoms) atom.weight /= total;
  return DiscreteDistribution{atoms};
}

void BM_Wasserstein2(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const DiscreteDistribution p = make_distribution(n, 1);
  const DiscreteDistribution q = make_distribution(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wasserstein2(p, q).squared);
  }
}
BENCHMARK(BM_Wasserstein2)->Arg(2)->Arg(8)->Arg(32);

void BM_Delta2Observables(benchmark::State& state) {
  const DiscreteObservable a = sharp_qubit_observable(BlochVector(0, 0, 1));
  const BlochVector c_axis(0.3, 0.0, 0.4);
  std::vector<Outcome> outcomes(2);
  outcomes[0] = {+1.0, bloch_to_effect(c_axis, +1)};
  outcomes[1] = {-1.0, bloch_to_effect(c_axis, -1)};
  const DiscreteObservable c{outcomes};
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta2_observables(a, c).squared);
  }
}
BENCHMARK(BM_Delta2Observables)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
