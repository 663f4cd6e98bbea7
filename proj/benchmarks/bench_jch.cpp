// Copyright 2026 The jch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>

#include "jch/observables.hpp"
#include "jch/sweep.hpp"

namespace {

using namespace jch;

SparseHamiltonian hamiltonian(std::size_t n) {
  return build_hamiltonian(ModelParams::uniform(n, 0.5, 1.0, 0.7),
                           std::make_shared<const SectorBasis>(n, static_cast<int>(n)));
}

void BM_SectorBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SectorBasis basis(n, static_cast<int>(n));
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_SectorBasis)->Arg(2)->Arg(4)->Arg(6);

void BM_BuildHamiltonian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto basis = std::make_shared<const SectorBasis>(n, static_cast<int>(n));
  const ModelParams p = ModelParams::uniform(n, 0.5, 1.0, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(p, basis).nonzeros());
}
BENCHMARK(BM_BuildHamiltonian)->Arg(2)->Arg(4)->Arg(6);

void BM_Apply(benchmark::State& state) {
  const SparseHamiltonian h = hamiltonian(static_cast<std::size_t>(state.range(0)));
  const Eigen::VectorXd x = seeded_vector(h.dim(), 1);
  Eigen::VectorXd y(x.size());
  for (auto _ : state) {
    h.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.nonzeros()));
}
BENCHMARK(BM_Apply)->Arg(4)->Arg(6);

void BM_GroundState(benchmark::State& state) {
  const SparseHamiltonian h = hamiltonian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(h).energy);
}
BENCHMARK(BM_GroundState)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_WitnessSet(benchmark::State& state) {
  const GroundStateResult g = ground_state(hamiltonian(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(witness_set(g, Boundary::open).avg_concurrence);
}
BENCHMARK(BM_WitnessSet)->Arg(2)->Arg(4)->Arg(6);

void BM_Sweep(benchmark::State& state) {
  SweepConfig config;
  config.n_cavities = 3;
  config.delta_over_g = {-4.0, 4.0, 17};
  config.t_over_g = {0.0, 2.0, 9};
  config.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config).records.size());
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
