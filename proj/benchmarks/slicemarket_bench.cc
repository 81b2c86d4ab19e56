// Copyright 2026 The slicemarket Authors
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

#include <random>

#include "slicemarket/auction.h"
#include "slicemarket/drredpa.h"
#include "slicemarket/experiment.h"
#include "slicemarket/scenario_io.h"
#include "slicemarket/simulation.h"

namespace slicemarket {
namespace {

// A congested NSP 2 from the reference market: half full, heavy requests.
AdmissionInput CongestedInput(std::int64_t requests) {
  AdmissionInput input;
  input.capacity = {20, 20, 25};
  input.slices = {{2, {0.7, 0.5, 0.45}, 1.4, 6, requests, 300, 500},
                  {3, {0.7, 0.65, 0.6}, 1.6, 6, requests, 200, 500},
                  {4, {0.8, 0.8, 0.8}, 2.0, 3, requests, 150, 200},
                  {5, {0.7, 0.7, 0.9}, 2.3, 2, requests, 100, 300}};
  return input;
}

void BM_Drredpa(benchmark::State& state) {
  const AdmissionInput input = CongestedInput(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DrredpaDecide(input));
}
BENCHMARK(BM_Drredpa)->Arg(5)->Arg(20)->Arg(80);

void BM_SliceAuction(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> bid(0.5, 8.0);
  std::vector<Bid> bids;
  for (int v = 0; v < state.range(0); ++v) bids.push_back({v, bid(rng), 10});
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunSliceAuction(5 * state.range(0), bids, 1.6, 1.0));
  }
}
BENCHMARK(BM_SliceAuction)->Arg(2)->Arg(8)->Arg(32);

void BM_SimulationSlot(benchmark::State& state) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.horizon = 2000;
  const Scenario scenario = Scenario::Validate(config);
  Simulation sim(scenario, 7);
  for (auto _ : state) {
    if (sim.done()) {
      state.PauseTiming();
      sim = Simulation(scenario, 7);
      state.ResumeTiming();
    }
    sim.StepSlot();
  }
}
BENCHMARK(BM_SimulationSlot);

void BM_ReferenceRun(benchmark::State& state) {
  ScenarioConfig config = ReferenceScenarioConfig();
  const Scenario scenario = Scenario::Validate(config);
  for (auto _ : state) {
    Simulation sim(scenario, 7);
    sim.Run();
    benchmark::DoNotOptimize(sim.metrics(0).slots.size());
  }
}
BENCHMARK(BM_ReferenceRun)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace slicemarket

BENCHMARK_MAIN();
