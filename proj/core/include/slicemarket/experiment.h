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

#ifndef SLICEMARKET_EXPERIMENT_H_
#define SLICEMARKET_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "slicemarket/metrics.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

// Pointwise statistics over repeats.
struct Envelope {
  std::vector<double> mean;
  std::vector<double> min;
  std::vector<double> max;
};

// All runs must have the same length. No runs gives an empty envelope.
Envelope MakeEnvelope(std::span<const std::vector<double>> runs);

// Per-slot series of one NSP in one repeat.
struct NspRunSeries {
  std::vector<double> base_revenue;
  std::vector<double> actual_revenue;
  std::vector<double> fairness;
  std::vector<double> vwpf;  // tracked slice; empty if the NSP lacks it
  std::vector<double> decision_seconds;
  std::vector<std::vector<double>> slice_vwpf;  // [slice][slot]
  std::vector<std::vector<double>> acceptance;  // [slice][slot]
};

NspRunSeries ExtractSeries(const MetricSeries& metrics, SliceLabel vwpf_slice);

// Elementwise mean of runs with identical shapes.
NspRunSeries AverageSeries(std::span<const NspRunSeries> runs);

struct NspExperimentResult {
  NspId id = 0;
  std::vector<SliceLabel> labels;
  bool tracks_vwpf = false;
  std::vector<NspRunSeries> runs;  // one per repeat, in seed order
  Envelope base_revenue;
  Envelope actual_revenue;
  Envelope fairness;
  Envelope vwpf;
  Envelope decision_seconds;
};

struct ExperimentResult {
  int repeats = 0;
  std::uint64_t base_seed = 0;
  std::vector<NspExperimentResult> nsps;  // scenario order
};

struct ExperimentOptions {
  int threads = 1;  // 0 means hardware concurrency
};

// Runs `repeats` simulations with seeds base_seed + i. Every NSP running
// MQSAC gets the scenario's count of random preference matrices, drawn once
// from base_seed; a repeat is then the average over one run per matrix,
// all on the repeat's seed. Results do not depend on the thread count.
ExperimentResult RunExperiment(const Scenario& scenario, int repeats,
                               std::uint64_t base_seed,
                               ExperimentOptions options = {});

// Mean of series[first, last). Empty range gives 0.
double LongTermAverage(std::span<const double> series, std::size_t first = 0,
                       std::size_t last = std::numeric_limits<std::size_t>::max());

}  // namespace slicemarket

#endif  // SLICEMARKET_EXPERIMENT_H_
