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

#ifndef SLICEMARKET_SIMULATION_H_
#define SLICEMARKET_SIMULATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicemarket/agents.h"
#include "slicemarket/baselines.h"
#include "slicemarket/market_state.h"
#include "slicemarket/metrics.h"
#include "slicemarket/rng.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

// A broken run invariant: infeasible admission, lost quota, queue
// discipline or queue bookkeeping.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimulationOptions {
  // Preference matrix per NSP index; required for every NSP running MQSAC.
  std::map<std::size_t, PreferenceMatrix> mqsac_matrices;
};

struct VspSlotTrace {
  std::int64_t start_length = 0;
  std::int64_t reneged = 0;
  std::int64_t arrivals = 0;  // subscribers that picked this VSP
  std::int64_t entrants = 0;  // of those, the ones that did not balk
  std::int64_t served = 0;
  RequestSplit split;  // aligned with the VSP's reachable NSPs
};

// Bookkeeping of the most recent slot, for tests and diagnostics.
struct SlotTrace {
  std::int64_t slot = -1;
  std::vector<VspSlotTrace> vsps;
  std::vector<SlotDecision> decisions;  // per NSP
  std::vector<std::vector<std::int64_t>> requested;  // [nsp][slice]
};

// One seeded run of the slotted market. Each slot: expire instances, purge
// reneged requests, draw arrivals (preferring, balking), split queues across
// NSPs, let every NSP decide, serve admitted requests FCFS, update metrics.
class Simulation {
 public:
  Simulation(Scenario scenario, std::uint64_t seed,
             SimulationOptions options = {});

  // Throws InvariantViolation if any run invariant breaks, and
  // std::logic_error if called after the horizon.
  void StepSlot();
  void Run();

  bool done() const { return slot_ >= scenario_.config().horizon; }
  std::int64_t current_slot() const { return slot_; }
  const Scenario& scenario() const { return scenario_; }

  const NspState& nsp_state(std::size_t i) const { return nsps_[i]; }
  const VspQueue& vsp_queue(std::size_t j) const { return queues_[j]; }
  const MetricSeries& metrics(std::size_t i) const { return metrics_[i]; }
  const SlotTrace& last_trace() const { return trace_; }

  // Values published at the end of the last slot; initial values are ratio 0
  // and fairness 1.
  double last_ratio(std::size_t nsp, std::size_t slice) const {
    return last_ratios_[nsp][slice];
  }
  double last_fairness(std::size_t nsp) const { return last_fairness_[nsp]; }

 private:
  struct SliceStreams {
    RngStream arrivals;
    RngStream preferring;
    RngStream balking;
    RngStream patience;
  };

  void ProcessArrivals(std::vector<VspSlotTrace>& vsp_trace);
  SlotDecision Decide(std::size_t i, const std::vector<std::int64_t>& requested,
                      const std::vector<std::vector<std::int64_t>>& demand);

  Scenario scenario_;
  SimulationOptions options_;
  std::uint64_t seed_;
  std::int64_t slot_ = 0;

  std::vector<NspState> nsps_;
  std::vector<VspQueue> queues_;
  std::vector<MetricSeries> metrics_;
  std::vector<std::vector<double>> last_ratios_;
  std::vector<double> last_fairness_;
  std::vector<StaticPartition> partitions_;

  std::vector<SliceStreams> slice_streams_;  // per catalog slice
  std::vector<RngStream> lifetime_streams_;  // per NSP

  SlotTrace trace_;
};

}  // namespace slicemarket

#endif  // SLICEMARKET_SIMULATION_H_
