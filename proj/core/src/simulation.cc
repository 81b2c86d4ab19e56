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

#include "slicemarket/simulation.h"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "slicemarket/auction.h"
#include "slicemarket/drredpa.h"

namespace slicemarket {
namespace {

std::uint32_t Entity(std::size_t index) {
  return static_cast<std::uint32_t>(index);
}

std::string SlotPrefix(std::int64_t slot) {
  return "slot " + std::to_string(slot) + ": ";
}

}  // namespace

Simulation::Simulation(Scenario scenario, std::uint64_t seed,
                       SimulationOptions options)
    : scenario_(std::move(scenario)), options_(std::move(options)), seed_(seed) {
  const std::size_t num_nsps = scenario_.num_nsps();
  nsps_.reserve(num_nsps);
  metrics_.resize(num_nsps);
  last_ratios_.resize(num_nsps);
  last_fairness_.assign(num_nsps, 1.0);
  partitions_.resize(num_nsps);
  for (std::size_t i = 0; i < num_nsps; ++i) {
    const NspView& view = scenario_.nsp_view(i);
    nsps_.emplace_back(view);
    last_ratios_[i].assign(view.slices.size(), 0.0);
    for (const NspSlice& s : view.slices) metrics_[i].labels.push_back(s.label);

    const NspConfig& config = scenario_.nsp(i);
    if (config.admission == AdmissionStrategy::kPage) {
      std::vector<double> weights;
      for (const NspSlice& s : view.slices) {
        if (config.page_partition.empty()) {
          weights.push_back(scenario_.config().slices[s.catalog_index].arrival_rate);
        } else {
          auto it = config.page_partition.find(s.label);
          weights.push_back(it == config.page_partition.end() ? 0.0 : it->second);
        }
      }
      partitions_[i] = ProportionalPartition(weights);
    }
    if (config.admission == AdmissionStrategy::kMqsac &&
        !options_.mqsac_matrices.contains(i)) {
      throw std::invalid_argument("NSP " + std::to_string(config.id) +
                                  " runs MQSAC but has no preference matrix");
    }
  }
  queues_.resize(scenario_.num_vsps());

  for (std::size_t c = 0; c < scenario_.config().slices.size(); ++c) {
    slice_streams_.push_back(
        {RngStream(seed, RngStream::StreamId(StreamRole::kArrivals, Entity(c))),
         RngStream(seed, RngStream::StreamId(StreamRole::kPreferring, Entity(c))),
         RngStream(seed, RngStream::StreamId(StreamRole::kBalking, Entity(c))),
         RngStream(seed, RngStream::StreamId(StreamRole::kPatience, Entity(c)))});
  }
  for (std::size_t i = 0; i < num_nsps; ++i) {
    lifetime_streams_.emplace_back(
        seed, RngStream::StreamId(StreamRole::kLifetimes, Entity(i)));
  }
}

void Simulation::Run() {
  while (!done()) StepSlot();
}

void Simulation::ProcessArrivals(std::vector<VspSlotTrace>& vsp_trace) {
  const ScenarioConfig& config = scenario_.config();
  // Catalog slices in ascending label order; each arrival sees the queue
  // including earlier arrivals of the same slot.
  std::vector<std::size_t> order(config.slices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&config](std::size_t a, std::size_t b) {
    return config.slices[a].label < config.slices[b].label;
  });

  std::vector<std::pair<VspId, std::int64_t>> candidates;
  for (std::size_t c : order) {
    const SliceSpec& spec = config.slices[c];
    SliceStreams& streams = slice_streams_[c];
    const std::int64_t count =
        SamplePoisson(streams.arrivals, scenario_.ArrivalRate(spec.label));
    const auto& tenants = scenario_.Tenants(spec.label);
    if (tenants.empty()) continue;
    for (std::int64_t a = 0; a < count; ++a) {
      candidates.clear();
      for (std::size_t j : tenants) {
        candidates.emplace_back(scenario_.vsp(j).id, queues_[j].length());
      }
      const std::size_t j =
          scenario_.VspIndex(PreferVsp(candidates, streams.preferring));
      ++vsp_trace[j].arrivals;
      if (!BalkDecision(queues_[j].length(), scenario_.vsp(j).wait_willingness,
                        streams.balking)) {
        continue;
      }
      const std::int64_t patience =
          SampleExponentialSlots(streams.patience, spec.mean_patience);
      queues_[j].Push({spec.label, slot_, patience});
      ++vsp_trace[j].entrants;
    }
  }
}

SlotDecision Simulation::Decide(
    std::size_t i, const std::vector<std::int64_t>& requested,
    const std::vector<std::vector<std::int64_t>>& demand) {
  const NspView& view = scenario_.nsp_view(i);
  const NspConfig& config = scenario_.nsp(i);
  const NspState& state = nsps_[i];

  AdmissionInput input;
  input.capacity = config.capacity;
  for (std::size_t s = 0; s < view.slices.size(); ++s) {
    input.slices.push_back({view.slices[s].label, view.slices[s].demand,
                            view.slices[s].base_price, state.ActiveCount(s),
                            requested[s], state.cum_accepted(s),
                            state.cum_received(s)});
  }

  SlotDecision decision = SlotDecision::Empty(view);
  switch (config.admission) {
    case AdmissionStrategy::kDrredpa:
      decision.inter = DrredpaDecide(input);
      break;
    case AdmissionStrategy::kPage:
      decision.inter = PageDecide(input, partitions_[i]);
      break;
    case AdmissionStrategy::kMqsac:
      decision.inter = MqsacDecide(input, options_.mqsac_matrices.at(i));
      break;
  }

  for (std::size_t s = 0; s < view.slices.size(); ++s) {
    const NspSlice& slice = view.slices[s];
    if (config.intra == IntraStrategy::kVwpfa) {
      std::vector<Bid> bids;
      bids.reserve(slice.tenants.size());
      for (std::size_t t = 0; t < slice.tenants.size(); ++t) {
        const VspConfig& vsp = scenario_.vsp(slice.tenants[t]);
        auto it = scenario_.config().bid_overrides.find(vsp.id);
        const double bid = it == scenario_.config().bid_overrides.end()
                               ? vsp.true_valuation
                               : it->second;
        bids.push_back({vsp.id, bid, demand[s][t]});
      }
      AuctionOutcome outcome = RunSliceAuction(
          decision.inter[s], bids, slice.base_price, scenario_.config().epsilon);
      decision.intra[s] = std::move(outcome.quotas);
      decision.prices[s] = std::move(outcome.prices);
    } else {
      decision.intra[s] = OpAllocate(decision.inter[s], demand[s]);
      for (std::size_t t = 0; t < slice.tenants.size(); ++t) {
        decision.prices[s][t].assign(
            static_cast<std::size_t>(decision.intra[s][t]), slice.base_price);
      }
    }
  }
  return decision;
}

void Simulation::StepSlot() {
  if (done()) throw std::logic_error("StepSlot called past the horizon");
  const ScenarioConfig& config = scenario_.config();
  const std::size_t num_nsps = scenario_.num_nsps();
  const std::size_t num_vsps = scenario_.num_vsps();

  trace_ = SlotTrace{};
  trace_.slot = slot_;
  trace_.vsps.resize(num_vsps);

  // Death: expired instances release their resources, impatient requests
  // leave.
  for (NspState& nsp : nsps_) nsp.Expire(slot_);
  for (std::size_t j = 0; j < num_vsps; ++j) {
    trace_.vsps[j].start_length = queues_[j].length();
    trace_.vsps[j].reneged = PurgeReneged(queues_[j], slot_);
  }

  // Birth.
  ProcessArrivals(trace_.vsps);

  // Each VSP spreads its whole queue over the NSPs it can reach.
  // demand[i][s][t] = requests from tenant t of slice s to NSP i.
  std::vector<std::vector<std::vector<std::int64_t>>> demand(num_nsps);
  for (std::size_t i = 0; i < num_nsps; ++i) {
    const NspView& view = scenario_.nsp_view(i);
    demand[i].resize(view.slices.size());
    for (std::size_t s = 0; s < view.slices.size(); ++s) {
      demand[i][s].assign(view.slices[s].tenants.size(), 0);
    }
  }
  for (std::size_t j = 0; j < num_vsps; ++j) {
    const VspConfig& vsp = scenario_.vsp(j);
    const auto& reachable = scenario_.ReachableNsps(j);
    std::vector<double> ratios(reachable.size(), 0.0);
    std::vector<double> fairness(reachable.size(), 0.0);
    if (!config.uniform_split) {
      for (std::size_t r = 0; r < reachable.size(); ++r) {
        const std::size_t i = reachable[r];
        const std::size_t s = *scenario_.nsp_view(i).SliceIndex(vsp.slice_label);
        ratios[r] = last_ratios_[i][s];
        fairness[r] = last_fairness_[i];
      }
    }
    trace_.vsps[j].split =
        SplitRequests(queues_[j].length(), ratios, fairness, config.alpha);
    for (std::size_t r = 0; r < reachable.size(); ++r) {
      const std::size_t i = reachable[r];
      const NspView& view = scenario_.nsp_view(i);
      const std::size_t s = *view.SliceIndex(vsp.slice_label);
      const auto& tenants = view.slices[s].tenants;
      const std::size_t t = static_cast<std::size_t>(
          std::find(tenants.begin(), tenants.end(), j) - tenants.begin());
      demand[i][s][t] = trace_.vsps[j].split.counts[r];
    }
  }

  // Decisions.
  trace_.decisions.resize(num_nsps);
  trace_.requested.resize(num_nsps);
  std::vector<std::int64_t> served(num_vsps, 0);
  std::vector<SlotRevenue> revenue(num_nsps);
  std::vector<double> seconds(num_nsps, 0.0);
  for (std::size_t i = 0; i < num_nsps; ++i) {
    const NspView& view = scenario_.nsp_view(i);
    std::vector<std::int64_t>& requested = trace_.requested[i];
    requested.assign(view.slices.size(), 0);
    for (std::size_t s = 0; s < view.slices.size(); ++s) {
      requested[s] = std::accumulate(demand[i][s].begin(), demand[i][s].end(),
                                     std::int64_t{0});
    }

    const auto start = std::chrono::steady_clock::now();
    SlotDecision decision = Decide(i, requested, demand[i]);
    seconds[i] = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();

    for (std::size_t s = 0; s < view.slices.size(); ++s) {
      const std::int64_t granted =
          std::accumulate(decision.intra[s].begin(), decision.intra[s].end(),
                          std::int64_t{0});
      if (granted != decision.inter[s]) {
        throw InvariantViolation(
            SlotPrefix(slot_) + "NSP " + std::to_string(scenario_.nsp(i).id) +
            " slice " + std::to_string(view.slices[s].label) + " granted " +
            std::to_string(granted) + " of " +
            std::to_string(decision.inter[s]) + " inter-slice quotas");
      }
      for (std::size_t t = 0; t < view.slices[s].tenants.size(); ++t) {
        const std::int64_t quota = decision.intra[s][t];
        if (quota < 0 || quota > demand[i][s][t] ||
            static_cast<std::int64_t>(decision.prices[s][t].size()) != quota) {
          throw InvariantViolation(SlotPrefix(slot_) +
                                   "intra-slice quota outside [0, demand] or "
                                   "price list length mismatch");
        }
        served[view.slices[s].tenants[t]] += quota;
      }
    }
    revenue[i] = SlotRevenues(view, nsps_[i], decision);
    trace_.decisions[i] = std::move(decision);
  }

  // Serve admitted requests, oldest first, and start the instances.
  for (std::size_t j = 0; j < num_vsps; ++j) {
    VspQueue& queue = queues_[j];
    if (served[j] > queue.length()) {
      throw InvariantViolation(SlotPrefix(slot_) + "VSP " +
                               std::to_string(scenario_.vsp(j).id) +
                               " admitted more requests than it queued");
    }
    const auto popped = queue.PopOldest(served[j]);
    if (!popped.empty() && !queue.empty() &&
        popped.back().arrival_slot > queue.requests().front().arrival_slot) {
      throw InvariantViolation(SlotPrefix(slot_) + "FCFS order broken");
    }
    trace_.vsps[j].served = served[j];
    const VspSlotTrace& tr = trace_.vsps[j];
    if (queue.length() !=
        tr.start_length - tr.reneged + tr.entrants - tr.served) {
      throw InvariantViolation(SlotPrefix(slot_) + "queue bookkeeping off for VSP " +
                               std::to_string(scenario_.vsp(j).id));
    }
  }
  for (std::size_t i = 0; i < num_nsps; ++i) {
    const NspView& view = scenario_.nsp_view(i);
    const SlotDecision& decision = trace_.decisions[i];
    for (std::size_t s = 0; s < view.slices.size(); ++s) {
      const double mean_lifetime =
          config.slices[view.slices[s].catalog_index].mean_lifetime;
      for (const auto& prices : decision.prices[s]) {
        for (double price : prices) {
          const std::int64_t lifetime =
              SampleExponentialSlots(lifetime_streams_[i], mean_lifetime);
          nsps_[i].Admit(s, {slot_ + lifetime, price});
        }
      }
    }
    const ResourceVector used = nsps_[i].UsedResources(view, scenario_.dims());
    if (!used.FitsWithin(scenario_.nsp(i).capacity)) {
      throw InvariantViolation(SlotPrefix(slot_) + "NSP " +
                               std::to_string(scenario_.nsp(i).id) +
                               " exceeds capacity: uses " + used.ToString());
    }
  }

  // Metrics and the values VSPs observe next slot.
  for (std::size_t i = 0; i < num_nsps; ++i) {
    const NspView& view = scenario_.nsp_view(i);
    const SlotDecision& decision = trace_.decisions[i];
    SlotMetrics m;
    m.base_revenue = revenue[i].base;
    m.actual_revenue = revenue[i].actual;
    m.decision_seconds = seconds[i];
    for (std::size_t s = 0; s < view.slices.size(); ++s) {
      nsps_[i].RecordRequests(s, trace_.requested[i][s], decision.inter[s]);
      last_ratios_[i][s] =
          AcceptanceRatio(nsps_[i].cum_accepted(s), nsps_[i].cum_received(s));
      std::vector<double> valuations;
      for (std::size_t j : view.slices[s].tenants) {
        valuations.push_back(scenario_.vsp(j).true_valuation);
      }
      m.vwpf.push_back(SlotVwpf(decision.intra[s], valuations, config.epsilon));
    }
    m.acceptance = last_ratios_[i];
    last_fairness_[i] = view.slices.size() >= 2
                            ? InterSliceFairness(last_ratios_[i])
                            : 1.0;
    m.fairness = last_fairness_[i];
    metrics_[i].slots.push_back(std::move(m));
  }

  ++slot_;
}

}  // namespace slicemarket
