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

#ifndef SLICEMARKET_DRREDPA_H_
#define SLICEMARKET_DRREDPA_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slicemarket/resource_vector.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

// One slice as seen by an inter-slice admission strategy.
struct SliceAdmissionState {
  SliceLabel label = 0;
  ResourceVector demand;
  double base_price = 0.0;
  std::int64_t active = 0;     // instances alive this slot
  std::int64_t requested = 0;  // requests received this slot, all tenants
  // Counters up to the previous slot; this slot's requests are folded in by
  // the admission logic.
  std::int64_t cum_accepted = 0;
  std::int64_t cum_received = 0;
};

struct AdmissionInput {
  ResourceVector capacity;
  std::vector<SliceAdmissionState> slices;  // ascending label
};

// Per-slice quotas aligned with AdmissionInput::slices.
using SliceQuotas = std::vector<std::int64_t>;

// Index of the resource exhausted first if the slice monopolised
// `available`: argmin_k available[k] / demand[k] over k with demand[k] > 0,
// smallest index on ties. Throws std::invalid_argument on an all-zero demand.
std::size_t DominantResource(const ResourceVector& demand,
                             const ResourceVector& available);

// Base price earned per unit of the dominant resource.
double RevenueEfficiency(double base_price, const ResourceVector& demand,
                         const ResourceVector& available);

// capacity - sum_s demand_s * (active_s + tentative_s). Throws
// std::logic_error if any entry drops below -kResourceTolerance, which means
// an upstream decision was infeasible.
ResourceVector AvailableResources(const ResourceVector& capacity,
                                  std::span<const std::int64_t> active,
                                  std::span<const std::int64_t> tentative,
                                  std::span<const ResourceVector> demands);
ResourceVector AvailableResources(const AdmissionInput& input,
                                  std::span<const std::int64_t> tentative);

// Acceptance ratios with this slot's requests and the tentative grants
// folded into the cumulative counters.
std::vector<double> TentativeRatios(const AdmissionInput& input,
                                    std::span<const std::int64_t> tentative);

// True iff ratios never decrease with priority.
bool PriorityConditionHolds(std::span<const double> ratios_by_priority);

// Higher-priority member of every adjacent pair whose ratio ordering is
// inverted, ascending.
std::vector<std::size_t> ViolatingSlices(
    std::span<const double> ratios_by_priority);

// Dominant-resource revenue-efficiency greedy with priority maintenance.
// Grants one unit per iteration until no slice qualifies.
SliceQuotas DrredpaDecide(const AdmissionInput& input);

}  // namespace slicemarket

#endif  // SLICEMARKET_DRREDPA_H_
