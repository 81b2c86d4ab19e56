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

#ifndef SLICEMARKET_METRICS_H_
#define SLICEMARKET_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "slicemarket/market_state.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

// Cumulative acceptance ratio. 0 when nothing has been received yet.
// Throws std::invalid_argument if accepted > received.
double AcceptanceRatio(std::int64_t accepted, std::int64_t received);

// Inter-slice fairness of one NSP from its acceptance ratios ordered by
// ascending priority: 0 if any higher-priority slice has a strictly lower
// ratio than its lower neighbour, otherwise Jain's index over the adjacent
// gaps. Equal ratios (all gaps zero) score 1. Needs at least two slices.
double InterSliceFairness(std::span<const double> ratios_by_priority);

// Value-weighted proportional fairness of one slot in one slice:
// sum_v valuation_v * ln(quota_v + epsilon).
double SlotVwpf(std::span<const std::int64_t> quotas,
                std::span<const double> true_valuations, double epsilon);

struct SlotRevenue {
  double base = 0.0;    // every instance at its slice's base price
  double actual = 0.0;  // every instance at the price actually charged
};

// Revenue of one slot: instances still active at decision time plus the
// newly granted quotas. Both sums traverse instances in the same order, so
// when every charged price equals the base price the two are bitwise equal.
SlotRevenue SlotRevenues(const NspView& view, const NspState& state,
                         const SlotDecision& decision);

// Everything recorded for one NSP in one slot.
struct SlotMetrics {
  double base_revenue = 0.0;
  double actual_revenue = 0.0;
  double fairness = 1.0;
  std::vector<double> acceptance;  // per slice, aligned with NspView
  std::vector<double> vwpf;        // per slice, aligned with NspView
  double decision_seconds = 0.0;
};

struct MetricSeries {
  std::vector<SliceLabel> labels;
  std::vector<SlotMetrics> slots;
};

}  // namespace slicemarket

#endif  // SLICEMARKET_METRICS_H_
