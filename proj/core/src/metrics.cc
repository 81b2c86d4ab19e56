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

#include "slicemarket/metrics.h"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace slicemarket {

double AcceptanceRatio(std::int64_t accepted, std::int64_t received) {
  if (accepted < 0 || accepted > received) {
    throw std::invalid_argument("AcceptanceRatio: accepted exceeds received");
  }
  if (received == 0) return 0.0;
  return static_cast<double>(accepted) / static_cast<double>(received);
}

double InterSliceFairness(std::span<const double> ratios_by_priority) {
  const std::size_t m = ratios_by_priority.size();
  if (m < 2) {
    throw std::invalid_argument("InterSliceFairness: needs two or more slices");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double gap = ratios_by_priority[i + 1] - ratios_by_priority[i];
    if (gap < 0.0) return 0.0;
    sum += gap;
    sum_sq += gap * gap;
  }
  if (sum_sq == 0.0) return 1.0;
  return sum * sum / (static_cast<double>(m - 1) * sum_sq);
}

double SlotVwpf(std::span<const std::int64_t> quotas,
                std::span<const double> true_valuations, double epsilon) {
  assert(quotas.size() == true_valuations.size());
  double total = 0.0;
  for (std::size_t v = 0; v < quotas.size(); ++v) {
    total += true_valuations[v] *
             std::log(static_cast<double>(quotas[v]) + epsilon);
  }
  return total;
}

SlotRevenue SlotRevenues(const NspView& view, const NspState& state,
                         const SlotDecision& decision) {
  SlotRevenue revenue;
  for (std::size_t s = 0; s < view.slices.size(); ++s) {
    const double base_price = view.slices[s].base_price;
    for (const ActiveInstance& instance : state.active(s)) {
      revenue.base += base_price;
      revenue.actual += instance.charged_price;
    }
    for (const auto& prices : decision.prices[s]) {
      for (double price : prices) {
        revenue.base += base_price;
        revenue.actual += price;
      }
    }
  }
  return revenue;
}

}  // namespace slicemarket
