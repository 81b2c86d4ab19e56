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

#include "slicemarket/drredpa.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "slicemarket/metrics.h"

namespace slicemarket {
namespace {

std::vector<ResourceVector> Demands(const AdmissionInput& input) {
  std::vector<ResourceVector> demands;
  demands.reserve(input.slices.size());
  for (const auto& s : input.slices) demands.push_back(s.demand);
  return demands;
}

std::vector<std::int64_t> ActiveCounts(const AdmissionInput& input) {
  std::vector<std::int64_t> active;
  active.reserve(input.slices.size());
  for (const auto& s : input.slices) active.push_back(s.active);
  return active;
}

// Candidates sorted by descending efficiency; ties favour the higher label.
std::vector<std::size_t> ByEfficiency(const AdmissionInput& input,
                                      std::vector<std::size_t> candidates,
                                      const ResourceVector& available) {
  std::vector<double> efficiency(input.slices.size(), 0.0);
  for (std::size_t s : candidates) {
    efficiency[s] = RevenueEfficiency(input.slices[s].base_price,
                                      input.slices[s].demand, available);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](std::size_t a, std::size_t b) {
              if (efficiency[a] != efficiency[b]) {
                return efficiency[a] > efficiency[b];
              }
              return input.slices[a].label > input.slices[b].label;
            });
  return candidates;
}

}  // namespace

std::size_t DominantResource(const ResourceVector& demand,
                             const ResourceVector& available) {
  assert(demand.size() == available.size());
  std::size_t best = demand.size();
  double best_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < demand.size(); ++k) {
    if (demand[k] <= 0.0) continue;
    const double ratio = available[k] / demand[k];
    if (best == demand.size() || ratio < best_ratio) {
      best = k;
      best_ratio = ratio;
    }
  }
  if (best == demand.size()) {
    throw std::invalid_argument("DominantResource: all-zero demand");
  }
  return best;
}

double RevenueEfficiency(double base_price, const ResourceVector& demand,
                         const ResourceVector& available) {
  return base_price / demand[DominantResource(demand, available)];
}

ResourceVector AvailableResources(const ResourceVector& capacity,
                                  std::span<const std::int64_t> active,
                                  std::span<const std::int64_t> tentative,
                                  std::span<const ResourceVector> demands) {
  assert(active.size() == demands.size() && tentative.size() == demands.size());
  ResourceVector available = capacity;
  for (std::size_t s = 0; s < demands.size(); ++s) {
    available.AddScaled(demands[s],
                        -static_cast<double>(active[s] + tentative[s]));
  }
  if (!available.AllNonNegative(kResourceTolerance)) {
    throw std::logic_error("AvailableResources: negative availability " +
                           available.ToString());
  }
  return available;
}

ResourceVector AvailableResources(const AdmissionInput& input,
                                  std::span<const std::int64_t> tentative) {
  const auto active = ActiveCounts(input);
  const auto demands = Demands(input);
  return AvailableResources(input.capacity, active, tentative, demands);
}

std::vector<double> TentativeRatios(const AdmissionInput& input,
                                    std::span<const std::int64_t> tentative) {
  std::vector<double> ratios(input.slices.size());
  for (std::size_t s = 0; s < input.slices.size(); ++s) {
    const auto& slice = input.slices[s];
    ratios[s] = AcceptanceRatio(slice.cum_accepted + tentative[s],
                                slice.cum_received + slice.requested);
  }
  return ratios;
}

bool PriorityConditionHolds(std::span<const double> ratios_by_priority) {
  for (std::size_t s = 0; s + 1 < ratios_by_priority.size(); ++s) {
    if (ratios_by_priority[s] > ratios_by_priority[s + 1]) return false;
  }
  return true;
}

std::vector<std::size_t> ViolatingSlices(
    std::span<const double> ratios_by_priority) {
  std::vector<std::size_t> violating;
  for (std::size_t s = 0; s + 1 < ratios_by_priority.size(); ++s) {
    if (ratios_by_priority[s] > ratios_by_priority[s + 1]) {
      violating.push_back(s + 1);
    }
  }
  return violating;
}

SliceQuotas DrredpaDecide(const AdmissionInput& input) {
  const std::size_t n = input.slices.size();
  SliceQuotas quotas(n, 0);
  const auto active = ActiveCounts(input);
  const auto demands = Demands(input);

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});

  bool granted = true;
  while (granted) {
    granted = false;
    const ResourceVector available =
        AvailableResources(input.capacity, active, quotas, demands);
    const auto ratios = TentativeRatios(input, quotas);
    auto fits = [&](std::size_t s) {
      return input.slices[s].demand.FitsWithin(available) &&
             quotas[s] < input.slices[s].requested;
    };

    if (PriorityConditionHolds(ratios)) {
      for (std::size_t s : ByEfficiency(input, all, available)) {
        if (!fits(s)) continue;
        ++quotas[s];
        if (PriorityConditionHolds(TentativeRatios(input, quotas))) {
          granted = true;
          break;
        }
        --quotas[s];
      }
    } else {
      for (std::size_t s :
           ByEfficiency(input, ViolatingSlices(ratios), available)) {
        if (!fits(s)) continue;
        ++quotas[s];
        granted = true;
        break;
      }
    }
  }
  return quotas;
}

}  // namespace slicemarket
