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

#include "slicemarket/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "slicemarket/agents.h"

namespace slicemarket {

StaticPartition ProportionalPartition(std::span<const double> weights) {
  StaticPartition partition;
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double w : weights) {
    partition.fractions.push_back(
        total > 0.0 ? w / total : 1.0 / static_cast<double>(weights.size()));
  }
  return partition;
}

SliceQuotas PageDecide(const AdmissionInput& input,
                       const StaticPartition& partition) {
  if (partition.fractions.size() != input.slices.size()) {
    throw std::invalid_argument("PageDecide: partition/slice count mismatch");
  }
  SliceQuotas quotas(input.slices.size(), 0);
  for (std::size_t s = 0; s < input.slices.size(); ++s) {
    const SliceAdmissionState& slice = input.slices[s];
    ResourceVector share = ResourceVector::Zeros(input.capacity.size());
    share.AddScaled(input.capacity, partition.fractions[s]);
    ResourceVector used = ResourceVector::Zeros(input.capacity.size());
    used.AddScaled(slice.demand, static_cast<double>(slice.active));
    while (quotas[s] < slice.requested) {
      ResourceVector next = used;
      next += slice.demand;
      if (!next.FitsWithin(share)) break;
      used = std::move(next);
      ++quotas[s];
    }
  }
  return quotas;
}

int MqsacBucket(const AdmissionInput& input, int buckets) {
  std::vector<std::int64_t> none(input.slices.size(), 0);
  const ResourceVector available = AvailableResources(input, none);
  double scarcest = 1.0;
  for (std::size_t k = 0; k < available.size(); ++k) {
    const double free =
        input.capacity[k] > 0.0 ? available[k] / input.capacity[k] : 0.0;
    scarcest = std::min(scarcest, free);
  }
  const int bucket = static_cast<int>(std::floor(scarcest * buckets));
  return std::clamp(bucket, 0, buckets - 1);
}

SliceQuotas MqsacDecide(const AdmissionInput& input,
                        const PreferenceMatrix& matrix) {
  if (matrix.columns.empty()) {
    throw std::invalid_argument("MqsacDecide: empty preference matrix");
  }
  const int bucket =
      MqsacBucket(input, static_cast<int>(matrix.columns.size()));
  std::vector<std::size_t> order;
  for (SliceLabel label : matrix.columns[static_cast<std::size_t>(bucket)]) {
    auto it = std::find_if(input.slices.begin(), input.slices.end(),
                           [label](const auto& s) { return s.label == label; });
    if (it == input.slices.end()) {
      throw std::invalid_argument("MqsacDecide: matrix names unknown slice");
    }
    order.push_back(static_cast<std::size_t>(it - input.slices.begin()));
  }

  SliceQuotas quotas(input.slices.size(), 0);
  std::vector<std::int64_t> none(input.slices.size(), 0);
  ResourceVector available = AvailableResources(input, none);
  bool granted = true;
  while (granted) {
    granted = false;
    for (std::size_t s : order) {
      const SliceAdmissionState& slice = input.slices[s];
      if (quotas[s] >= slice.requested) continue;
      if (!slice.demand.FitsWithin(available)) continue;
      available -= slice.demand;
      ++quotas[s];
      granted = true;
    }
  }
  return quotas;
}

std::vector<PreferenceMatrix> GeneratePreferenceMatrices(
    int count, std::span<const SliceLabel> labels, RngStream& stream,
    int buckets) {
  if (count < 1) {
    throw std::invalid_argument("GeneratePreferenceMatrices: count < 1");
  }
  std::vector<PreferenceMatrix> matrices(static_cast<std::size_t>(count));
  for (PreferenceMatrix& m : matrices) {
    m.columns.resize(static_cast<std::size_t>(buckets));
    for (auto& column : m.columns) {
      column.assign(labels.begin(), labels.end());
      // Fisher-Yates on our own uniform draw.
      for (std::size_t i = column.size(); i > 1; --i) {
        std::swap(column[i - 1], column[stream.UniformBelow(i)]);
      }
    }
  }
  return matrices;
}

std::vector<std::int64_t> OpAllocate(std::int64_t offered,
                                     std::span<const std::int64_t> demands) {
  const std::int64_t total_demand =
      std::accumulate(demands.begin(), demands.end(), std::int64_t{0});
  const std::int64_t granted = std::min(std::max<std::int64_t>(offered, 0),
                                        total_demand);
  std::vector<double> shares(demands.size(), 0.0);
  if (total_demand > 0) {
    for (std::size_t v = 0; v < demands.size(); ++v) {
      shares[v] = static_cast<double>(granted) *
                  static_cast<double>(demands[v]) /
                  static_cast<double>(total_demand);
    }
  }
  return LargestRemainder(shares, granted, demands);
}

}  // namespace slicemarket
