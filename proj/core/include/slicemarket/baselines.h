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

#ifndef SLICEMARKET_BASELINES_H_
#define SLICEMARKET_BASELINES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "slicemarket/drredpa.h"
#include "slicemarket/rng.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

// PAGE: each slice owns a fixed fraction of the capacity and admits only
// against its own share.
struct StaticPartition {
  std::vector<double> fractions;  // aligned with AdmissionInput::slices
};

// Fractions proportional to `weights` (typically arrival rates). Falls back
// to an even split when every weight is zero.
StaticPartition ProportionalPartition(std::span<const double> weights);

SliceQuotas PageDecide(const AdmissionInput& input,
                       const StaticPartition& partition);

// MQSAC: the admission order for each coarse resource state. Columns are
// indexed by bucket and hold a permutation of the NSP's slice labels.
struct PreferenceMatrix {
  std::vector<std::vector<SliceLabel>> columns;
};

inline constexpr int kMqsacBuckets = 10;

// Decile of the scarcest resource's free fraction, min_k available_k /
// capacity_k, clamped to [0, buckets - 1]. Dimensions with zero capacity
// count as exhausted.
int MqsacBucket(const AdmissionInput& input, int buckets = kMqsacBuckets);

// Admits one unit at a time in the bucket's slice order, cycling through the
// order until a full pass grants nothing.
SliceQuotas MqsacDecide(const AdmissionInput& input,
                        const PreferenceMatrix& matrix);

// `count` matrices of uniformly random permutations.
std::vector<PreferenceMatrix> GeneratePreferenceMatrices(
    int count, std::span<const SliceLabel> labels, RngStream& stream,
    int buckets = kMqsacBuckets);

// OP intra-slice split: offered * demand_v / sum(demand), largest remainder,
// capped by demand. Grants min(offered, sum(demand)) in total.
std::vector<std::int64_t> OpAllocate(std::int64_t offered,
                                     std::span<const std::int64_t> demands);

}  // namespace slicemarket

#endif  // SLICEMARKET_BASELINES_H_
