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

#ifndef SLICEMARKET_ORACLE_H_
#define SLICEMARKET_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "slicemarket/auction.h"
#include "slicemarket/drredpa.h"

namespace slicemarket {

// Exhaustive solvers used to check the heuristics on small instances. They
// refuse instances above their enumeration bound instead of truncating.

inline constexpr std::int64_t kOracleEnumerationLimit = 1'000'000;

struct P3Solution {
  SliceQuotas quotas;
  double objective = 0.0;  // sum_s base_price_s * quota_s
};

// Maximises base revenue over all integer quota vectors with
// 0 <= quota_s <= requested_s that fit the residual capacity. The priority
// soft constraint is ignored. Ties go to the lexicographically largest
// vector read from the highest priority down. Throws std::length_error if
// prod_s (requested_s + 1) exceeds the enumeration limit.
P3Solution ExactP3(const AdmissionInput& input);

struct P4Solution {
  std::vector<std::int64_t> quotas;  // aligned with the bids
  double objective = 0.0;            // VwpfObjective over all bids
};

// Maximises the value-weighted log utility over integer splits where bids
// below the reserve get nothing, every quota is within demand, and the split
// hands out min(offered, eligible demand) quotas in total. Throws
// std::length_error if prod_v (demand_v + 1) exceeds the enumeration limit.
P4Solution ExactP4(std::int64_t offered, std::span<const Bid> bids,
                   double reserve, double epsilon);

}  // namespace slicemarket

#endif  // SLICEMARKET_ORACLE_H_
