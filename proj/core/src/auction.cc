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

#include "slicemarket/auction.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace slicemarket {

double IncrementValue(double bid, std::int64_t unit_index, double epsilon) {
  const auto i = static_cast<double>(unit_index);
  return bid * (std::log(i + epsilon) - std::log(i - 1.0 + epsilon));
}

std::vector<Increment> SortedIncrements(std::span<const Bid> bids,
                                        double reserve, double epsilon) {
  std::vector<Increment> increments;
  for (std::size_t b = 0; b < bids.size(); ++b) {
    if (bids[b].amount < reserve) continue;
    for (std::int64_t i = 1; i <= bids[b].demand; ++i) {
      increments.push_back({b, i, IncrementValue(bids[b].amount, i, epsilon)});
    }
  }
  std::sort(increments.begin(), increments.end(),
            [bids](const Increment& x, const Increment& y) {
              if (x.value != y.value) return x.value > y.value;
              const Bid& bx = bids[x.bidder];
              const Bid& by = bids[y.bidder];
              if (bx.amount != by.amount) return bx.amount > by.amount;
              if (bx.vsp_id != by.vsp_id) return bx.vsp_id < by.vsp_id;
              return x.unit_index < y.unit_index;
            });
  return increments;
}

std::vector<std::int64_t> LifAllocate(std::int64_t offered,
                                      std::span<const Bid> bids,
                                      double reserve, double epsilon) {
  std::vector<std::int64_t> quotas(bids.size(), 0);
  const auto increments = SortedIncrements(bids, reserve, epsilon);
  const auto winners = std::min<std::size_t>(
      increments.size(), static_cast<std::size_t>(std::max<std::int64_t>(0, offered)));
  for (std::size_t w = 0; w < winners; ++w) ++quotas[increments[w].bidder];
  return quotas;
}

std::vector<double> CprpPrices(std::span<const double> preserved,
                               std::span<const double> rival_losers,
                               double bid, double reserve) {
  const std::size_t q = preserved.size();
  std::vector<double> prices;
  prices.reserve(q);
  for (std::size_t i = 1; i <= q; ++i) {
    const double own = preserved[q - i];
    const double rival = i <= rival_losers.size() ? rival_losers[i - 1] : 0.0;
    const double critical = own > 0.0 ? bid * rival / own : 0.0;
    if (critical <= reserve) {
      prices.resize(q, reserve);
      break;
    }
    prices.push_back(critical);
  }
  return prices;
}

std::int64_t AuctionOutcome::total_quota() const {
  return std::accumulate(quotas.begin(), quotas.end(), std::int64_t{0});
}

double AuctionOutcome::revenue() const {
  double total = 0.0;
  for (const auto& list : prices) {
    for (double p : list) total += p;
  }
  return total;
}

AuctionOutcome RunSliceAuction(std::int64_t offered, std::span<const Bid> bids,
                               double reserve, double epsilon) {
  AuctionOutcome outcome;
  outcome.quotas.assign(bids.size(), 0);
  outcome.prices.resize(bids.size());
  if (offered <= 0) return outcome;

  const auto increments = SortedIncrements(bids, reserve, epsilon);
  const std::size_t winners = std::min<std::size_t>(
      increments.size(), static_cast<std::size_t>(offered));
  for (std::size_t w = 0; w < winners; ++w) {
    ++outcome.quotas[increments[w].bidder];
  }

  for (std::size_t b = 0; b < bids.size(); ++b) {
    const std::int64_t q = outcome.quotas[b];
    if (q == 0) continue;
    std::vector<double> preserved;
    preserved.reserve(static_cast<std::size_t>(q));
    for (std::int64_t i = 1; i <= q; ++i) {
      preserved.push_back(IncrementValue(bids[b].amount, i, epsilon));
    }
    std::vector<double> rival_losers;
    for (std::size_t l = winners; l < increments.size(); ++l) {
      if (increments[l].bidder != b) rival_losers.push_back(increments[l].value);
    }
    outcome.prices[b] =
        CprpPrices(preserved, rival_losers, bids[b].amount, reserve);
  }

  // Quota left over once every eligible bidder is satisfied goes to the
  // bidders below the reserve.
  std::int64_t residual = offered - static_cast<std::int64_t>(winners);
  std::vector<std::size_t> filtered;
  for (std::size_t b = 0; b < bids.size(); ++b) {
    if (bids[b].amount < reserve && bids[b].demand > 0) filtered.push_back(b);
  }
  std::sort(filtered.begin(), filtered.end(), [bids](std::size_t x, std::size_t y) {
    return bids[x].vsp_id < bids[y].vsp_id;
  });
  while (residual > 0) {
    bool progressed = false;
    for (std::size_t b : filtered) {
      if (residual == 0) break;
      if (outcome.quotas[b] >= bids[b].demand) continue;
      ++outcome.quotas[b];
      outcome.prices[b].push_back(reserve);
      --residual;
      progressed = true;
    }
    if (!progressed) break;
  }
  return outcome;
}

std::vector<AuctionOutcome> VwpfaRun(std::span<const SliceAuction> slices,
                                     double epsilon) {
  std::vector<AuctionOutcome> outcomes;
  outcomes.reserve(slices.size());
  for (const SliceAuction& s : slices) {
    outcomes.push_back(RunSliceAuction(s.offered, s.bids, s.reserve, epsilon));
  }
  return outcomes;
}

double VwpfObjective(std::span<const std::int64_t> quotas,
                     std::span<const Bid> bids, double epsilon) {
  assert(quotas.size() == bids.size());
  double total = 0.0;
  for (std::size_t b = 0; b < bids.size(); ++b) {
    total += bids[b].amount * std::log(static_cast<double>(quotas[b]) + epsilon);
  }
  return total;
}

}  // namespace slicemarket
