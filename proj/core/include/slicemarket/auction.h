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

#ifndef SLICEMARKET_AUCTION_H_
#define SLICEMARKET_AUCTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "slicemarket/scenario.h"

namespace slicemarket {

// A VSP's sealed bid in one slice's quota auction.
struct Bid {
  VspId vsp_id = 0;
  double amount = 0.0;      // reported value per quota per slot
  std::int64_t demand = 0;  // quotas requested from this NSP this slot
};

// Marginal gain of the weighted log utility when a bidder's quota rises from
// unit_index - 1 to unit_index.
struct Increment {
  std::size_t bidder = 0;  // index into the bid list
  std::int64_t unit_index = 1;
  double value = 0.0;
};

double IncrementValue(double bid, std::int64_t unit_index, double epsilon);

// Increments of every bidder with amount >= reserve, sorted descending.
// Ties go to the higher bid, then the lower VSP id, then the lower unit.
std::vector<Increment> SortedIncrements(std::span<const Bid> bids,
                                        double reserve, double epsilon);

// Larger Increment First: one quota per increment among the top
// min(offered, #increments). Bids below the reserve receive nothing.
// Returns quotas aligned with `bids`.
std::vector<std::int64_t> LifAllocate(std::int64_t offered,
                                      std::span<const Bid> bids,
                                      double reserve, double epsilon);

// Critical prices of one winner's quotas, ordered from the quota attached to
// its smallest preserved increment upward.
//
// `preserved` holds the winner's winning increments in unit order (hence
// descending); `rival_losers` holds every losing increment of the other
// bidders, descending. The i-th price is
//   max(bid * rival_losers[i-1] / preserved[q-i], reserve),
// a missing rival loser counting as 0. Once a price settles at the reserve
// every remaining quota is priced at the reserve.
std::vector<double> CprpPrices(std::span<const double> preserved,
                               std::span<const double> rival_losers,
                               double bid, double reserve);

struct AuctionOutcome {
  std::vector<std::int64_t> quotas;         // aligned with the bids
  std::vector<std::vector<double>> prices;  // per bidder, one per quota

  std::int64_t total_quota() const;
  double revenue() const;
};

// One slice's auction: LIF allocation, critical pricing for the winners, then
// any quota left over goes one at a time, ascending VSP id, to the bidders
// that were filtered out by the reserve, at the reserve price and within
// their demand.
AuctionOutcome RunSliceAuction(std::int64_t offered, std::span<const Bid> bids,
                               double reserve, double epsilon);

struct SliceAuction {
  std::int64_t offered = 0;
  std::vector<Bid> bids;
  double reserve = 0.0;
};

// The auction run independently for every slice of an NSP.
std::vector<AuctionOutcome> VwpfaRun(std::span<const SliceAuction> slices,
                                     double epsilon);

// sum_v amount_v * ln(quota_v + epsilon) over all bids.
double VwpfObjective(std::span<const std::int64_t> quotas,
                     std::span<const Bid> bids, double epsilon);

}  // namespace slicemarket

#endif  // SLICEMARKET_AUCTION_H_
