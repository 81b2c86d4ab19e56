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

#ifndef SLICEMARKET_AGENTS_H_
#define SLICEMARKET_AGENTS_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <utility>
#include <vector>

#include "slicemarket/rng.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

struct SubscriberRequest {
  SliceLabel slice_label = 0;
  std::int64_t arrival_slot = 0;
  std::int64_t patience_slots = 1;  // >= 1

  // The request reneges at the start of this slot if still queued.
  std::int64_t deadline_slot() const { return arrival_slot + patience_slots; }
};

// FCFS queue of pending subscriber requests held by one VSP.
class VspQueue {
 public:
  std::int64_t length() const {
    return static_cast<std::int64_t>(requests_.size());
  }
  bool empty() const { return requests_.empty(); }
  const std::deque<SubscriberRequest>& requests() const { return requests_; }

  // Requests must arrive in nondecreasing arrival_slot order.
  void Push(const SubscriberRequest& request);
  // Serves the `count` oldest requests.
  std::vector<SubscriberRequest> PopOldest(std::int64_t count);

 private:
  friend std::int64_t PurgeReneged(VspQueue& queue, std::int64_t current_slot);
  std::deque<SubscriberRequest> requests_;
};

// Removes every request whose deadline has been reached; survivors keep
// their order. Returns the number removed.
std::int64_t PurgeReneged(VspQueue& queue, std::int64_t current_slot);

// A subscriber picks the VSP with the shortest queue, uniformly among ties.
// Candidates are (vsp id, queue length). Throws on an empty list.
VspId PreferVsp(std::span<const std::pair<VspId, std::int64_t>> candidates,
                RngStream& stream);

// True when the arriving subscriber joins a queue of the given length, which
// happens with probability exp(-beta * queue_length).
bool BalkDecision(std::int64_t queue_length, double beta, RngStream& stream);

// Integer apportionment of `total` proportional to nonnegative `shares`
// (which should sum to `total`) by the largest-remainder rule. Ties in the
// remainder go to the lower index. Optional per-entry caps are respected.
std::vector<std::int64_t> LargestRemainder(std::span<const double> shares,
                                           std::int64_t total,
                                           std::span<const std::int64_t> caps = {});

// Per-NSP request counts l_{v,n}, aligned with the VSP's reachable NSPs.
struct RequestSplit {
  std::vector<std::int64_t> counts;

  std::int64_t total() const;
};

// Real-valued shares: queue_length times the alpha-weighted mix of a softmax
// over last-slot acceptance ratios and a softmax over last-slot fairness.
std::vector<double> RequestShares(std::int64_t queue_length,
                                  std::span<const double> last_ratios,
                                  std::span<const double> last_fairness,
                                  double alpha);

RequestSplit SplitRequests(std::int64_t queue_length,
                           std::span<const double> last_ratios,
                           std::span<const double> last_fairness, double alpha);

}  // namespace slicemarket

#endif  // SLICEMARKET_AGENTS_H_
