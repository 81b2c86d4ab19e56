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

#include "slicemarket/agents.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace slicemarket {

void VspQueue::Push(const SubscriberRequest& request) {
  if (!requests_.empty() &&
      requests_.back().arrival_slot > request.arrival_slot) {
    throw std::logic_error("VspQueue::Push: arrival out of order");
  }
  requests_.push_back(request);
}

std::vector<SubscriberRequest> VspQueue::PopOldest(std::int64_t count) {
  if (count < 0 || count > length()) {
    throw std::logic_error("VspQueue::PopOldest: bad count");
  }
  std::vector<SubscriberRequest> served(requests_.begin(),
                                        requests_.begin() + count);
  requests_.erase(requests_.begin(), requests_.begin() + count);
  return served;
}

std::int64_t PurgeReneged(VspQueue& queue, std::int64_t current_slot) {
  return static_cast<std::int64_t>(
      std::erase_if(queue.requests_, [current_slot](const auto& r) {
        return r.deadline_slot() <= current_slot;
      }));
}

VspId PreferVsp(std::span<const std::pair<VspId, std::int64_t>> candidates,
                RngStream& stream) {
  if (candidates.empty()) {
    throw std::invalid_argument("PreferVsp: empty candidate list");
  }
  std::int64_t shortest = candidates.front().second;
  for (const auto& c : candidates) shortest = std::min(shortest, c.second);
  std::vector<VspId> tied;
  for (const auto& c : candidates) {
    if (c.second == shortest) tied.push_back(c.first);
  }
  if (tied.size() == 1) return tied.front();
  return tied[stream.UniformBelow(tied.size())];
}

bool BalkDecision(std::int64_t queue_length, double beta, RngStream& stream) {
  // One draw per arrival keeps stream consumption independent of state.
  const double u = stream.NextUniform();
  return u < std::exp(-beta * static_cast<double>(queue_length));
}

std::vector<std::int64_t> LargestRemainder(std::span<const double> shares,
                                           std::int64_t total,
                                           std::span<const std::int64_t> caps) {
  const std::size_t n = shares.size();
  assert(caps.empty() || caps.size() == n);
  std::vector<std::int64_t> out(n, 0);
  if (n == 0 || total <= 0) return out;

  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Guard against 6.9999999 style drift before flooring.
    out[i] = static_cast<std::int64_t>(std::floor(shares[i] + 1e-9));
    if (!caps.empty()) out[i] = std::min(out[i], caps[i]);
    out[i] = std::max<std::int64_t>(out[i], 0);
    assigned += out[i];
  }
  if (assigned > total) {
    throw std::logic_error("LargestRemainder: shares exceed total");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ra = shares[a] - static_cast<double>(out[a]);
    const double rb = shares[b] - static_cast<double>(out[b]);
    return ra > rb;
  });
  // Repeated passes only matter when caps bind; each pass hands out at most
  // one unit per entry.
  while (assigned < total) {
    bool progressed = false;
    for (std::size_t i : order) {
      if (assigned == total) break;
      if (!caps.empty() && out[i] >= caps[i]) continue;
      ++out[i];
      ++assigned;
      progressed = true;
    }
    if (!progressed) break;
  }
  return out;
}

std::int64_t RequestSplit::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::vector<double> RequestShares(std::int64_t queue_length,
                                  std::span<const double> last_ratios,
                                  std::span<const double> last_fairness,
                                  double alpha) {
  assert(last_ratios.size() == last_fairness.size());
  const std::size_t n = last_ratios.size();
  std::vector<double> shares(n, 0.0);
  if (n == 0) return shares;
  if (n == 1) {
    shares[0] = static_cast<double>(queue_length);
    return shares;
  }
  double ratio_norm = 0.0;
  double fairness_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ratio_norm += std::exp(last_ratios[i]);
    fairness_norm += std::exp(last_fairness[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double weight =
        alpha * std::exp(last_ratios[i]) / ratio_norm +
        (1.0 - alpha) * std::exp(last_fairness[i]) / fairness_norm;
    shares[i] = weight * static_cast<double>(queue_length);
  }
  return shares;
}

RequestSplit SplitRequests(std::int64_t queue_length,
                           std::span<const double> last_ratios,
                           std::span<const double> last_fairness,
                           double alpha) {
  RequestSplit split;
  const auto shares =
      RequestShares(queue_length, last_ratios, last_fairness, alpha);
  split.counts = LargestRemainder(shares, queue_length);
  return split;
}

}  // namespace slicemarket
