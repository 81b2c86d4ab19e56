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

#ifndef SLICEMARKET_MARKET_STATE_H_
#define SLICEMARKET_MARKET_STATE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "slicemarket/resource_vector.h"
#include "slicemarket/scenario.h"

namespace slicemarket {

struct ActiveInstance {
  std::int64_t expiry_slot = 0;  // first slot in which it no longer exists
  double charged_price = 0.0;    // per slot, fixed at admission
};

// Mutable per-NSP ledger. All per-slice vectors are aligned with
// NspView::slices.
class NspState {
 public:
  NspState() = default;
  explicit NspState(const NspView& view);

  std::size_t num_slices() const { return active_.size(); }

  const std::vector<ActiveInstance>& active(std::size_t s) const {
    return active_[s];
  }
  std::int64_t ActiveCount(std::size_t s) const {
    return static_cast<std::int64_t>(active_[s].size());
  }
  std::vector<std::int64_t> ActiveCounts() const;

  std::int64_t cum_received(std::size_t s) const { return cum_received_[s]; }
  std::int64_t cum_accepted(std::size_t s) const { return cum_accepted_[s]; }

  // Removes instances with expiry_slot <= slot. Returns how many expired.
  std::int64_t Expire(std::int64_t slot);
  void Admit(std::size_t s, ActiveInstance instance);
  void RecordRequests(std::size_t s, std::int64_t received,
                      std::int64_t accepted);

  // Aggregate demand of every active instance.
  ResourceVector UsedResources(const NspView& view, std::size_t dims) const;

 private:
  std::vector<std::vector<ActiveInstance>> active_;
  std::vector<std::int64_t> cum_received_;
  std::vector<std::int64_t> cum_accepted_;
};

// What one NSP decided in one slot. Indexed [slice][tenant] where tenants
// follow NspSlice::tenants.
struct SlotDecision {
  std::vector<std::int64_t> inter;
  std::vector<std::vector<std::int64_t>> intra;
  std::vector<std::vector<std::vector<double>>> prices;

  static SlotDecision Empty(const NspView& view);
};

}  // namespace slicemarket

#endif  // SLICEMARKET_MARKET_STATE_H_
