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

#include "slicemarket/market_state.h"

#include <algorithm>
#include <cassert>

namespace slicemarket {

NspState::NspState(const NspView& view)
    : active_(view.slices.size()),
      cum_received_(view.slices.size(), 0),
      cum_accepted_(view.slices.size(), 0) {}

std::vector<std::int64_t> NspState::ActiveCounts() const {
  std::vector<std::int64_t> counts(active_.size());
  for (std::size_t s = 0; s < active_.size(); ++s) counts[s] = ActiveCount(s);
  return counts;
}

std::int64_t NspState::Expire(std::int64_t slot) {
  std::int64_t expired = 0;
  for (auto& instances : active_) {
    const auto before = instances.size();
    std::erase_if(instances, [slot](const ActiveInstance& a) {
      return a.expiry_slot <= slot;
    });
    expired += static_cast<std::int64_t>(before - instances.size());
  }
  return expired;
}

void NspState::Admit(std::size_t s, ActiveInstance instance) {
  active_[s].push_back(instance);
}

void NspState::RecordRequests(std::size_t s, std::int64_t received,
                              std::int64_t accepted) {
  assert(accepted <= received);
  cum_received_[s] += received;
  cum_accepted_[s] += accepted;
}

ResourceVector NspState::UsedResources(const NspView& view,
                                       std::size_t dims) const {
  ResourceVector used = ResourceVector::Zeros(dims);
  for (std::size_t s = 0; s < active_.size(); ++s) {
    used.AddScaled(view.slices[s].demand,
                   static_cast<double>(active_[s].size()));
  }
  return used;
}

SlotDecision SlotDecision::Empty(const NspView& view) {
  SlotDecision d;
  d.inter.assign(view.slices.size(), 0);
  d.intra.resize(view.slices.size());
  d.prices.resize(view.slices.size());
  for (std::size_t s = 0; s < view.slices.size(); ++s) {
    d.intra[s].assign(view.slices[s].tenants.size(), 0);
    d.prices[s].resize(view.slices[s].tenants.size());
  }
  return d;
}

}  // namespace slicemarket
