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

#include "slicemarket/oracle.h"

#include <algorithm>
#include <stdexcept>

namespace slicemarket {
namespace {

// Mixed-radix odometer over [0, bound_i]. Returns false after the last
// vector.
bool Advance(std::vector<std::int64_t>& digits,
             const std::vector<std::int64_t>& bounds) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < bounds[i]) {
      ++digits[i];
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

void CheckSize(const std::vector<std::int64_t>& bounds, const char* who) {
  std::int64_t product = 1;
  for (std::int64_t b : bounds) {
    product *= (b + 1);
    if (product > kOracleEnumerationLimit) {
      throw std::length_error(std::string(who) + ": instance too large");
    }
  }
}

}  // namespace

P3Solution ExactP3(const AdmissionInput& input) {
  const std::size_t n = input.slices.size();
  std::vector<std::int64_t> bounds(n);
  for (std::size_t s = 0; s < n; ++s) {
    bounds[s] = std::max<std::int64_t>(input.slices[s].requested, 0);
  }
  CheckSize(bounds, "ExactP3");

  ResourceVector residual = input.capacity;
  for (const auto& s : input.slices) {
    residual.AddScaled(s.demand, -static_cast<double>(s.active));
  }

  P3Solution best;
  best.quotas.assign(n, 0);
  best.objective = 0.0;
  std::vector<std::int64_t> digits(n, 0);
  do {
    ResourceVector used = ResourceVector::Zeros(input.capacity.size());
    double objective = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      used.AddScaled(input.slices[s].demand, static_cast<double>(digits[s]));
      objective += input.slices[s].base_price * static_cast<double>(digits[s]);
    }
    if (!used.FitsWithin(residual)) continue;
    const bool better =
        objective > best.objective + 1e-12 ||
        (objective >= best.objective - 1e-12 &&
         std::lexicographical_compare(best.quotas.rbegin(), best.quotas.rend(),
                                      digits.rbegin(), digits.rend()));
    if (better) {
      best.quotas = digits;
      best.objective = objective;
    }
  } while (Advance(digits, bounds));
  return best;
}

P4Solution ExactP4(std::int64_t offered, std::span<const Bid> bids,
                   double reserve, double epsilon) {
  const std::size_t n = bids.size();
  std::vector<std::int64_t> bounds(n, 0);
  std::int64_t eligible_demand = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (bids[v].amount >= reserve) {
      bounds[v] = std::max<std::int64_t>(bids[v].demand, 0);
      eligible_demand += bounds[v];
    }
  }
  CheckSize(bounds, "ExactP4");
  const std::int64_t target =
      std::min(std::max<std::int64_t>(offered, 0), eligible_demand);

  P4Solution best;
  bool found = false;
  std::vector<std::int64_t> digits(n, 0);
  do {
    std::int64_t sum = 0;
    for (std::int64_t d : digits) sum += d;
    if (sum != target) continue;
    const double objective = VwpfObjective(digits, bids, epsilon);
    if (!found || objective > best.objective) {
      best.quotas = digits;
      best.objective = objective;
      found = true;
    }
  } while (Advance(digits, bounds));
  return best;
}

}  // namespace slicemarket
