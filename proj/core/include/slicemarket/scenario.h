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

#ifndef SLICEMARKET_SCENARIO_H_
#define SLICEMARKET_SCENARIO_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slicemarket/resource_vector.h"

namespace slicemarket {

// Priority tag of a slice type. Larger means higher priority; only the order
// matters.
using SliceLabel = int;
using NspId = int;
using VspId = int;

enum class AdmissionStrategy { kDrredpa, kPage, kMqsac };
enum class IntraStrategy { kVwpfa, kOp };

std::string_view ToString(AdmissionStrategy strategy);
std::string_view ToString(IntraStrategy strategy);
// Throws std::invalid_argument on an unknown name.
AdmissionStrategy ParseAdmissionStrategy(std::string_view name);
IntraStrategy ParseIntraStrategy(std::string_view name);

// One slice type of the market catalog.
struct SliceSpec {
  SliceLabel label = 0;
  ResourceVector demand;      // per admitted instance
  double base_price = 0.0;    // currency per instance per slot
  double arrival_rate = 0.0;  // requests per slot, before the scenario scale
  double mean_lifetime = 0.0;  // slots
  double mean_patience = 0.0;  // slots

  friend bool operator==(const SliceSpec&, const SliceSpec&) = default;
};

// An NSP's binding of a catalog slice. Unset fields inherit the catalog value.
struct NspSliceBinding {
  SliceLabel label = 0;
  std::optional<ResourceVector> demand;
  std::optional<double> base_price;

  friend bool operator==(const NspSliceBinding&,
                         const NspSliceBinding&) = default;
};

struct NspConfig {
  NspId id = 0;
  ResourceVector capacity;
  std::vector<NspSliceBinding> slices;
  AdmissionStrategy admission = AdmissionStrategy::kDrredpa;
  IntraStrategy intra = IntraStrategy::kVwpfa;
  // PAGE capacity fractions per slice label. Empty selects fractions
  // proportional to the slices' arrival rates.
  std::map<SliceLabel, double> page_partition;

  friend bool operator==(const NspConfig&, const NspConfig&) = default;
};

struct VspConfig {
  VspId id = 0;
  SliceLabel slice_label = 0;
  double true_valuation = 0.0;
  std::vector<NspId> reachable_nsps;
  double wait_willingness = 0.0;  // balking coefficient, in [0, 1]

  friend bool operator==(const VspConfig&, const VspConfig&) = default;
};

struct ScenarioConfig {
  std::vector<SliceSpec> slices;
  std::vector<NspConfig> nsps;
  std::vector<VspConfig> vsps;
  double alpha = 0.5;
  double epsilon = 1.0;
  std::int64_t horizon = 0;
  std::uint64_t seed = 0;
  double arrival_scale = 1.0;

  // NSP whose strategy the experiment driver varies.
  NspId subject_nsp = 0;
  int mqsac_matrices = 100;
  // Slice whose intra-slice VWPF is exported as the headline series.
  SliceLabel vwpf_slice = 0;
  // Replaces the acceptance/fairness weighted split with an even split.
  bool uniform_split = false;
  // Auction bids that differ from the true valuations. Mechanism testing only.
  std::map<VspId, double> bid_overrides;

  friend bool operator==(const ScenarioConfig&,
                         const ScenarioConfig&) = default;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A slice as seen by one NSP, with catalog defaults resolved.
struct NspSlice {
  SliceLabel label = 0;
  std::size_t catalog_index = 0;
  ResourceVector demand;
  double base_price = 0.0;
  // Indices into Scenario::config().vsps of the VSPs that retail this slice
  // and can reach this NSP, ascending by VSP id.
  std::vector<std::size_t> tenants;
};

struct NspView {
  std::size_t config_index = 0;
  std::vector<NspSlice> slices;  // ascending label

  // Position of `label` in `slices`, if supported.
  std::optional<std::size_t> SliceIndex(SliceLabel label) const;
};

// A ScenarioConfig that passed validation, plus the derived lookup tables.
class Scenario {
 public:
  // Throws ValidationError listing every violation found.
  static Scenario Validate(ScenarioConfig config);

  const ScenarioConfig& config() const { return config_; }
  std::size_t dims() const { return dims_; }

  std::size_t num_nsps() const { return config_.nsps.size(); }
  std::size_t num_vsps() const { return config_.vsps.size(); }
  const NspConfig& nsp(std::size_t i) const { return config_.nsps[i]; }
  const VspConfig& vsp(std::size_t j) const { return config_.vsps[j]; }
  const NspView& nsp_view(std::size_t i) const { return nsp_views_[i]; }

  std::size_t NspIndex(NspId id) const;
  std::size_t VspIndex(VspId id) const;
  std::size_t CatalogIndex(SliceLabel label) const;
  const SliceSpec& slice(SliceLabel label) const {
    return config_.slices[CatalogIndex(label)];
  }

  // Tenant set of a slice: VSP indices retailing it, ascending by VSP id.
  const std::vector<std::size_t>& Tenants(SliceLabel label) const;
  // NSP indices reachable by VSP index j, in the VSP's configured order.
  const std::vector<std::size_t>& ReachableNsps(std::size_t j) const {
    return reachable_[j];
  }

  // Effective Poisson rate of new requests for a catalog slice.
  double ArrivalRate(SliceLabel label) const {
    return slice(label).arrival_rate * config_.arrival_scale;
  }

  // Returns a copy with a different subject-NSP strategy or arrival scale.
  Scenario WithSubjectStrategy(AdmissionStrategy admission,
                               IntraStrategy intra) const;
  Scenario WithArrivalScale(double scale) const;
  Scenario WithHorizon(std::int64_t horizon) const;

 private:
  Scenario() = default;

  ScenarioConfig config_;
  std::size_t dims_ = 0;
  std::vector<NspView> nsp_views_;
  std::map<SliceLabel, std::vector<std::size_t>> tenants_;
  std::vector<std::vector<std::size_t>> reachable_;
};

}  // namespace slicemarket

#endif  // SLICEMARKET_SCENARIO_H_
