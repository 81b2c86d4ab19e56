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

#ifndef SLICEMARKET_SCENARIO_IO_H_
#define SLICEMARKET_SCENARIO_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "slicemarket/scenario.h"

namespace slicemarket {

// Scenario files are JSON documents. Top-level keys:
//
//   alpha, epsilon, horizon, seed, lambda_G   scalars
//   subject_nsp, mqsac_matrices, vwpf_slice   optional driver settings
//   uniform_split, bid_overrides              optional, testing only
//   slices: [{label, demand, base_price, lambda_G, lambda_L, lambda_W}]
//   nsps:   [{id, capacity, slices, admission, intra, page_partition?}]
//   vsps:   [{id, slice, valuation, nsps, beta}]
//
// An NSP's `slices` entries are either a label or an object
// {label, demand?, base_price?} overriding the catalog values. A slice's
// lambda_G is the coefficient applied to the top-level lambda_G.
//
// Parsing never validates semantics; pass the result to Scenario::Validate.
// Malformed documents throw ValidationError.
ScenarioConfig ParseScenarioConfig(std::string_view text);
ScenarioConfig LoadScenarioConfig(const std::filesystem::path& path);
std::string SerializeScenarioConfig(const ScenarioConfig& config);

// The two-NSP, six-VSP, five-slice market used throughout the evaluation,
// at base arrival rate 3 and 2000 slots.
ScenarioConfig ReferenceScenarioConfig();

}  // namespace slicemarket

#endif  // SLICEMARKET_SCENARIO_IO_H_
