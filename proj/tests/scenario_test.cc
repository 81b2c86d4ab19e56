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

#include "slicemarket/scenario.h"

#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "slicemarket/scenario_io.h"

namespace slicemarket {
namespace {

bool AnyContains(const std::vector<std::string>& messages,
                 const std::string& needle) {
  return std::any_of(messages.begin(), messages.end(), [&](const auto& m) {
    return m.find(needle) != std::string::npos;
  });
}

std::vector<std::string> ViolationsOf(const ScenarioConfig& config) {
  try {
    Scenario::Validate(config);
  } catch (const ValidationError& e) {
    return e.violations();
  }
  return {};
}

TEST(Scenario, ReferenceMarketIsValid) {
  const Scenario s = Scenario::Validate(ReferenceScenarioConfig());
  EXPECT_EQ(s.num_nsps(), 2u);
  EXPECT_EQ(s.num_vsps(), 6u);
  EXPECT_EQ(s.config().slices.size(), 5u);
  EXPECT_EQ(s.dims(), 3u);
  std::vector<VspId> tenants;
  for (std::size_t j : s.Tenants(3)) tenants.push_back(s.vsp(j).id);
  EXPECT_EQ(tenants, (std::vector<VspId>{3, 4}));
}

TEST(Scenario, NspViewsListReachingTenantsOnly) {
  const Scenario s = Scenario::Validate(ReferenceScenarioConfig());
  const NspView& nsp1 = s.nsp_view(s.NspIndex(1));
  ASSERT_EQ(nsp1.slices.size(), 4u);
  EXPECT_EQ(nsp1.slices.front().label, 1);
  const NspView& nsp2 = s.nsp_view(s.NspIndex(2));
  // VSP 6 sells slice 5 and only reaches NSP 2.
  const NspSlice& s5 = nsp2.slices[*nsp2.SliceIndex(5)];
  ASSERT_EQ(s5.tenants.size(), 1u);
  EXPECT_EQ(s.vsp(s5.tenants[0]).id, 6);
  EXPECT_FALSE(nsp2.SliceIndex(1).has_value());
}

TEST(Scenario, TenantSetsPartitionVsps) {
  const Scenario s = Scenario::Validate(ReferenceScenarioConfig());
  std::vector<int> seen(s.num_vsps(), 0);
  for (const SliceSpec& spec : s.config().slices) {
    for (std::size_t j : s.Tenants(spec.label)) {
      ++seen[j];
      EXPECT_EQ(s.vsp(j).slice_label, spec.label);
    }
  }
  for (int count : seen) EXPECT_EQ(count, 1);
}

TEST(Scenario, RejectsUnsupportedSlice) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.vsps[0].reachable_nsps = {2};  // NSP 2 has no slice 1
  EXPECT_TRUE(AnyContains(ViolationsOf(config), "unsupported slice"));
}

TEST(Scenario, RejectsDimensionMismatch) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.slices[1].demand = {0.7, 0.5};
  EXPECT_TRUE(AnyContains(ViolationsOf(config), "dimension mismatch"));
}

TEST(Scenario, ReportsEveryViolation) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.slices[0].base_price = 0.0;
  config.vsps[2].reachable_nsps = {9};
  config.alpha = 2.0;
  const auto v = ViolationsOf(config);
  EXPECT_TRUE(AnyContains(v, "nonpositive base_price"));
  EXPECT_TRUE(AnyContains(v, "unknown NSP 9"));
  EXPECT_TRUE(AnyContains(v, "alpha"));
}

TEST(Scenario, SortsNspSlicesByLabel) {
  ScenarioConfig config = ReferenceScenarioConfig();
  std::reverse(config.nsps[0].slices.begin(), config.nsps[0].slices.end());
  const Scenario s = Scenario::Validate(config);
  const auto& slices = s.nsp_view(0).slices;
  EXPECT_TRUE(std::is_sorted(slices.begin(), slices.end(),
                             [](const auto& a, const auto& b) {
                               return a.label < b.label;
                             }));
}

TEST(Scenario, BindingOverridesReplaceCatalogValues) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.nsps[0].slices[0].base_price = 9.0;
  const Scenario s = Scenario::Validate(config);
  EXPECT_EQ(s.nsp_view(0).slices[0].base_price, 9.0);
  EXPECT_EQ(s.nsp_view(1).slices[0].base_price, 1.4);
}

TEST(Scenario, DerivedCopies) {
  const Scenario s = Scenario::Validate(ReferenceScenarioConfig());
  const Scenario page =
      s.WithSubjectStrategy(AdmissionStrategy::kPage, IntraStrategy::kOp);
  EXPECT_EQ(page.nsp(page.NspIndex(2)).admission, AdmissionStrategy::kPage);
  EXPECT_EQ(page.nsp(page.NspIndex(1)).admission, AdmissionStrategy::kDrredpa);
  EXPECT_DOUBLE_EQ(s.WithArrivalScale(2.0).ArrivalRate(1), 4.0);
  EXPECT_EQ(s.WithHorizon(5).config().horizon, 5);
  EXPECT_THROW(s.WithArrivalScale(-1.0), ValidationError);
}

TEST(ScenarioIo, RoundTrip) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.nsps[1].page_partition = {{2, 0.25}, {3, 0.25}, {4, 0.25}, {5, 0.25}};
  config.nsps[0].slices[2].demand = ResourceVector{0.1, 0.2, 0.3};
  config.bid_overrides[4] = 1.25;
  config.uniform_split = true;
  const std::string text = SerializeScenarioConfig(config);
  const ScenarioConfig parsed = ParseScenarioConfig(text);
  EXPECT_EQ(parsed, config);
  EXPECT_EQ(SerializeScenarioConfig(parsed), text);
}

TEST(ScenarioIo, RejectsUnknownKeys) {
  std::string text = SerializeScenarioConfig(ReferenceScenarioConfig());
  text.insert(text.find('{') + 1, "\"gamma\": 1,");
  EXPECT_THROW(ParseScenarioConfig(text), ValidationError);
}

TEST(ScenarioIo, MalformedJson) {
  EXPECT_THROW(ParseScenarioConfig("{ not json"), ValidationError);
}

TEST(ScenarioIo, StrategyNames) {
  for (auto a : {AdmissionStrategy::kDrredpa, AdmissionStrategy::kPage,
                 AdmissionStrategy::kMqsac}) {
    EXPECT_EQ(ParseAdmissionStrategy(ToString(a)), a);
  }
  for (auto i : {IntraStrategy::kVwpfa, IntraStrategy::kOp}) {
    EXPECT_EQ(ParseIntraStrategy(ToString(i)), i);
  }
  EXPECT_ANY_THROW(ParseAdmissionStrategy("dsara"));
}

}  // namespace
}  // namespace slicemarket
