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

#include "slicemarket/drredpa.h"

#include <stdexcept>

#include <gtest/gtest.h>

namespace slicemarket {
namespace {

AdmissionInput HandTraceInput() {
  AdmissionInput input;
  input.capacity = {2, 2, 2};
  input.slices = {{1, {1, 1, 1}, 1.0, 0, 2, 0, 0},
                  {2, {2, 1, 1}, 3.0, 0, 1, 0, 0}};
  return input;
}

TEST(DominantResource, ReferenceDemand) {
  // Ratios 50, 57.1, 57.1.
  EXPECT_EQ(DominantResource({0.5, 0.35, 0.35}, {25, 20, 20}), 0u);
}

TEST(DominantResource, TieGoesToFirstIndex) {
  EXPECT_EQ(DominantResource({1, 1, 1}, {2, 2, 2}), 0u);
}

TEST(DominantResource, SkipsZeroDemand) {
  EXPECT_EQ(DominantResource({0, 1, 0}, {5, 1, 5}), 1u);
}

TEST(DominantResource, AllZeroDemandThrows) {
  EXPECT_THROW(DominantResource({0, 0, 0}, {1, 1, 1}), std::invalid_argument);
}

TEST(RevenueEfficiency, Examples) {
  EXPECT_DOUBLE_EQ(RevenueEfficiency(1.0, {0.5, 0.35, 0.35}, {25, 20, 20}), 2.0);
  EXPECT_DOUBLE_EQ(RevenueEfficiency(3.0, {2, 1, 1}, {2, 2, 2}), 1.5);
  EXPECT_EQ(RevenueEfficiency(0.0, {2, 1, 1}, {2, 2, 2}), 0.0);
}

TEST(AvailableResources, Examples) {
  const std::vector<ResourceVector> demands = {{2, 1, 1}};
  const std::vector<std::int64_t> zero = {0}, one = {1};
  EXPECT_EQ(AvailableResources({2, 2, 2}, zero, zero, demands),
            (ResourceVector{2, 2, 2}));
  EXPECT_EQ(AvailableResources({2, 2, 2}, zero, one, demands),
            (ResourceVector{0, 1, 1}));
  const std::vector<std::int64_t> two = {2};
  EXPECT_THROW(AvailableResources({2, 2, 2}, one, two, demands),
               std::logic_error);
}

TEST(AvailableResources, ExactExhaustion) {
  // 20 instances of (1, 1, 1.25) fill (20, 20, 25) exactly.
  const std::vector<ResourceVector> demands = {{0.5, 0.5, 0.625}, {0.5, 0.5, 0.625}};
  const std::vector<std::int64_t> active = {30, 0}, tentative = {0, 10};
  const ResourceVector left =
      AvailableResources({20, 20, 25}, active, tentative, demands);
  for (double x : left.values()) EXPECT_NEAR(x, 0.0, kResourceTolerance);
}

TEST(PriorityCondition, Examples) {
  EXPECT_TRUE(PriorityConditionHolds(std::vector<double>{0, 0, 0}));
  EXPECT_TRUE(PriorityConditionHolds(std::vector<double>{0.3, 0.5, 0.5, 0.9}));
  EXPECT_FALSE(PriorityConditionHolds(std::vector<double>{0.5, 0.4, 0.6}));
}

TEST(ViolatingSlices, HigherMemberOfEachInversion) {
  EXPECT_EQ(ViolatingSlices(std::vector<double>{0.5, 0.4, 0.6, 0.1}),
            (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(ViolatingSlices(std::vector<double>{0.1, 0.2}).empty());
}

TEST(TentativeRatios, FoldsThisSlotIntoCounters) {
  AdmissionInput input = HandTraceInput();
  input.slices[0].cum_accepted = 1;
  input.slices[0].cum_received = 2;
  const std::vector<std::int64_t> tentative = {1, 0};
  const auto r = TentativeRatios(input, tentative);
  EXPECT_DOUBLE_EQ(r[0], 2.0 / 4.0);
  EXPECT_DOUBLE_EQ(r[1], 0.0);
}

TEST(DrredpaDecide, HandTrace) {
  EXPECT_EQ(DrredpaDecide(HandTraceInput()), (SliceQuotas{0, 1}));
}

TEST(DrredpaDecide, ZeroDemands) {
  AdmissionInput input = HandTraceInput();
  for (auto& s : input.slices) s.requested = 0;
  EXPECT_EQ(DrredpaDecide(input), (SliceQuotas{0, 0}));
}

TEST(DrredpaDecide, NoContentionAdmitsEverything) {
  AdmissionInput input = HandTraceInput();
  input.capacity = {100, 100, 100};
  EXPECT_EQ(DrredpaDecide(input), (SliceQuotas{2, 1}));
}

TEST(DrredpaDecide, ViolatedHistoryFavoursViolatingSlice) {
  // History leaves the high slice behind; even though the low slice is more
  // efficient, the first grant restores the ordering.
  AdmissionInput input;
  input.capacity = {1};
  input.slices = {{1, {1}, 5.0, 0, 1, 10, 10}, {2, {1}, 1.0, 0, 1, 0, 10}};
  EXPECT_EQ(DrredpaDecide(input), (SliceQuotas{0, 1}));
}

TEST(DrredpaDecide, KeepsPriorityWhenItHolds) {
  // Granting the efficient low slice first would invert the ratios; the high
  // slice is served first, then the low one once ordering allows.
  AdmissionInput input;
  input.capacity = {3};
  input.slices = {{1, {1}, 5.0, 0, 2, 0, 0}, {2, {1}, 1.0, 0, 1, 0, 0}};
  EXPECT_EQ(DrredpaDecide(input), (SliceQuotas{2, 1}));
}

}  // namespace
}  // namespace slicemarket
