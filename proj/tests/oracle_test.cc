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

#include <cmath>
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

TEST(ExactP3, HandTraceOptimum) {
  // Candidates (L, H) in {0,1,2} x {0,1}; feasible: (0,0) (1,0) (2,0) (0,1).
  // Objectives 0, 1, 2, 3.
  const P3Solution best = ExactP3(HandTraceInput());
  EXPECT_EQ(best.quotas, (SliceQuotas{0, 1}));
  EXPECT_DOUBLE_EQ(best.objective, 3.0);
}

TEST(ExactP3, ZeroDemands) {
  AdmissionInput input = HandTraceInput();
  for (auto& s : input.slices) s.requested = 0;
  const P3Solution best = ExactP3(input);
  EXPECT_EQ(best.quotas, (SliceQuotas{0, 0}));
  EXPECT_EQ(best.objective, 0.0);
}

TEST(ExactP3, ZeroCapacity) {
  AdmissionInput input = HandTraceInput();
  input.capacity = {0, 0, 0};
  const P3Solution best = ExactP3(input);
  EXPECT_EQ(best.quotas, (SliceQuotas{0, 0}));
  EXPECT_EQ(best.objective, 0.0);
}

TEST(ExactP3, ActiveInstancesShrinkTheRoom) {
  AdmissionInput input = HandTraceInput();
  input.slices[0].active = 1;  // leaves (1,1,1)
  const P3Solution best = ExactP3(input);
  EXPECT_EQ(best.quotas, (SliceQuotas{1, 0}));
  EXPECT_DOUBLE_EQ(best.objective, 1.0);
}

TEST(ExactP3, TieGoesToHigherPriority) {
  AdmissionInput input;
  input.capacity = {1};
  input.slices = {{1, {1}, 2.0, 0, 1, 0, 0}, {2, {1}, 2.0, 0, 1, 0, 0}};
  EXPECT_EQ(ExactP3(input).quotas, (SliceQuotas{0, 1}));
}

TEST(ExactP3, RefusesHugeInstances) {
  AdmissionInput input;
  input.capacity = {1};
  for (int s = 0; s < 4; ++s) {
    input.slices.push_back({s + 1, {1}, 1.0, 0, 100, 0, 0});
  }
  EXPECT_THROW(ExactP3(input), std::length_error);
}

TEST(ExactP4, TwoBidderExample) {
  const std::vector<Bid> bids = {{3, 4.5, 3}, {4, 6.0, 3}};
  const P4Solution best = ExactP4(3, bids, 1.6, 1.0);
  EXPECT_EQ(best.quotas, (std::vector<std::int64_t>{1, 2}));
  // The four splits of 3: (0,3) (1,2) (2,1) (3,0).
  auto objective = [](int a, int b) {
    return 4.5 * std::log(a + 1.0) + 6.0 * std::log(b + 1.0);
  };
  double best_value = -1.0;
  for (int a = 0; a <= 3; ++a) best_value = std::max(best_value, objective(a, 3 - a));
  EXPECT_NEAR(best.objective, best_value, 1e-12);
  EXPECT_NEAR(best.objective, objective(1, 2), 1e-12);
}

TEST(ExactP4, NothingOffered) {
  const std::vector<Bid> bids = {{3, 4.5, 3}, {4, 6.0, 3}};
  const double eps = 0.5;
  const P4Solution best = ExactP4(0, bids, 1.6, eps);
  EXPECT_EQ(best.quotas, (std::vector<std::int64_t>{0, 0}));
  EXPECT_NEAR(best.objective, 4.5 * std::log(eps) + 6.0 * std::log(eps), 1e-12);
}

TEST(ExactP4, SingleBidder) {
  const std::vector<Bid> bids = {{7, 3.0, 4}};
  EXPECT_EQ(ExactP4(6, bids, 1.0, 1.0).quotas, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(ExactP4(2, bids, 1.0, 1.0).quotas, (std::vector<std::int64_t>{2}));
}

TEST(ExactP4, BidsUnderReserveGetNothing) {
  const std::vector<Bid> bids = {{1, 0.5, 3}, {2, 2.0, 1}};
  EXPECT_EQ(ExactP4(3, bids, 1.0, 1.0).quotas, (std::vector<std::int64_t>{0, 1}));
}

TEST(ExactP4, RefusesHugeInstances) {
  std::vector<Bid> bids;
  for (int v = 0; v < 4; ++v) bids.push_back({v, 1.0, 100});
  EXPECT_THROW(ExactP4(10, bids, 0.5, 1.0), std::length_error);
}

}  // namespace
}  // namespace slicemarket
