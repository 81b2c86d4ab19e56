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

#include "slicemarket/experiment.h"

#include <gtest/gtest.h>

#include "slicemarket/scenario_io.h"
#include "slicemarket/simulation.h"

namespace slicemarket {
namespace {

Scenario Small(std::int64_t horizon) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.horizon = horizon;
  config.mqsac_matrices = 4;
  return Scenario::Validate(config);
}

TEST(MakeEnvelope, Pointwise) {
  const std::vector<std::vector<double>> runs = {{1, 5}, {3, 1}, {2, 3}};
  const Envelope e = MakeEnvelope(runs);
  EXPECT_EQ(e.mean, (std::vector<double>{2, 3}));
  EXPECT_EQ(e.min, (std::vector<double>{1, 1}));
  EXPECT_EQ(e.max, (std::vector<double>{3, 5}));
  EXPECT_TRUE(MakeEnvelope({}).mean.empty());
  const std::vector<std::vector<double>> ragged = {{1}, {1, 2}};
  EXPECT_THROW(MakeEnvelope(ragged), std::invalid_argument);
}

TEST(LongTermAverage, Windows) {
  const std::vector<double> x = {1, 2, 3, 4};
  EXPECT_EQ(LongTermAverage(x), 2.5);
  EXPECT_EQ(LongTermAverage(x, 2), 3.5);
  EXPECT_EQ(LongTermAverage(x, 1, 3), 2.5);
  EXPECT_EQ(LongTermAverage(x, 4), 0.0);
}

TEST(RunExperiment, SingleRepeatCollapses) {
  const Scenario sc = Small(60);
  const ExperimentResult r = RunExperiment(sc, 1, 7);
  Simulation sim(sc, 7);
  sim.Run();
  for (std::size_t i = 0; i < sc.num_nsps(); ++i) {
    const auto& nsp = r.nsps[i];
    ASSERT_EQ(nsp.base_revenue.mean.size(), 60u);
    for (std::size_t t = 0; t < 60; ++t) {
      EXPECT_EQ(nsp.base_revenue.mean[t], sim.metrics(i).slots[t].base_revenue);
      EXPECT_EQ(nsp.base_revenue.min[t], nsp.base_revenue.max[t]);
      EXPECT_EQ(nsp.fairness.mean[t], sim.metrics(i).slots[t].fairness);
    }
  }
}

TEST(RunExperiment, MeanInsideEnvelope) {
  const ExperimentResult r = RunExperiment(Small(80), 6, 3);
  for (const auto& nsp : r.nsps) {
    ASSERT_EQ(nsp.runs.size(), 6u);
    for (const Envelope* e : {&nsp.base_revenue, &nsp.actual_revenue,
                              &nsp.fairness, &nsp.vwpf}) {
      for (std::size_t t = 0; t < e->mean.size(); ++t) {
        ASSERT_LE(e->min[t], e->mean[t]);
        ASSERT_LE(e->mean[t], e->max[t]);
      }
    }
  }
}

TEST(RunExperiment, RepeatableAndThreadCountIndependent) {
  const Scenario sc = Small(80).WithSubjectStrategy(AdmissionStrategy::kMqsac,
                                                    IntraStrategy::kOp);
  const ExperimentResult a = RunExperiment(sc, 3, 11, {.threads = 1});
  const ExperimentResult b = RunExperiment(sc, 3, 11, {.threads = 3});
  for (std::size_t i = 0; i < a.nsps.size(); ++i) {
    EXPECT_EQ(a.nsps[i].base_revenue.mean, b.nsps[i].base_revenue.mean);
    EXPECT_EQ(a.nsps[i].actual_revenue.max, b.nsps[i].actual_revenue.max);
    EXPECT_EQ(a.nsps[i].fairness.min, b.nsps[i].fairness.min);
    EXPECT_EQ(a.nsps[i].vwpf.mean, b.nsps[i].vwpf.mean);
  }
}

TEST(RunExperiment, MqsacRepeatAveragesOverMatrices) {
  const Scenario sc = Small(40).WithSubjectStrategy(AdmissionStrategy::kMqsac,
                                                    IntraStrategy::kOp);
  const ExperimentResult r = RunExperiment(sc, 1, 5);
  // Rebuild the same matrices and average by hand.
  std::vector<SliceLabel> labels;
  for (const auto& s : sc.nsp_view(1).slices) labels.push_back(s.label);
  RngStream stream(5, RngStream::StreamId(StreamRole::kMqsacMatrices, 1));
  const auto matrices = GeneratePreferenceMatrices(4, labels, stream);
  std::vector<double> sum(40, 0.0);
  for (const auto& m : matrices) {
    SimulationOptions options;
    options.mqsac_matrices[1] = m;
    Simulation sim(sc, 5, options);
    sim.Run();
    for (std::size_t t = 0; t < 40; ++t) sum[t] += sim.metrics(1).slots[t].base_revenue;
  }
  for (std::size_t t = 0; t < 40; ++t) {
    EXPECT_NEAR(r.nsps[1].base_revenue.mean[t], sum[t] / 4.0, 1e-9);
  }
}

TEST(RunExperiment, TrackedSliceOnlyWhereSupported) {
  ScenarioConfig config = ReferenceScenarioConfig();
  config.horizon = 10;
  config.vwpf_slice = 5;  // NSP 2 only
  const ExperimentResult r = RunExperiment(Scenario::Validate(config), 1, 1);
  EXPECT_FALSE(r.nsps[0].tracks_vwpf);
  EXPECT_TRUE(r.nsps[0].vwpf.mean.empty());
  EXPECT_TRUE(r.nsps[1].tracks_vwpf);
  EXPECT_EQ(r.nsps[1].vwpf.mean.size(), 10u);
}

TEST(RunExperiment, RejectsZeroRepeats) {
  EXPECT_THROW(RunExperiment(Small(5), 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace slicemarket
