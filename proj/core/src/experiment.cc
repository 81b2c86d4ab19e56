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

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "slicemarket/baselines.h"
#include "slicemarket/simulation.h"

namespace slicemarket {
namespace {

void AddInto(std::vector<double>& sum, const std::vector<double>& x) {
  if (sum.size() != x.size()) {
    throw std::invalid_argument("series length mismatch");
  }
  for (std::size_t k = 0; k < x.size(); ++k) sum[k] += x[k];
}

void Scale(std::vector<double>& v, double factor) {
  for (double& x : v) x *= factor;
}

std::vector<NspRunSeries> RunOne(const Scenario& scenario, std::uint64_t seed,
                                 SimulationOptions options) {
  Simulation sim(scenario, seed, std::move(options));
  sim.Run();
  std::vector<NspRunSeries> out;
  for (std::size_t i = 0; i < scenario.num_nsps(); ++i) {
    out.push_back(ExtractSeries(sim.metrics(i), scenario.config().vwpf_slice));
  }
  return out;
}

// All NSPs of one repeat, averaged over the matrix runs if MQSAC is present.
std::vector<NspRunSeries> RunRepeatAllNsps(
    const Scenario& scenario, std::uint64_t seed,
    const std::map<std::size_t, std::vector<PreferenceMatrix>>& matrices) {
  if (matrices.empty()) return RunOne(scenario, seed, {});
  const int count = scenario.config().mqsac_matrices;
  std::vector<std::vector<NspRunSeries>> per_matrix;
  per_matrix.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    SimulationOptions options;
    for (const auto& [nsp, list] : matrices) {
      options.mqsac_matrices[nsp] = list[static_cast<std::size_t>(m)];
    }
    per_matrix.push_back(RunOne(scenario, seed, std::move(options)));
  }
  std::vector<NspRunSeries> out;
  for (std::size_t i = 0; i < scenario.num_nsps(); ++i) {
    std::vector<NspRunSeries> runs;
    for (auto& r : per_matrix) runs.push_back(std::move(r[i]));
    out.push_back(AverageSeries(runs));
  }
  return out;
}

}  // namespace

Envelope MakeEnvelope(std::span<const std::vector<double>> runs) {
  Envelope e;
  if (runs.empty()) return e;
  e.mean = runs[0];
  e.min = runs[0];
  e.max = runs[0];
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].size() != e.mean.size()) {
      throw std::invalid_argument("series length mismatch");
    }
    for (std::size_t k = 0; k < runs[r].size(); ++k) {
      e.mean[k] += runs[r][k];
      e.min[k] = std::min(e.min[k], runs[r][k]);
      e.max[k] = std::max(e.max[k], runs[r][k]);
    }
  }
  Scale(e.mean, 1.0 / static_cast<double>(runs.size()));
  // Rounding can nudge the mean just outside a degenerate envelope.
  for (std::size_t k = 0; k < e.mean.size(); ++k) {
    e.mean[k] = std::clamp(e.mean[k], e.min[k], e.max[k]);
  }
  return e;
}

NspRunSeries ExtractSeries(const MetricSeries& metrics, SliceLabel vwpf_slice) {
  NspRunSeries s;
  const std::size_t n = metrics.slots.size();
  const std::size_t num_slices = metrics.labels.size();
  auto tracked = std::find(metrics.labels.begin(), metrics.labels.end(), vwpf_slice);
  const bool tracks = tracked != metrics.labels.end();
  const std::size_t tracked_index =
      static_cast<std::size_t>(tracked - metrics.labels.begin());
  s.slice_vwpf.assign(num_slices, std::vector<double>(n));
  s.acceptance.assign(num_slices, std::vector<double>(n));
  s.base_revenue.reserve(n);
  s.actual_revenue.reserve(n);
  s.fairness.reserve(n);
  s.decision_seconds.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const SlotMetrics& m = metrics.slots[t];
    s.base_revenue.push_back(m.base_revenue);
    s.actual_revenue.push_back(m.actual_revenue);
    s.fairness.push_back(m.fairness);
    s.decision_seconds.push_back(m.decision_seconds);
    for (std::size_t k = 0; k < num_slices; ++k) {
      s.slice_vwpf[k][t] = m.vwpf[k];
      s.acceptance[k][t] = m.acceptance[k];
    }
    if (tracks) s.vwpf.push_back(m.vwpf[tracked_index]);
  }
  return s;
}

NspRunSeries AverageSeries(std::span<const NspRunSeries> runs) {
  if (runs.empty()) return {};
  NspRunSeries avg = runs[0];
  for (std::size_t r = 1; r < runs.size(); ++r) {
    const NspRunSeries& x = runs[r];
    AddInto(avg.base_revenue, x.base_revenue);
    AddInto(avg.actual_revenue, x.actual_revenue);
    AddInto(avg.fairness, x.fairness);
    AddInto(avg.vwpf, x.vwpf);
    AddInto(avg.decision_seconds, x.decision_seconds);
    for (std::size_t k = 0; k < avg.slice_vwpf.size(); ++k) {
      AddInto(avg.slice_vwpf[k], x.slice_vwpf[k]);
      AddInto(avg.acceptance[k], x.acceptance[k]);
    }
  }
  const double f = 1.0 / static_cast<double>(runs.size());
  Scale(avg.base_revenue, f);
  Scale(avg.actual_revenue, f);
  Scale(avg.fairness, f);
  Scale(avg.vwpf, f);
  Scale(avg.decision_seconds, f);
  for (std::size_t k = 0; k < avg.slice_vwpf.size(); ++k) {
    Scale(avg.slice_vwpf[k], f);
    Scale(avg.acceptance[k], f);
  }
  return avg;
}

ExperimentResult RunExperiment(const Scenario& scenario, int repeats,
                               std::uint64_t base_seed,
                               ExperimentOptions options) {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  const ScenarioConfig& config = scenario.config();

  std::map<std::size_t, std::vector<PreferenceMatrix>> matrices;
  for (std::size_t i = 0; i < scenario.num_nsps(); ++i) {
    if (scenario.nsp(i).admission != AdmissionStrategy::kMqsac) continue;
    if (config.mqsac_matrices < 1) {
      throw std::invalid_argument("MQSAC needs at least one preference matrix");
    }
    std::vector<SliceLabel> labels;
    for (const NspSlice& s : scenario.nsp_view(i).slices) labels.push_back(s.label);
    RngStream stream(base_seed, RngStream::StreamId(StreamRole::kMqsacMatrices,
                                                    static_cast<std::uint32_t>(i)));
    matrices[i] = GeneratePreferenceMatrices(config.mqsac_matrices, labels, stream);
  }

  std::vector<std::vector<NspRunSeries>> results(static_cast<std::size_t>(repeats));
  std::vector<std::exception_ptr> errors(results.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < results.size(); r = next++) {
      try {
        results[r] = RunRepeatAllNsps(scenario, base_seed + r, matrices);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  int threads = options.threads == 0
                    ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                    : std::max(1, options.threads);
  threads = std::min(threads, repeats);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentResult out;
  out.repeats = repeats;
  out.base_seed = base_seed;
  for (std::size_t i = 0; i < scenario.num_nsps(); ++i) {
    NspExperimentResult nsp;
    nsp.id = scenario.nsp(i).id;
    for (const NspSlice& s : scenario.nsp_view(i).slices) nsp.labels.push_back(s.label);
    nsp.tracks_vwpf = std::find(nsp.labels.begin(), nsp.labels.end(),
                                config.vwpf_slice) != nsp.labels.end();
    for (auto& r : results) nsp.runs.push_back(std::move(r[i]));
    auto collect = [&nsp](std::vector<double> NspRunSeries::*field) {
      std::vector<std::vector<double>> v;
      for (const NspRunSeries& r : nsp.runs) v.push_back(r.*field);
      return MakeEnvelope(v);
    };
    nsp.base_revenue = collect(&NspRunSeries::base_revenue);
    nsp.actual_revenue = collect(&NspRunSeries::actual_revenue);
    nsp.fairness = collect(&NspRunSeries::fairness);
    nsp.vwpf = collect(&NspRunSeries::vwpf);
    nsp.decision_seconds = collect(&NspRunSeries::decision_seconds);
    out.nsps.push_back(std::move(nsp));
  }
  return out;
}

double LongTermAverage(std::span<const double> series, std::size_t first,
                       std::size_t last) {
  last = std::min(last, series.size());
  if (first >= last) return 0.0;
  double sum = 0.0;
  for (std::size_t k = first; k < last; ++k) sum += series[k];
  return sum / static_cast<double>(last - first);
}

}  // namespace slicemarket
