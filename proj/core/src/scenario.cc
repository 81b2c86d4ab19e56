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
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace slicemarket {
namespace {

std::string JoinViolations(const std::vector<std::string>& violations) {
  std::ostringstream out;
  out << "invalid scenario (" << violations.size() << " violation"
      << (violations.size() == 1 ? "" : "s") << ")";
  for (const auto& v : violations) out << "\n  - " << v;
  return out.str();
}

bool IsFiniteVector(const ResourceVector& v) {
  for (double x : v.values()) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

std::string_view ToString(AdmissionStrategy strategy) {
  switch (strategy) {
    case AdmissionStrategy::kDrredpa:
      return "drredpa";
    case AdmissionStrategy::kPage:
      return "page";
    case AdmissionStrategy::kMqsac:
      return "mqsac";
  }
  return "unknown";
}

std::string_view ToString(IntraStrategy strategy) {
  switch (strategy) {
    case IntraStrategy::kVwpfa:
      return "vwpfa";
    case IntraStrategy::kOp:
      return "op";
  }
  return "unknown";
}

AdmissionStrategy ParseAdmissionStrategy(std::string_view name) {
  if (name == "drredpa") return AdmissionStrategy::kDrredpa;
  if (name == "page") return AdmissionStrategy::kPage;
  if (name == "mqsac") return AdmissionStrategy::kMqsac;
  throw std::invalid_argument("unknown admission strategy '" +
                              std::string(name) + "'");
}

IntraStrategy ParseIntraStrategy(std::string_view name) {
  if (name == "vwpfa") return IntraStrategy::kVwpfa;
  if (name == "op") return IntraStrategy::kOp;
  throw std::invalid_argument("unknown intra-slice strategy '" +
                              std::string(name) + "'");
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(JoinViolations(violations)),
      violations_(std::move(violations)) {}

std::optional<std::size_t> NspView::SliceIndex(SliceLabel label) const {
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (slices[i].label == label) return i;
  }
  return std::nullopt;
}

Scenario Scenario::Validate(ScenarioConfig config) {
  std::vector<std::string> errors;
  auto fail = [&errors](std::string message) {
    errors.push_back(std::move(message));
  };

  if (config.nsps.empty()) fail("scenario has no NSPs");
  if (config.slices.empty()) fail("scenario has no slice types");

  // K is taken from the first capacity vector; everything else must agree.
  const std::size_t dims =
      config.nsps.empty() ? 0 : config.nsps.front().capacity.size();
  if (!config.nsps.empty() && dims == 0) {
    fail("NSP " + std::to_string(config.nsps.front().id) +
         ": capacity vector is empty");
  }

  std::map<SliceLabel, std::size_t> catalog;
  for (std::size_t c = 0; c < config.slices.size(); ++c) {
    const SliceSpec& s = config.slices[c];
    const std::string where = "slice " + std::to_string(s.label);
    if (!catalog.emplace(s.label, c).second) {
      fail(where + ": duplicate slice label");
    }
    if (s.demand.size() != dims) {
      fail(where + ": dimension mismatch (demand has " +
           std::to_string(s.demand.size()) + " entries, capacity has " +
           std::to_string(dims) + ")");
    }
    if (!IsFiniteVector(s.demand) || !s.demand.AllNonNegative()) {
      fail(where + ": demand entries must be finite and nonnegative");
    }
    if (!s.demand.HasPositiveEntry()) {
      fail(where + ": demand needs at least one positive entry");
    }
    if (!(s.base_price > 0.0)) fail(where + ": nonpositive base_price");
    if (!(s.arrival_rate >= 0.0)) fail(where + ": negative arrival rate");
    if (!(s.mean_lifetime > 0.0)) fail(where + ": nonpositive mean lifetime");
    if (!(s.mean_patience > 0.0)) fail(where + ": nonpositive mean patience");
  }

  std::map<NspId, std::size_t> nsp_index;
  for (std::size_t i = 0; i < config.nsps.size(); ++i) {
    NspConfig& n = config.nsps[i];
    const std::string where = "NSP " + std::to_string(n.id);
    if (!nsp_index.emplace(n.id, i).second) fail(where + ": duplicate NSP id");
    if (n.capacity.size() != dims) {
      fail(where + ": dimension mismatch (capacity has " +
           std::to_string(n.capacity.size()) + " entries, expected " +
           std::to_string(dims) + ")");
    }
    if (!IsFiniteVector(n.capacity) || !n.capacity.AllNonNegative()) {
      fail(where + ": capacity entries must be finite and nonnegative");
    }
    if (n.slices.empty()) fail(where + ": supports no slices");
    std::sort(n.slices.begin(), n.slices.end(),
              [](const NspSliceBinding& a, const NspSliceBinding& b) {
                return a.label < b.label;
              });
    for (std::size_t b = 0; b < n.slices.size(); ++b) {
      const NspSliceBinding& binding = n.slices[b];
      const std::string swhere =
          where + ", slice " + std::to_string(binding.label);
      if (b > 0 && n.slices[b - 1].label == binding.label) {
        fail(swhere + ": listed twice");
      }
      if (!catalog.contains(binding.label)) {
        fail(swhere + ": unknown slice label");
      }
      if (binding.demand) {
        if (binding.demand->size() != dims) {
          fail(swhere + ": dimension mismatch in demand override");
        } else if (!binding.demand->AllNonNegative() ||
                   !binding.demand->HasPositiveEntry()) {
          fail(swhere + ": demand override needs nonnegative entries and one "
                        "positive entry");
        }
      }
      if (binding.base_price && !(*binding.base_price > 0.0)) {
        fail(swhere + ": nonpositive base_price override");
      }
    }
    if (!n.page_partition.empty()) {
      double total = 0.0;
      for (const auto& [label, fraction] : n.page_partition) {
        const bool supported =
            std::any_of(n.slices.begin(), n.slices.end(),
                        [label](const auto& b) { return b.label == label; });
        if (!supported) {
          fail(where + ": page_partition names unsupported slice " +
               std::to_string(label));
        }
        if (!(fraction >= 0.0)) fail(where + ": negative page_partition");
        total += fraction;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        fail(where + ": page_partition fractions sum to " +
             std::to_string(total) + ", expected 1");
      }
    }
  }

  std::set<VspId> vsp_ids;
  for (const VspConfig& v : config.vsps) {
    const std::string where = "VSP " + std::to_string(v.id);
    if (!vsp_ids.insert(v.id).second) fail(where + ": duplicate VSP id");
    if (!catalog.contains(v.slice_label)) {
      fail(where + ": unknown slice label " + std::to_string(v.slice_label));
    }
    if (!(v.true_valuation > 0.0)) fail(where + ": nonpositive valuation");
    if (!(v.wait_willingness >= 0.0 && v.wait_willingness <= 1.0)) {
      fail(where + ": beta outside [0, 1]");
    }
    if (v.reachable_nsps.empty()) fail(where + ": no reachable NSP");
    std::set<NspId> seen;
    for (NspId id : v.reachable_nsps) {
      if (!seen.insert(id).second) {
        fail(where + ": NSP " + std::to_string(id) + " listed twice");
      }
      auto it = nsp_index.find(id);
      if (it == nsp_index.end()) {
        fail(where + ": unknown NSP " + std::to_string(id));
        continue;
      }
      const auto& bindings = config.nsps[it->second].slices;
      const bool supported = std::any_of(
          bindings.begin(), bindings.end(),
          [&v](const auto& b) { return b.label == v.slice_label; });
      if (!supported) {
        fail(where + ": unsupported slice " + std::to_string(v.slice_label) +
             " at NSP " + std::to_string(id));
      }
    }
  }

  if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) {
    fail("alpha outside [0, 1]");
  }
  if (!(config.epsilon > 0.0)) fail("epsilon must be positive");
  if (config.horizon < 0) fail("horizon must be nonnegative");
  if (!(config.arrival_scale >= 0.0) || !std::isfinite(config.arrival_scale)) {
    fail("arrival scale must be finite and nonnegative");
  }
  if (config.mqsac_matrices < 1) fail("mqsac_matrices must be at least 1");
  if (!config.nsps.empty() && !nsp_index.contains(config.subject_nsp)) {
    fail("subject_nsp " + std::to_string(config.subject_nsp) +
         " is not a configured NSP");
  }
  if (!catalog.contains(config.vwpf_slice)) {
    fail("vwpf_slice " + std::to_string(config.vwpf_slice) +
         " is not a catalog slice");
  }
  for (const auto& [id, bid] : config.bid_overrides) {
    if (!vsp_ids.contains(id)) {
      fail("bid override for unknown VSP " + std::to_string(id));
    }
    if (!(bid >= 0.0)) fail("bid override must be nonnegative");
  }

  if (!errors.empty()) throw ValidationError(std::move(errors));

  Scenario scenario;
  scenario.dims_ = dims;

  // Tenant sets, ascending by VSP id regardless of file order.
  std::vector<std::size_t> by_id(config.vsps.size());
  std::iota(by_id.begin(), by_id.end(), std::size_t{0});
  std::sort(by_id.begin(), by_id.end(), [&config](std::size_t a,
                                                  std::size_t b) {
    return config.vsps[a].id < config.vsps[b].id;
  });
  for (const SliceSpec& s : config.slices) scenario.tenants_[s.label];
  for (std::size_t j : by_id) {
    scenario.tenants_[config.vsps[j].slice_label].push_back(j);
  }

  scenario.reachable_.resize(config.vsps.size());
  for (std::size_t j = 0; j < config.vsps.size(); ++j) {
    for (NspId id : config.vsps[j].reachable_nsps) {
      scenario.reachable_[j].push_back(nsp_index.at(id));
    }
  }

  scenario.nsp_views_.resize(config.nsps.size());
  for (std::size_t i = 0; i < config.nsps.size(); ++i) {
    NspView& view = scenario.nsp_views_[i];
    view.config_index = i;
    for (const NspSliceBinding& b : config.nsps[i].slices) {
      NspSlice slice;
      slice.label = b.label;
      slice.catalog_index = catalog.at(b.label);
      const SliceSpec& spec = config.slices[slice.catalog_index];
      slice.demand = b.demand.value_or(spec.demand);
      slice.base_price = b.base_price.value_or(spec.base_price);
      for (std::size_t j : scenario.tenants_.at(b.label)) {
        const auto& r = scenario.reachable_[j];
        if (std::find(r.begin(), r.end(), i) != r.end()) {
          slice.tenants.push_back(j);
        }
      }
      view.slices.push_back(std::move(slice));
    }
  }

  scenario.config_ = std::move(config);
  return scenario;
}

std::size_t Scenario::NspIndex(NspId id) const {
  for (std::size_t i = 0; i < config_.nsps.size(); ++i) {
    if (config_.nsps[i].id == id) return i;
  }
  throw std::out_of_range("unknown NSP " + std::to_string(id));
}

std::size_t Scenario::VspIndex(VspId id) const {
  for (std::size_t j = 0; j < config_.vsps.size(); ++j) {
    if (config_.vsps[j].id == id) return j;
  }
  throw std::out_of_range("unknown VSP " + std::to_string(id));
}

std::size_t Scenario::CatalogIndex(SliceLabel label) const {
  for (std::size_t c = 0; c < config_.slices.size(); ++c) {
    if (config_.slices[c].label == label) return c;
  }
  throw std::out_of_range("unknown slice " + std::to_string(label));
}

const std::vector<std::size_t>& Scenario::Tenants(SliceLabel label) const {
  return tenants_.at(label);
}

Scenario Scenario::WithSubjectStrategy(AdmissionStrategy admission,
                                       IntraStrategy intra) const {
  ScenarioConfig copy = config_;
  NspConfig& subject = copy.nsps[NspIndex(config_.subject_nsp)];
  subject.admission = admission;
  subject.intra = intra;
  return Validate(std::move(copy));
}

Scenario Scenario::WithArrivalScale(double scale) const {
  ScenarioConfig copy = config_;
  copy.arrival_scale = scale;
  return Validate(std::move(copy));
}

Scenario Scenario::WithHorizon(std::int64_t horizon) const {
  ScenarioConfig copy = config_;
  copy.horizon = horizon;
  return Validate(std::move(copy));
}

}  // namespace slicemarket
