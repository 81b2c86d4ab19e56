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

#include "slicemarket/scenario_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace slicemarket {
namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::vector<std::string>* errors) : errors_(errors) {}

  void Fail(const std::string& message) { errors_->push_back(message); }

  void CheckKeys(const json& object, const std::set<std::string>& allowed,
                 const std::string& where) {
    for (const auto& item : object.items()) {
      if (!allowed.contains(item.key())) {
        Fail(where + ": unknown key '" + item.key() + "'");
      }
    }
  }

  template <typename T>
  bool Get(const json& object, const std::string& key, const std::string& where,
           T* out, bool required = true) {
    auto it = object.find(key);
    if (it == object.end()) {
      if (required) Fail(where + ": missing key '" + key + "'");
      return false;
    }
    try {
      *out = it->get<T>();
      return true;
    } catch (const json::exception&) {
      Fail(where + ": key '" + key + "' has the wrong type");
      return false;
    }
  }

  bool GetVector(const json& object, const std::string& key,
                 const std::string& where, ResourceVector* out) {
    std::vector<double> values;
    if (!Get(object, key, where, &values)) return false;
    *out = ResourceVector(std::move(values));
    return true;
  }

 private:
  std::vector<std::string>* errors_;
};

std::map<int, double> ParseIntKeyedMap(Reader& reader, const json& object,
                                       const std::string& where) {
  std::map<int, double> result;
  if (!object.is_object()) {
    reader.Fail(where + ": expected an object");
    return result;
  }
  for (const auto& item : object.items()) {
    try {
      std::size_t used = 0;
      const int key = std::stoi(item.key(), &used);
      if (used != item.key().size()) throw std::invalid_argument("trailing");
      result[key] = item.value().get<double>();
    } catch (const std::exception&) {
      reader.Fail(where + ": bad entry '" + item.key() + "'");
    }
  }
  return result;
}

std::vector<double> Values(const ResourceVector& v) {
  return {v.values().begin(), v.values().end()};
}

json IntKeyedMapToJson(const std::map<int, double>& values) {
  json out = json::object();
  for (const auto& [key, value] : values) out[std::to_string(key)] = value;
  return out;
}

}  // namespace

ScenarioConfig ParseScenarioConfig(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("malformed JSON: ") + e.what()});
  }
  if (!doc.is_object()) {
    throw ValidationError({"scenario document must be a JSON object"});
  }

  std::vector<std::string> errors;
  Reader reader(&errors);
  ScenarioConfig config;

  reader.CheckKeys(doc,
                   {"alpha", "epsilon", "horizon", "seed", "lambda_G",
                    "subject_nsp", "mqsac_matrices", "vwpf_slice",
                    "uniform_split", "bid_overrides", "slices", "nsps", "vsps"},
                   "scenario");
  reader.Get(doc, "alpha", "scenario", &config.alpha);
  reader.Get(doc, "epsilon", "scenario", &config.epsilon);
  reader.Get(doc, "horizon", "scenario", &config.horizon);
  reader.Get(doc, "seed", "scenario", &config.seed);
  reader.Get(doc, "lambda_G", "scenario", &config.arrival_scale);
  reader.Get(doc, "mqsac_matrices", "scenario", &config.mqsac_matrices,
             /*required=*/false);
  reader.Get(doc, "uniform_split", "scenario", &config.uniform_split,
             /*required=*/false);
  if (auto it = doc.find("bid_overrides"); it != doc.end()) {
    config.bid_overrides = ParseIntKeyedMap(reader, *it, "bid_overrides");
  }

  json slices = json::array();
  if (reader.Get(doc, "slices", "scenario", &slices) && !slices.is_array()) {
    reader.Fail("scenario: 'slices' must be an array");
    slices = json::array();
  }
  for (const json& entry : slices) {
    SliceSpec s;
    const std::string where = "slices[" + std::to_string(config.slices.size()) +
                              "]";
    if (!entry.is_object()) {
      reader.Fail(where + ": expected an object");
      continue;
    }
    reader.CheckKeys(entry,
                     {"label", "demand", "base_price", "lambda_G", "lambda_L",
                      "lambda_W"},
                     where);
    reader.Get(entry, "label", where, &s.label);
    reader.GetVector(entry, "demand", where, &s.demand);
    reader.Get(entry, "base_price", where, &s.base_price);
    reader.Get(entry, "lambda_G", where, &s.arrival_rate);
    reader.Get(entry, "lambda_L", where, &s.mean_lifetime);
    reader.Get(entry, "lambda_W", where, &s.mean_patience);
    config.slices.push_back(std::move(s));
  }

  json nsps = json::array();
  if (reader.Get(doc, "nsps", "scenario", &nsps) && !nsps.is_array()) {
    reader.Fail("scenario: 'nsps' must be an array");
    nsps = json::array();
  }
  for (const json& entry : nsps) {
    NspConfig n;
    const std::string where = "nsps[" + std::to_string(config.nsps.size()) + "]";
    if (!entry.is_object()) {
      reader.Fail(where + ": expected an object");
      continue;
    }
    reader.CheckKeys(entry,
                     {"id", "capacity", "slices", "admission", "intra",
                      "page_partition"},
                     where);
    reader.Get(entry, "id", where, &n.id);
    reader.GetVector(entry, "capacity", where, &n.capacity);
    std::string admission = "drredpa";
    std::string intra = "vwpfa";
    reader.Get(entry, "admission", where, &admission, /*required=*/false);
    reader.Get(entry, "intra", where, &intra, /*required=*/false);
    try {
      n.admission = ParseAdmissionStrategy(admission);
      n.intra = ParseIntraStrategy(intra);
    } catch (const std::invalid_argument& e) {
      reader.Fail(where + ": " + e.what());
    }
    json bindings = json::array();
    reader.Get(entry, "slices", where, &bindings);
    if (!bindings.is_array()) {
      reader.Fail(where + ": 'slices' must be an array");
      bindings = json::array();
    }
    for (const json& b : bindings) {
      NspSliceBinding binding;
      if (b.is_number_integer()) {
        binding.label = b.get<int>();
      } else if (b.is_object()) {
        const std::string bwhere = where + ".slices";
        reader.CheckKeys(b, {"label", "demand", "base_price"}, bwhere);
        reader.Get(b, "label", bwhere, &binding.label);
        if (b.contains("demand")) {
          ResourceVector demand;
          if (reader.GetVector(b, "demand", bwhere, &demand)) {
            binding.demand = std::move(demand);
          }
        }
        if (b.contains("base_price")) {
          double price = 0.0;
          if (reader.Get(b, "base_price", bwhere, &price)) {
            binding.base_price = price;
          }
        }
      } else {
        reader.Fail(where + ": slice entries must be labels or objects");
        continue;
      }
      n.slices.push_back(std::move(binding));
    }
    if (auto it = entry.find("page_partition"); it != entry.end()) {
      n.page_partition = ParseIntKeyedMap(reader, *it, where + ".page_partition");
    }
    config.nsps.push_back(std::move(n));
  }

  json vsps = json::array();
  if (reader.Get(doc, "vsps", "scenario", &vsps) && !vsps.is_array()) {
    reader.Fail("scenario: 'vsps' must be an array");
    vsps = json::array();
  }
  for (const json& entry : vsps) {
    VspConfig v;
    const std::string where = "vsps[" + std::to_string(config.vsps.size()) + "]";
    if (!entry.is_object()) {
      reader.Fail(where + ": expected an object");
      continue;
    }
    reader.CheckKeys(entry, {"id", "slice", "valuation", "nsps", "beta"}, where);
    reader.Get(entry, "id", where, &v.id);
    reader.Get(entry, "slice", where, &v.slice_label);
    reader.Get(entry, "valuation", where, &v.true_valuation);
    reader.Get(entry, "nsps", where, &v.reachable_nsps);
    reader.Get(entry, "beta", where, &v.wait_willingness);
    config.vsps.push_back(std::move(v));
  }

  // Optional driver settings default from the parsed catalog.
  if (!reader.Get(doc, "subject_nsp", "scenario", &config.subject_nsp,
                  /*required=*/false) &&
      !config.nsps.empty()) {
    config.subject_nsp = config.nsps.back().id;
  }
  if (!reader.Get(doc, "vwpf_slice", "scenario", &config.vwpf_slice,
                  /*required=*/false) &&
      !config.slices.empty()) {
    config.vwpf_slice = config.slices.front().label;
  }

  if (!errors.empty()) throw ValidationError(std::move(errors));
  return config;
}

ScenarioConfig LoadScenarioConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError({"cannot open scenario file " + path.string()});
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScenarioConfig(buffer.str());
}

std::string SerializeScenarioConfig(const ScenarioConfig& config) {
  json doc;
  doc["alpha"] = config.alpha;
  doc["epsilon"] = config.epsilon;
  doc["horizon"] = config.horizon;
  doc["seed"] = config.seed;
  doc["lambda_G"] = config.arrival_scale;
  doc["subject_nsp"] = config.subject_nsp;
  doc["mqsac_matrices"] = config.mqsac_matrices;
  doc["vwpf_slice"] = config.vwpf_slice;
  doc["uniform_split"] = config.uniform_split;
  if (!config.bid_overrides.empty()) {
    doc["bid_overrides"] = IntKeyedMapToJson(config.bid_overrides);
  }

  doc["slices"] = json::array();
  for (const SliceSpec& s : config.slices) {
    doc["slices"].push_back({{"label", s.label},
                             {"demand", Values(s.demand)},
                             {"base_price", s.base_price},
                             {"lambda_G", s.arrival_rate},
                             {"lambda_L", s.mean_lifetime},
                             {"lambda_W", s.mean_patience}});
  }

  doc["nsps"] = json::array();
  for (const NspConfig& n : config.nsps) {
    json entry = {{"id", n.id},
                  {"capacity", Values(n.capacity)},
                  {"admission", std::string(ToString(n.admission))},
                  {"intra", std::string(ToString(n.intra))}};
    entry["slices"] = json::array();
    for (const NspSliceBinding& b : n.slices) {
      if (!b.demand && !b.base_price) {
        entry["slices"].push_back(b.label);
        continue;
      }
      json binding = {{"label", b.label}};
      if (b.demand) binding["demand"] = Values(*b.demand);
      if (b.base_price) binding["base_price"] = *b.base_price;
      entry["slices"].push_back(std::move(binding));
    }
    if (!n.page_partition.empty()) {
      entry["page_partition"] = IntKeyedMapToJson(n.page_partition);
    }
    doc["nsps"].push_back(std::move(entry));
  }

  doc["vsps"] = json::array();
  for (const VspConfig& v : config.vsps) {
    doc["vsps"].push_back({{"id", v.id},
                           {"slice", v.slice_label},
                           {"valuation", v.true_valuation},
                           {"nsps", v.reachable_nsps},
                           {"beta", v.wait_willingness}});
  }
  return doc.dump(2) + "\n";
}

ScenarioConfig ReferenceScenarioConfig() {
  ScenarioConfig config;
  config.alpha = 0.5;
  config.epsilon = 1.0;
  config.horizon = 2000;
  config.seed = 7;
  config.arrival_scale = 3.0;
  config.subject_nsp = 2;
  config.mqsac_matrices = 100;
  config.vwpf_slice = 3;

  config.slices = {
      {1, {0.5, 0.35, 0.35}, 1.0, 2.0, 4.0, 4.0},
      {2, {0.7, 0.5, 0.45}, 1.4, 1.5, 3.0, 4.0},
      {3, {0.7, 0.65, 0.6}, 1.6, 2.5, 4.0, 5.0},
      {4, {0.8, 0.8, 0.8}, 2.0, 1.0, 4.0, 3.0},
      {5, {0.7, 0.7, 0.9}, 2.3, 1.5, 3.0, 4.0},
  };

  NspConfig nsp1;
  nsp1.id = 1;
  nsp1.capacity = {25, 20, 20};
  nsp1.slices = {{1, {}, {}}, {2, {}, {}}, {3, {}, {}}, {4, {}, {}}};
  NspConfig nsp2;
  nsp2.id = 2;
  nsp2.capacity = {20, 20, 25};
  nsp2.slices = {{2, {}, {}}, {3, {}, {}}, {4, {}, {}}, {5, {}, {}}};
  config.nsps = {nsp1, nsp2};

  const double beta = 0.1;
  config.vsps = {
      {1, 1, 2.5, {1}, beta},    {2, 2, 3.5, {1, 2}, beta},
      {3, 3, 4.5, {1, 2}, beta}, {4, 3, 6.0, {1, 2}, beta},
      {5, 4, 5.0, {1, 2}, beta}, {6, 5, 5.5, {2}, beta},
  };
  return config;
}

}  // namespace slicemarket
