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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "slicemarket/experiment.h"
#include "slicemarket/oracle.h"
#include "slicemarket/scenario_io.h"
#include "slicemarket/simulation.h"

namespace slicemarket::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for problems the user can fix: flags, files, output paths.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string FormatNumber(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw UsageError("write failed: " + path.string());
}

std::string EnvelopeCsv(const Envelope& e) {
  std::string s = "slot,mean,min,max\n";
  for (std::size_t t = 0; t < e.mean.size(); ++t) {
    s += std::to_string(t + 1) + "," + FormatNumber(e.mean[t]) + "," +
         FormatNumber(e.min[t]) + "," + FormatNumber(e.max[t]) + "\n";
  }
  return s;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double ParseDouble(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  return v;
}

std::string Trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

json OutcomeJson(std::span<const Bid> bids, const std::vector<std::int64_t>& quotas,
                 const std::vector<std::vector<double>>* prices) {
  json q = json::object();
  json p = json::object();
  for (std::size_t v = 0; v < bids.size(); ++v) {
    const std::string key = std::to_string(bids[v].vsp_id);
    q[key] = quotas[v];
    if (prices != nullptr) p[key] = (*prices)[v];
  }
  json out = {{"quotas", q}};
  if (prices != nullptr) out["prices"] = p;
  return out;
}

struct RunFlags {
  std::string config;
  std::int64_t slots = -1;
  int repeats = 1;
  std::int64_t seed = -1;
  std::string strategies = "mpsac";
  std::string lambda_scales;
  std::string out;
  int threads = 0;
};

int CmdRun(const RunFlags& flags, std::ostream& out) {
  ScenarioConfig config;
  try {
    config = LoadScenarioConfig(flags.config);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (flags.slots >= 0) config.horizon = flags.slots;
  if (flags.seed >= 0) config.seed = static_cast<std::uint64_t>(flags.seed);
  if (flags.repeats < 1) throw UsageError("--repeats must be at least 1");
  const Scenario base = Scenario::Validate(std::move(config));

  std::vector<StrategyPreset> presets;
  for (const std::string& name : SplitList(flags.strategies)) {
    try {
      presets.push_back(ParseStrategyPreset(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (presets.empty()) throw UsageError("--strategy is empty");
  std::vector<double> scales;
  if (flags.lambda_scales.empty()) {
    scales.push_back(base.config().arrival_scale);
  } else {
    for (const std::string& item : SplitList(flags.lambda_scales)) {
      try {
        scales.push_back(ParseDouble(item, "--lambda-scale"));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }

  const fs::path root(flags.out);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw UsageError("cannot create " + root.string() + ": " + ec.message());

  json summary = {{"runs", json::array()}};
  for (const StrategyPreset& preset : presets) {
    for (double scale : scales) {
      const Scenario scenario =
          base.WithSubjectStrategy(preset.admission, preset.intra)
              .WithArrivalScale(scale);
      const ExperimentResult result =
          RunExperiment(scenario, flags.repeats, scenario.config().seed,
                        {.threads = flags.threads});

      const std::string dir_name = preset.name + "_lambda" + FormatNumber(scale);
      json entry = {{"strategy", preset.name},
                    {"lambda_scale", scale},
                    {"slots", scenario.config().horizon},
                    {"repeats", flags.repeats},
                    {"seed", scenario.config().seed},
                    {"subject_nsp", scenario.config().subject_nsp},
                    {"dir", dir_name},
                    {"nsps", json::array()}};
      for (const NspExperimentResult& nsp : result.nsps) {
        const fs::path dir = root / dir_name / ("nsp" + std::to_string(nsp.id));
        fs::create_directories(dir, ec);
        if (ec) throw UsageError("cannot create " + dir.string() + ": " + ec.message());
        WriteFile(dir / "base_revenue.csv", EnvelopeCsv(nsp.base_revenue));
        WriteFile(dir / "actual_revenue.csv", EnvelopeCsv(nsp.actual_revenue));
        WriteFile(dir / "fairness.csv", EnvelopeCsv(nsp.fairness));
        WriteFile(dir / "timing.csv", EnvelopeCsv(nsp.decision_seconds));
        if (nsp.tracks_vwpf) WriteFile(dir / "vwpf.csv", EnvelopeCsv(nsp.vwpf));

        json long_term = {
            {"base_revenue", LongTermAverage(nsp.base_revenue.mean)},
            {"actual_revenue", LongTermAverage(nsp.actual_revenue.mean)},
            {"fairness", LongTermAverage(nsp.fairness.mean)}};
        if (nsp.tracks_vwpf) long_term["vwpf"] = LongTermAverage(nsp.vwpf.mean);

        // Per-decision wall clock: mean of the per-repeat averages, with the
        // spread across repeats.
        std::vector<double> per_repeat;
        for (const NspRunSeries& r : nsp.runs) {
          per_repeat.push_back(LongTermAverage(r.decision_seconds));
        }
        const double t_mean = LongTermAverage(per_repeat);
        const double t_min =
            per_repeat.empty() ? 0.0 : *std::min_element(per_repeat.begin(), per_repeat.end());
        const double t_max =
            per_repeat.empty() ? 0.0 : *std::max_element(per_repeat.begin(), per_repeat.end());
        entry["nsps"].push_back(json{
             {"id", nsp.id},
             {"admission", ToString(scenario.nsp(scenario.NspIndex(nsp.id)).admission)},
             {"intra", ToString(scenario.nsp(scenario.NspIndex(nsp.id)).intra)},
             {"long_term", long_term},
             {"timing", {{"mean_seconds", t_mean},
                         {"min_seconds", t_min},
                         {"max_seconds", t_max}}}});
      }
      out << dir_name << ": done\n";
      summary["runs"].push_back(std::move(entry));
    }
  }
  WriteFile(root / "summary.json", summary.dump(2) + "\n");
  return kExitOk;
}

struct AuctionFlags {
  std::string bids;
  std::int64_t offered = 0;
  double reserve = 0.0;
  double epsilon = 1.0;
};

std::vector<Bid> LoadBids(const std::string& path) {
  try {
    return ParseBidFile(ReadFile(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void CheckAuctionFlags(const AuctionFlags& flags) {
  if (flags.offered < 0) throw UsageError("--offered must be non-negative");
  if (!(flags.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  if (flags.reserve < 0.0) throw UsageError("--reserve must be non-negative");
}

int CmdAuction(const AuctionFlags& flags, std::ostream& out) {
  CheckAuctionFlags(flags);
  const std::vector<Bid> bids = LoadBids(flags.bids);
  const AuctionOutcome outcome =
      RunSliceAuction(flags.offered, bids, flags.reserve, flags.epsilon);
  json j = OutcomeJson(bids, outcome.quotas, &outcome.prices);
  j["revenue"] = outcome.revenue();
  out << j.dump(2) << "\n";
  return kExitOk;
}

int CmdOracleP4(const AuctionFlags& flags, std::ostream& out) {
  CheckAuctionFlags(flags);
  const std::vector<Bid> bids = LoadBids(flags.bids);
  const P4Solution exact = ExactP4(flags.offered, bids, flags.reserve, flags.epsilon);
  const std::vector<std::int64_t> lif =
      LifAllocate(flags.offered, bids, flags.reserve, flags.epsilon);
  json j = OutcomeJson(bids, exact.quotas, nullptr);
  j["objective"] = exact.objective;
  j["lif_quotas"] = OutcomeJson(bids, lif, nullptr)["quotas"];
  j["lif_objective"] = VwpfObjective(lif, bids, flags.epsilon);
  out << j.dump(2) << "\n";
  return kExitOk;
}

// Input: {"capacity": [...], "slices": [{"label", "demand", "base_price",
// "active", "requested", "cum_accepted", "cum_received"}]}.
int CmdOracleP3(const std::string& path, std::ostream& out) {
  AdmissionInput input;
  try {
    const json j = json::parse(ReadFile(path));
    input.capacity = ResourceVector(j.at("capacity").get<std::vector<double>>());
    for (const json& s : j.at("slices")) {
      input.slices.push_back(
          {s.at("label").get<SliceLabel>(),
           ResourceVector(s.at("demand").get<std::vector<double>>()),
           s.at("base_price").get<double>(), s.value("active", std::int64_t{0}),
           s.at("requested").get<std::int64_t>(),
           s.value("cum_accepted", std::int64_t{0}),
           s.value("cum_received", std::int64_t{0})});
    }
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  const P3Solution exact = ExactP3(input);
  const SliceQuotas greedy = DrredpaDecide(input);
  double greedy_objective = 0.0;
  for (std::size_t s = 0; s < greedy.size(); ++s) {
    greedy_objective += input.slices[s].base_price * static_cast<double>(greedy[s]);
  }
  json j = {{"quotas", exact.quotas},
            {"objective", exact.objective},
            {"drredpa_quotas", greedy},
            {"drredpa_objective", greedy_objective}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

StrategyPreset ParseStrategyPreset(const std::string& name) {
  if (name == "mpsac") return {name, AdmissionStrategy::kDrredpa, IntraStrategy::kVwpfa};
  if (name == "drredpa-op") return {name, AdmissionStrategy::kDrredpa, IntraStrategy::kOp};
  if (name == "page") return {name, AdmissionStrategy::kPage, IntraStrategy::kOp};
  if (name == "mqsac") return {name, AdmissionStrategy::kMqsac, IntraStrategy::kOp};
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected mpsac, drredpa-op, page or mqsac)");
}

std::vector<Bid> ParseBidFile(const std::string& text) {
  std::vector<Bid> bids;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(ss, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      std::string compact;
      for (char c : line) {
        if (c != ' ' && c != '\t') compact += c;
      }
      if (compact != "vsp_id,bid,demand") {
        throw std::invalid_argument("expected header 'vsp_id,bid,demand'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(Trim(field));
    if (fields.size() != 3) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 3 fields");
    }
    const std::string where = "line " + std::to_string(line_no);
    const double id = ParseDouble(fields[0], where + " vsp_id");
    const double amount = ParseDouble(fields[1], where + " bid");
    const double demand = ParseDouble(fields[2], where + " demand");
    if (id != static_cast<double>(static_cast<VspId>(id)) ||
        demand != static_cast<double>(static_cast<std::int64_t>(demand)) ||
        demand < 0 || amount < 0) {
      throw std::invalid_argument(where + ": ids and demands are non-negative "
                                  "integers, bids non-negative");
    }
    for (const Bid& b : bids) {
      if (b.vsp_id == static_cast<VspId>(id)) {
        throw std::invalid_argument(where + ": duplicate vsp_id");
      }
    }
    bids.push_back({static_cast<VspId>(id), amount, static_cast<std::int64_t>(demand)});
  }
  return bids;
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Seeded simulator of a multi-provider network slicing market"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run experiments and export metrics");
  run->add_option("--config", run_flags.config, "Scenario JSON")->required();
  run->add_option("--slots", run_flags.slots, "Horizon override");
  run->add_option("--repeats", run_flags.repeats, "Independent repeats");
  run->add_option("--seed", run_flags.seed, "Base seed override");
  run->add_option("--strategy", run_flags.strategies,
                  "Comma list of mpsac, drredpa-op, page, mqsac");
  run->add_option("--lambda-scale", run_flags.lambda_scales,
                  "Comma list of arrival scales");
  run->add_option("--out", run_flags.out, "Output directory")->required();
  run->add_option("--threads", run_flags.threads, "Worker threads, 0 = all cores");

  AuctionFlags auction_flags;
  CLI::App* auction = app.add_subcommand("auction", "One slice auction on a bid file");
  auction->add_option("--bids", auction_flags.bids, "CSV: vsp_id,bid,demand")->required();
  auction->add_option("--offered", auction_flags.offered, "Quotas on offer")->required();
  auction->add_option("--reserve", auction_flags.reserve, "Reserve (base) price")->required();
  auction->add_option("--epsilon", auction_flags.epsilon, "Utility offset");

  CLI::App* oracle = app.add_subcommand("oracle", "")->group("");
  oracle->require_subcommand(1);
  AuctionFlags p4_flags;
  CLI::App* p4 = oracle->add_subcommand("p4", "Exhaustive intra-slice split");
  p4->add_option("--bids", p4_flags.bids)->required();
  p4->add_option("--offered", p4_flags.offered)->required();
  p4->add_option("--reserve", p4_flags.reserve)->required();
  p4->add_option("--epsilon", p4_flags.epsilon);
  std::string p3_input;
  CLI::App* p3 = oracle->add_subcommand("p3", "Exhaustive inter-slice admission");
  p3->add_option("--input", p3_input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*run) return CmdRun(run_flags, out);
    if (*auction) return CmdAuction(auction_flags, out);
    if (*p4) return CmdOracleP4(p4_flags, out);
    if (*p3) return CmdOracleP3(p3_input, out);
  } catch (const ValidationError& e) {
    err << "invalid scenario:\n";
    for (const std::string& v : e.violations()) err << "  - " << v << "\n";
    return kExitConfigError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitRuntimeViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeViolation;
  }
  return kExitConfigError;
}

}  // namespace slicemarket::cli
