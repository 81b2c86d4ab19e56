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

#ifndef SLICEMARKET_TOOLS_CLI_H_
#define SLICEMARKET_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "slicemarket/auction.h"
#include "slicemarket/scenario.h"

namespace slicemarket::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeViolation = 2;

// Named strategy pairs accepted by `run --strategy`.
struct StrategyPreset {
  std::string name;
  AdmissionStrategy admission;
  IntraStrategy intra;
};

// Throws std::invalid_argument on an unknown name.
StrategyPreset ParseStrategyPreset(const std::string& name);

// Bid file: header "vsp_id,bid,demand" then one row per bidder. An empty
// file means no bidders. Throws std::invalid_argument when malformed.
std::vector<Bid> ParseBidFile(const std::string& text);

// Entry point shared by main() and the tests.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace slicemarket::cli

#endif  // SLICEMARKET_TOOLS_CLI_H_
