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

#ifndef SLICEMARKET_RNG_H_
#define SLICEMARKET_RNG_H_

#include <cstdint>
#include <random>

namespace slicemarket {

// Stochastic roles. Each (role, entity) pair owns a private stream so that
// consuming one never shifts another.
enum class StreamRole : std::uint32_t {
  kArrivals = 1,
  kLifetimes = 2,
  kPatience = 3,
  kBalking = 4,
  kPreferring = 5,
  kMqsacMatrices = 6,
};

// A reproducible random stream keyed by (seed, stream id). The engine is
// mt19937_64, whose output is fixed by the standard; every distribution on
// top of it is implemented here rather than taken from <random>, whose
// distributions are implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  static std::uint64_t StreamId(StreamRole role, std::uint32_t entity) {
    return (static_cast<std::uint64_t>(role) << 32) | entity;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double NextUniform();
  // Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// Poisson(rate) count. Throws std::invalid_argument for a negative rate.
std::int64_t SamplePoisson(RngStream& stream, double rate);

// Continuous Exponential draw with the given mean (> 0).
double SampleExponential(RngStream& stream, double mean);

// Exponential draw with the given mean rounded up to whole slots, at least 1.
std::int64_t SampleExponentialSlots(RngStream& stream, double mean);

}  // namespace slicemarket

#endif  // SLICEMARKET_RNG_H_
