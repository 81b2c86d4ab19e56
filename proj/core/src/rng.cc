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

#include "slicemarket/rng.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace slicemarket {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Chunk size for Knuth's multiplicative method; exp(-30) is far from
// underflow and the sum of independent Poisson draws is Poisson.
constexpr double kPoissonChunk = 30.0;

std::int64_t PoissonKnuth(RngStream& stream, double rate) {
  const double limit = std::exp(-rate);
  std::int64_t k = 0;
  double product = stream.NextUniform();
  while (product >= limit) {
    ++k;
    product *= stream.NextUniform();
  }
  return k;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      engine_(SplitMix64(seed ^ SplitMix64(stream_id))) {}

double RngStream::NextUniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformBelow: zero bound");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t SamplePoisson(RngStream& stream, double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("SamplePoisson: rate must be finite and >= 0");
  }
  std::int64_t total = 0;
  while (rate > kPoissonChunk) {
    total += PoissonKnuth(stream, kPoissonChunk);
    rate -= kPoissonChunk;
  }
  if (rate > 0.0) total += PoissonKnuth(stream, rate);
  return total;
}

double SampleExponential(RngStream& stream, double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("SampleExponential: mean must be positive");
  }
  // 1 - u lies in (0, 1], so the log is finite.
  return -mean * std::log1p(-stream.NextUniform());
}

std::int64_t SampleExponentialSlots(RngStream& stream, double mean) {
  const double draw = SampleExponential(stream, mean);
  const auto slots = static_cast<std::int64_t>(std::ceil(draw));
  return slots < 1 ? 1 : slots;
}

}  // namespace slicemarket
