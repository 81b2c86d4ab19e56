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

#ifndef SLICEMARKET_RESOURCE_VECTOR_H_
#define SLICEMARKET_RESOURCE_VECTOR_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace slicemarket {

// Absolute tolerance for every resource comparison. Demands in the reference
// scenario are decimal fractions, so accumulated subtraction drifts.
inline constexpr double kResourceTolerance = 1e-9;

// A K-dimensional quantity of abstract resource units: a capacity, a
// per-instance demand, or what is left available.
class ResourceVector {
 public:
  ResourceVector() = default;
  explicit ResourceVector(std::vector<double> values)
      : values_(std::move(values)) {}
  ResourceVector(std::initializer_list<double> values) : values_(values) {}

  static ResourceVector Zeros(std::size_t dims) {
    return ResourceVector(std::vector<double>(dims, 0.0));
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t k) const { return values_[k]; }
  double& operator[](std::size_t k) { return values_[k]; }
  std::span<const double> values() const { return values_; }

  ResourceVector& operator+=(const ResourceVector& other);
  ResourceVector& operator-=(const ResourceVector& other);
  // Adds `count` copies of `other`.
  ResourceVector& AddScaled(const ResourceVector& other, double count);

  // True iff this[k] <= bound[k] + tolerance for every k.
  bool FitsWithin(const ResourceVector& bound,
                  double tolerance = kResourceTolerance) const;
  bool AllNonNegative(double tolerance = 0.0) const;
  bool HasPositiveEntry() const;

  std::string ToString() const;

  friend bool operator==(const ResourceVector&, const ResourceVector&) = default;

 private:
  std::vector<double> values_;
};

inline ResourceVector operator+(ResourceVector a, const ResourceVector& b) {
  return a += b;
}
inline ResourceVector operator-(ResourceVector a, const ResourceVector& b) {
  return a -= b;
}

}  // namespace slicemarket

#endif  // SLICEMARKET_RESOURCE_VECTOR_H_
