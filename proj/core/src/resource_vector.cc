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

#include "slicemarket/resource_vector.h"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace slicemarket {

ResourceVector& ResourceVector::operator+=(const ResourceVector& other) {
  assert(other.size() == size());
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other[k];
  return *this;
}

ResourceVector& ResourceVector::operator-=(const ResourceVector& other) {
  assert(other.size() == size());
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other[k];
  return *this;
}

ResourceVector& ResourceVector::AddScaled(const ResourceVector& other,
                                          double count) {
  assert(other.size() == size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    values_[k] += other[k] * count;
  }
  return *this;
}

bool ResourceVector::FitsWithin(const ResourceVector& bound,
                                double tolerance) const {
  assert(bound.size() == size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] > bound[k] + tolerance) return false;
  }
  return true;
}

bool ResourceVector::AllNonNegative(double tolerance) const {
  return std::all_of(values_.begin(), values_.end(),
                     [tolerance](double v) { return v >= -tolerance; });
}

bool ResourceVector::HasPositiveEntry() const {
  return std::any_of(values_.begin(), values_.end(),
                     [](double v) { return v > 0.0; });
}

std::string ResourceVector::ToString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k > 0) out << ", ";
    out << values_[k];
  }
  out << ')';
  return out.str();
}

}  // namespace slicemarket
