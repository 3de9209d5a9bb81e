// Copyright 2026 The Authors.
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

#include "objectives/objectives.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nols {

CoverageFunction::CoverageFunction(int point_count,
                                   std::vector<std::vector<int>> covers,
                                   std::vector<double> point_weights)
    : point_count_(point_count), point_weights_(std::move(point_weights)) {
  if (static_cast<int>(point_weights_.size()) != point_count) {
    throw std::invalid_argument("one weight per coverage point required");
  }
  for (double w : point_weights_) {
    if (!(w >= 0)) throw std::invalid_argument("negative coverage weight");
  }
  covers_.reserve(covers.size());
  for (const auto& points : covers) {
    ElementSet s(point_count);
    for (int p : points) s.insert(p);
    covers_.push_back(std::move(s));
  }
}

double CoverageFunction::Evaluate(const ElementSet& s) const {
  ElementSet covered(point_count_);
  s.ForEach([&](ElementId u) { covered |= covers_[u]; });
  double total = 0;
  covered.ForEach([&](int p) { total += point_weights_[p]; });
  return total;
}

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0)) throw std::invalid_argument("negative modular weight");
  }
}

double ModularFunction::Evaluate(const ElementSet& s) const {
  double total = 0;
  s.ForEach([&](ElementId u) { total += weights_[u]; });
  return total;
}

ConcaveOfModular::ConcaveOfModular(std::vector<double> weights, Shape shape,
                                   double cap)
    : weights_(std::move(weights)), shape_(shape), cap_(cap) {
  for (double w : weights_) {
    if (!(w >= 0)) throw std::invalid_argument("negative modular weight");
  }
  if (shape == Shape::kMinCap && !(cap >= 0)) {
    throw std::invalid_argument("cap must be non-negative");
  }
}

double ConcaveOfModular::Evaluate(const ElementSet& s) const {
  double total = 0;
  s.ForEach([&](ElementId u) { total += weights_[u]; });
  return shape_ == Shape::kSqrt ? std::sqrt(total) : std::min(total, cap_);
}

double LinearRegularizer::Evaluate(const ElementSet& s) const {
  double total = 0;
  s.ForEach([&](ElementId u) { total += weights_[u]; });
  return total;
}

bool LinearRegularizer::IsZero() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](double w) { return w == 0; });
}

double Marginal(const ValueOracle& f, ElementId u, const ElementSet& s) {
  if (s.contains(u)) return 0;
  return f.Evaluate(s.With(u)) - f.Evaluate(s);
}

double MarginalWithout(const ValueOracle& f, ElementId u, const ElementSet& s) {
  const ElementSet rest = s.Without(u);
  return f.Evaluate(rest.With(u)) - f.Evaluate(rest);
}

}  // namespace nols
