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

#ifndef NOLS_OBJECTIVES_OBJECTIVES_H_
#define NOLS_OBJECTIVES_OBJECTIVES_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/element_set.h"
#include "core/oracles.h"

namespace nols {

// Weighted coverage: element u covers a subset of a universe of points and
// f(S) is the total weight of the points covered by S.
class CoverageFunction final : public ValueOracle {
 public:
  CoverageFunction(int point_count, std::vector<std::vector<int>> covers,
                   std::vector<double> point_weights);

  int ground_size() const override { return static_cast<int>(covers_.size()); }
  double Evaluate(const ElementSet& s) const override;

  int point_count() const { return point_count_; }
  const std::vector<double>& point_weights() const { return point_weights_; }
  std::vector<int> Covered(ElementId u) const { return covers_[u].ToVector(); }

 private:
  int point_count_;
  std::vector<ElementSet> covers_;
  std::vector<double> point_weights_;
};

// f(S) = sum of w_u over S, with non-negative weights.
class ModularFunction final : public ValueOracle {
 public:
  explicit ModularFunction(std::vector<double> weights);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(const ElementSet& s) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// f(S) = phi(sum of w_u over S) with phi(x) = sqrt(x) or phi(x) = min(x, cap).
class ConcaveOfModular final : public ValueOracle {
 public:
  enum class Shape { kSqrt, kMinCap };

  ConcaveOfModular(std::vector<double> weights, Shape shape, double cap = 0);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(const ElementSet& s) const override;

  const std::vector<double>& weights() const { return weights_; }
  Shape shape() const { return shape_; }
  double cap() const { return cap_; }

 private:
  std::vector<double> weights_;
  Shape shape_;
  double cap_;
};

// Arbitrary set function from a callable; handy for fixtures.
class FunctionOracle final : public ValueOracle {
 public:
  FunctionOracle(int n, std::function<double(const ElementSet&)> fn)
      : n_(n), fn_(std::move(fn)) {}

  int ground_size() const override { return n_; }
  double Evaluate(const ElementSet& s) const override { return fn_(s); }

 private:
  int n_;
  std::function<double(const ElementSet&)> fn_;
};

// Additive set function with sign-unrestricted weights.
class LinearRegularizer {
 public:
  LinearRegularizer() = default;
  explicit LinearRegularizer(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  static LinearRegularizer Zero(int n) {
    return LinearRegularizer(std::vector<double>(n, 0.0));
  }

  int ground_size() const { return static_cast<int>(weights_.size()); }
  double weight(ElementId u) const { return weights_[u]; }
  const std::vector<double>& weights() const { return weights_; }
  double Evaluate(const ElementSet& s) const;
  bool IsZero() const;

 private:
  std::vector<double> weights_;
};

// f(u | S) = f(S + u) - f(S).
double Marginal(const ValueOracle& f, ElementId u, const ElementSet& s);

// f(u | S - u).
double MarginalWithout(const ValueOracle& f, ElementId u, const ElementSet& s);

}  // namespace nols

#endif  // NOLS_OBJECTIVES_OBJECTIVES_H_
