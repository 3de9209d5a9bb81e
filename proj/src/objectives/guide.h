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

#ifndef NOLS_OBJECTIVES_GUIDE_H_
#define NOLS_OBJECTIVES_GUIDE_H_

#include <vector>

#include "core/element_set.h"
#include "core/lifted.h"
#include "core/oracles.h"
#include "objectives/objectives.h"

namespace nols {

// Largest supported number of levels (2^levels value queries per guide
// evaluation).
inline constexpr int kMaxLevels = 20;

// Coefficients of the auxiliary function:
//   alpha_0 = 0, alpha_i = (1 + 1/l)^(i-1) / C(l-1, i-1) for i in [l],
//   alpha_{l+1} = 0.
class AlphaSchedule {
 public:
  // Throws std::invalid_argument unless 1 <= levels <= kMaxLevels.
  static AlphaSchedule ForLevels(int levels);

  int levels() const { return levels_; }

  // alpha_i for i in [0, levels + 1].
  double operator[](int i) const { return alpha_.at(i); }

  // sum over J ⊆ [l] of alpha_|J|.
  double SubsetWeightSum() const;

 private:
  AlphaSchedule(int levels, std::vector<double> alpha)
      : levels_(levels), alpha_(std::move(alpha)) {}

  int levels_;
  std::vector<double> alpha_;
};

// g(S_1, ..., S_l) = sum over J ⊆ [l] of alpha_|J| * f(S_J), where S_J is the
// union of the parts indexed by J. Costs 2^l - 1 value queries. Throws
// std::invalid_argument if the parts overlap or their count is not l.
double GEval(const ValueOracle& f, const AlphaSchedule& alpha,
             const std::vector<ElementSet>& parts);

// pi_J(S): base elements that appear in S at some level of J.
inline ElementSet PiJ(const LiftedIndexer& indexer, const ElementSet& lifted,
                      LevelMask levels) {
  return indexer.Project(lifted, levels);
}

// g'(S) = g(pi_1(S), ..., pi_l(S)); 2^l - 1 value queries.
double GPrimeEval(const ValueOracle& f, const AlphaSchedule& alpha,
                  const ElementSet& lifted);

// g'(x | S) = sum over J containing level(x) of alpha_|J| f(base(x) | pi_J(S)).
double GPrimeMarginal(const ValueOracle& f, const AlphaSchedule& alpha,
                      LiftedElement x, const ElementSet& lifted);

// Guide over the lifted ground set:
//   g'(S) + alpha_l * (l + 1) * l'(S),  l'(S) = sum over (u, j) in S of l({u}).
// Without a regularizer (or with a zero one) this is g'. With negative
// regularizer weights the guide can be non-monotone.
class LiftedGuide final : public ValueOracle {
 public:
  LiftedGuide(const ValueOracle& f, const AlphaSchedule& alpha,
              const LinearRegularizer* regularizer = nullptr);

  int ground_size() const override { return indexer_.lifted_size(); }
  double Evaluate(const ElementSet& lifted) const override;

  const LiftedIndexer& indexer() const { return indexer_; }
  double regularizer_scale() const { return regularizer_scale_; }

 private:
  const ValueOracle& f_;
  AlphaSchedule alpha_;
  const LinearRegularizer* regularizer_;
  LiftedIndexer indexer_;
  double regularizer_scale_;
};

inline LiftedGuide RegularizedGuide(const ValueOracle& f,
                                    const AlphaSchedule& alpha,
                                    const LinearRegularizer& regularizer) {
  return LiftedGuide(f, alpha, &regularizer);
}

}  // namespace nols

#endif  // NOLS_OBJECTIVES_GUIDE_H_
