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

#ifndef NOLS_SOLVERS_WARM_START_H_
#define NOLS_SOLVERS_WARM_START_H_

#include "core/element_set.h"
#include "core/oracles.h"
#include "objectives/incremental.h"

namespace nols {

enum class WarmStartKind {
  // Descending thresholds tau = d, d(1 - delta), ... down to delta * d / n,
  // with d = max_u f({u}) and delta = 1/8. Marginals are re-queried lazily:
  // an element whose last known marginal is below tau is skipped, which is
  // sound because marginals only shrink as the solution grows.
  kThresholdGreedy,
  // Repeatedly insert the feasible element with the largest marginal.
  kPlainGreedy,
};

inline constexpr double kThresholdDecay = 1.0 / 8.0;

// Independent set with f(S0) >= f(OPT) / 3 (checked against brute force in
// the tests). Leaves `objective` bound to the returned set.
ElementSet WarmStart(IncrementalObjective& objective,
                     const MatroidOracle& matroid,
                     WarmStartKind kind = WarmStartKind::kThresholdGreedy);

ElementSet WarmStart(const ValueOracle& f, const MatroidOracle& matroid,
                     WarmStartKind kind = WarmStartKind::kThresholdGreedy);

}  // namespace nols

#endif  // NOLS_SOLVERS_WARM_START_H_
