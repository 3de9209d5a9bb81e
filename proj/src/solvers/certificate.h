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

#ifndef NOLS_SOLVERS_CERTIFICATE_H_
#define NOLS_SOLVERS_CERTIFICATE_H_

#include <limits>

#include "core/element_set.h"
#include "core/numeric_policy.h"
#include "core/oracles.h"
#include "objectives/incremental.h"

namespace nols {

// Witness for the approximate local-optimality condition
//   sum_{v in T} f(v | S - v) - sum_{u in S} f(u | S - u) <= bound  for all T.
// The witness T maximizes the left-hand side over all independent T, so
// `passes` certifies the condition universally.
struct LocalOptCertificate {
  ElementSet witness;
  double gap = 0;
  double bound = std::numeric_limits<double>::infinity();
  bool passes = true;
};

// Computes w_v = f(v | S - v) for every v, T* = MaxWeightIndependent(w) and
// the gap. n value-marginals and n independence queries. Rebinds
// `objective` to s.
LocalOptCertificate ComputeLocalOptCertificate(
    IncrementalObjective& objective, const MatroidOracle& matroid,
    const ElementSet& s, double bound,
    NumericPolicy policy = NumericPolicy::Floating());

}  // namespace nols

#endif  // NOLS_SOLVERS_CERTIFICATE_H_
