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

#include "solvers/certificate.h"

#include <stdexcept>
#include <vector>

#include "matroids/operations.h"

namespace nols {

LocalOptCertificate ComputeLocalOptCertificate(IncrementalObjective& objective,
                                               const MatroidOracle& matroid,
                                               const ElementSet& s,
                                               double bound,
                                               NumericPolicy policy) {
  if (s.universe_size() != matroid.ground_size() ||
      objective.ground_size() != matroid.ground_size()) {
    throw std::invalid_argument("objective, matroid and set sizes differ");
  }
  objective.Reset(s);
  const int n = matroid.ground_size();
  std::vector<double> weights(n);
  double own = 0;
  for (ElementId v = 0; v < n; ++v) {
    weights[v] = objective.MarginalWithout(v);
    if (s.contains(v)) own += weights[v];
  }
  LocalOptCertificate cert;
  cert.witness = MaxWeightIndependent(matroid, weights);
  double best = 0;
  cert.witness.ForEach([&](ElementId v) { best += weights[v]; });
  cert.gap = best - own;
  cert.bound = bound;
  cert.passes = policy.AtLeast(bound, cert.gap);
  return cert;
}

}  // namespace nols
