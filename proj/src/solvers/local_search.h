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

#ifndef NOLS_SOLVERS_LOCAL_SEARCH_H_
#define NOLS_SOLVERS_LOCAL_SEARCH_H_

#include <optional>
#include <vector>

#include "core/element_set.h"
#include "core/numeric_policy.h"
#include "core/oracles.h"
#include "core/random_source.h"
#include "objectives/incremental.h"
#include "solvers/certificate.h"
#include "solvers/warm_start.h"

namespace nols {

struct LocalSearchOptions {
  NumericPolicy policy = NumericPolicy::Floating();
  WarmStartKind warm_start = WarmStartKind::kThresholdGreedy;
  // Used as S0 instead of running the warm start. Must be independent.
  std::optional<ElementSet> start_hint;
  // Record the objective value after every accepted swap.
  bool record_trace = false;
};

// S0 (warm start or hint), its value, and its completion to a base.
struct StartPoint {
  ElementSet warm;
  double warm_value = 0;
  ElementSet base;
};

StartPoint PrepareStart(IncrementalObjective& objective,
                        const MatroidOracle& matroid,
                        const LocalSearchOptions& options);

struct LocalSearchResult {
  ElementSet set;
  bool failed = false;
  double start_value = 0;  // f(S0)
  double threshold = 0;    // swap threshold (deterministic) or fail bound
  int rank = 0;
  long iterations = 0;
  int repetitions = 0;
  std::vector<double> trace;  // value of the base, then after each swap
  std::optional<LocalOptCertificate> certificate;  // randomized fail check
};

// Swap local search with threshold (eps / r) f(S0). Each round computes
// f(u | S - u) for u in S, then scans v outside S in ascending order and
// takes the first v whose cheapest feasible partner (binary-search exchange)
// clears the threshold. Loops are detected once up front.
LocalSearchResult DeterministicLocalSearch(IncrementalObjective& objective,
                                           const MatroidOracle& matroid,
                                           double epsilon,
                                           const LocalSearchOptions& options = {});

// k = ceil(18 r / eps) sampled rounds, then a uniformly chosen intermediate
// solution S_{i-1} is tested: Fail if its local-optimality gap is at least
// eps f(S0), otherwise S_{i-1} is returned. `start` skips PrepareStart.
LocalSearchResult RandomizedLocalSearchOnce(
    IncrementalObjective& objective, const MatroidOracle& matroid,
    double epsilon, RandomSource& rng, const LocalSearchOptions& options = {},
    const StartPoint* start = nullptr);

// ceil(log3(1 / eps)) independent attempts; the first success wins. A
// non-negative max_repetitions overrides the attempt count.
LocalSearchResult RandomizedLocalSearch(IncrementalObjective& objective,
                                        const MatroidOracle& matroid,
                                        double epsilon, RandomSource& rng,
                                        const LocalSearchOptions& options = {},
                                        int max_repetitions = -1);

int RepetitionCount(double epsilon);
long RandomizedIterationCount(int rank, double epsilon);
int FirstSampleSize(int n, int rank);   // |R1| = min(r, ceil(sqrt n))
int SecondSampleSize(int n, int rank);  // |R2| = max(ceil(n / r), ceil(sqrt n))

}  // namespace nols

#endif  // NOLS_SOLVERS_LOCAL_SEARCH_H_
