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

#include "solvers/local_search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "matroids/operations.h"

namespace nols {
namespace {

int CeilSqrt(int n) {
  int s = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= n) --s;
  return s;
}

// ceil(x) that ignores rounding noise just above an integer.
long CeilTolerant(double x) {
  return static_cast<long>(std::ceil(x - 1e-9));
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

}  // namespace

int RepetitionCount(double epsilon) {
  CheckEpsilon(epsilon);
  return static_cast<int>(
      std::max(1L, CeilTolerant(std::log(1.0 / epsilon) / std::log(3.0))));
}

long RandomizedIterationCount(int rank, double epsilon) {
  CheckEpsilon(epsilon);
  return CeilTolerant(18.0 * rank / epsilon);
}

int FirstSampleSize(int n, int rank) { return std::min(rank, CeilSqrt(n)); }

int SecondSampleSize(int n, int rank) {
  if (rank <= 0) return 0;
  const int by_rank = (n + rank - 1) / rank;
  return std::min(n, std::max(by_rank, CeilSqrt(n)));
}

StartPoint PrepareStart(IncrementalObjective& objective,
                        const MatroidOracle& matroid,
                        const LocalSearchOptions& options) {
  StartPoint start;
  if (options.start_hint.has_value()) {
    start.warm = *options.start_hint;
    objective.Reset(start.warm);
  } else {
    start.warm = WarmStart(objective, matroid, options.warm_start);
  }
  start.warm_value = objective.Value();
  start.base = ExtendToBase(matroid, start.warm);
  return start;
}

LocalSearchResult DeterministicLocalSearch(IncrementalObjective& objective,
                                           const MatroidOracle& matroid,
                                           double epsilon,
                                           const LocalSearchOptions& options) {
  CheckEpsilon(epsilon);
  const NumericPolicy& policy = options.policy;
  const StartPoint start = PrepareStart(objective, matroid, options);
  const int n = matroid.ground_size();

  LocalSearchResult result;
  result.start_value = start.warm_value;
  result.rank = start.base.size();
  result.set = start.base;
  if (result.rank == 0) return result;
  result.threshold = epsilon / result.rank * start.warm_value;

  std::vector<bool> loop(n);
  for (ElementId v = 0; v < n; ++v) {
    loop[v] = !matroid.IsIndependent(ElementSet(n, {v}));
  }

  objective.Reset(start.base);
  if (options.record_trace) result.trace.push_back(objective.Value());
  std::vector<double> weights(n, 0.0);
  while (true) {
    const ElementSet s = objective.current();
    double cheapest = std::numeric_limits<double>::infinity();
    s.ForEach([&](ElementId u) {
      weights[u] = objective.Loss(u);
      cheapest = std::min(cheapest, weights[u]);
    });
    const MinWeightExchange exchange(matroid, s, s, weights);
    bool swapped = false;
    for (ElementId v = 0; v < n && !swapped; ++v) {
      if (loop[v] || s.contains(v)) continue;
      const double gain = objective.Gain(v);
      // No partner can do better than the globally cheapest one.
      if (!policy.MeetsThreshold(gain - cheapest, result.threshold)) continue;
      const ElementId u = exchange.Find(v);
      if (policy.MeetsThreshold(gain - weights[u], result.threshold)) {
        objective.Swap(u, v);
        ++result.iterations;
        if (options.record_trace) result.trace.push_back(objective.Value());
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  result.set = objective.current();
  return result;
}

LocalSearchResult RandomizedLocalSearchOnce(IncrementalObjective& objective,
                                            const MatroidOracle& matroid,
                                            double epsilon, RandomSource& rng,
                                            const LocalSearchOptions& options,
                                            const StartPoint* start) {
  CheckEpsilon(epsilon);
  const NumericPolicy& policy = options.policy;
  StartPoint own_start;
  if (start == nullptr) {
    own_start = PrepareStart(objective, matroid, options);
    start = &own_start;
  }
  const int n = matroid.ground_size();

  LocalSearchResult result;
  result.repetitions = 1;
  result.start_value = start->warm_value;
  result.rank = start->base.size();
  result.set = start->base;
  result.threshold = epsilon * start->warm_value;
  if (result.rank == 0) return result;

  const long rounds = RandomizedIterationCount(result.rank, epsilon);
  const int first_size = FirstSampleSize(n, result.rank);
  const int second_size = SecondSampleSize(n, result.rank);
  const ElementSet everything = ElementSet::Full(n);

  objective.Reset(start->base);
  if (options.record_trace) result.trace.push_back(objective.Value());
  // swaps[i] is the exchange made in round i + 1, if any.
  std::vector<std::pair<ElementId, ElementId>> swaps(rounds, {-1, -1});
  std::vector<double> weights(n, 0.0);
  for (long round = 0; round < rounds; ++round) {
    const ElementSet s = objective.current();
    const ElementSet removable = SampleWithoutReplacement(rng, s, first_size);
    const ElementSet arrivals =
        SampleWithoutReplacement(rng, everything, second_size);
    ++result.iterations;

    const ElementSet kept = s - removable;
    std::vector<ElementId> incoming;
    (arrivals - s).ForEach([&](ElementId v) {
      if (matroid.IsIndependent(kept.With(v))) incoming.push_back(v);
    });
    if (incoming.empty()) continue;

    double cheapest = std::numeric_limits<double>::infinity();
    removable.ForEach([&](ElementId u) {
      weights[u] = objective.Loss(u);
      cheapest = std::min(cheapest, weights[u]);
    });
    const MinWeightExchange exchange(matroid, s, removable, weights);
    bool have_best = false;
    double best = 0;
    ElementId best_out = -1;
    ElementId best_in = -1;
    for (ElementId v : incoming) {
      const double gain = objective.Gain(v);
      if (have_best && gain - cheapest <= best) continue;
      const ElementId u = exchange.Find(v);
      const double improvement = gain - weights[u];
      if (!have_best || improvement > best) {
        have_best = true;
        best = improvement;
        best_out = u;
        best_in = v;
      }
    }
    if (policy.AtLeast(best, 0.0)) {
      objective.Swap(best_out, best_in);
      swaps[round] = {best_out, best_in};
      if (options.record_trace) result.trace.push_back(objective.Value());
    }
  }

  // Output candidate S_{i-1} for i uniform in [k]: replay the first i - 1
  // rounds from the starting base.
  const long chosen = rng.Between(1, rounds);
  ElementSet candidate = start->base;
  for (long round = 0; round < chosen - 1; ++round) {
    if (swaps[round].first < 0) continue;
    candidate.erase(swaps[round].first);
    candidate.insert(swaps[round].second);
  }
  LocalOptCertificate cert = ComputeLocalOptCertificate(
      objective, matroid, candidate, result.threshold, policy);
  result.failed = policy.MeetsThreshold(cert.gap, result.threshold);
  cert.passes = !result.failed;
  result.certificate = std::move(cert);
  result.set = candidate;
  return result;
}

LocalSearchResult RandomizedLocalSearch(IncrementalObjective& objective,
                                        const MatroidOracle& matroid,
                                        double epsilon, RandomSource& rng,
                                        const LocalSearchOptions& options,
                                        int max_repetitions) {
  const int attempts =
      max_repetitions >= 0 ? max_repetitions : RepetitionCount(epsilon);
  const StartPoint start = PrepareStart(objective, matroid, options);
  LocalSearchResult result;
  result.failed = true;
  result.start_value = start.warm_value;
  result.set = ElementSet(matroid.ground_size());
  long iterations = 0;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    result = RandomizedLocalSearchOnce(objective, matroid, epsilon, rng,
                                       options, &start);
    iterations += result.iterations;
    result.iterations = iterations;
    result.repetitions = attempt;
    if (!result.failed) break;
  }
  if (result.failed) result.set = ElementSet(matroid.ground_size());
  return result;
}

}  // namespace nols
