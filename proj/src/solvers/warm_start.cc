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

#include "solvers/warm_start.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace nols {
namespace {

ElementSet ThresholdGreedy(IncrementalObjective& objective,
                           const MatroidOracle& matroid) {
  const int n = objective.ground_size();
  objective.Reset(ElementSet(n));
  if (n == 0) return objective.current();

  // bound[u] is an upper bound on the current marginal of u; it is exact
  // while stamp[u] == version.
  std::vector<double> bound(n);
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t version = 0;
  double top = 0;
  for (ElementId u = 0; u < n; ++u) {
    bound[u] = objective.Gain(u);
    top = std::max(top, bound[u]);
  }
  if (top <= 0) return objective.current();

  const double floor = kThresholdDecay * top / n;
  std::vector<ElementId> alive;
  for (ElementId u = 0; u < n; ++u) {
    if (bound[u] >= floor) alive.push_back(u);
  }
  for (double tau = top; tau >= floor && !alive.empty();
       tau *= 1.0 - kThresholdDecay) {
    std::vector<ElementId> still_alive;
    still_alive.reserve(alive.size());
    for (ElementId u : alive) {
      if (bound[u] < tau) {
        still_alive.push_back(u);
        continue;
      }
      if (stamp[u] != version) {
        bound[u] = objective.Gain(u);
        stamp[u] = version;
      }
      if (bound[u] < floor) continue;
      if (bound[u] < tau) {
        still_alive.push_back(u);
        continue;
      }
      // Once S + u is dependent it stays dependent as S grows.
      if (matroid.IsIndependent(objective.current().With(u))) {
        objective.Add(u);
        ++version;
      }
    }
    alive = std::move(still_alive);
  }
  return objective.current();
}

ElementSet PlainGreedy(IncrementalObjective& objective,
                       const MatroidOracle& matroid) {
  const int n = objective.ground_size();
  objective.Reset(ElementSet(n));
  std::vector<ElementId> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  while (!candidates.empty()) {
    std::vector<std::pair<double, ElementId>> scored;
    scored.reserve(candidates.size());
    for (ElementId u : candidates) scored.emplace_back(objective.Gain(u), u);
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) {
                       return a.first > b.first;
                     });
    std::vector<ElementId> next;
    bool added = false;
    for (const auto& [gain, u] : scored) {
      if (added) {
        next.push_back(u);
        continue;
      }
      if (gain <= 0) break;
      if (matroid.IsIndependent(objective.current().With(u))) {
        objective.Add(u);
        added = true;
      }
      // A dependent u is dropped for good.
    }
    if (!added) break;
    std::sort(next.begin(), next.end());
    candidates = std::move(next);
  }
  return objective.current();
}

}  // namespace

ElementSet WarmStart(IncrementalObjective& objective,
                     const MatroidOracle& matroid, WarmStartKind kind) {
  return kind == WarmStartKind::kThresholdGreedy
             ? ThresholdGreedy(objective, matroid)
             : PlainGreedy(objective, matroid);
}

ElementSet WarmStart(const ValueOracle& f, const MatroidOracle& matroid,
                     WarmStartKind kind) {
  PlainIncremental objective(f);
  return WarmStart(objective, matroid, kind);
}

}  // namespace nols
