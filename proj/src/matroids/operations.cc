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

#include "matroids/operations.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nols {

ElementSet ExtendToBase(const MatroidOracle& matroid, const ElementSet& start) {
  if (start.universe_size() != matroid.ground_size()) {
    throw std::invalid_argument("set and matroid universes differ");
  }
  if (!matroid.IsIndependent(start)) {
    throw std::invalid_argument("cannot extend a dependent set to a base");
  }
  ElementSet base = start;
  for (ElementId u = 0; u < matroid.ground_size(); ++u) {
    if (base.contains(u)) continue;
    base.insert(u);
    if (!matroid.IsIndependent(base)) base.erase(u);
  }
  return base;
}

int Rank(const MatroidOracle& matroid) {
  return ExtendToBase(matroid, ElementSet(matroid.ground_size())).size();
}

ElementSet MaxWeightIndependent(const MatroidOracle& matroid,
                                std::span<const double> weights) {
  const int n = matroid.ground_size();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("one weight per ground element required");
  }
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return weights[a] > weights[b];
  });
  ElementSet chosen(n);
  for (ElementId u : order) {
    if (weights[u] < 0) break;
    chosen.insert(u);
    if (!matroid.IsIndependent(chosen)) chosen.erase(u);
  }
  return chosen;
}

MinWeightExchange::MinWeightExchange(const MatroidOracle& matroid,
                                     const ElementSet& solution,
                                     const ElementSet& candidates,
                                     std::span<const double> weights,
                                     Check check)
    : matroid_(matroid),
      solution_(solution),
      kept_(solution - candidates),
      order_(candidates.ToVector()),
      check_(check) {
  if (static_cast<int>(weights.size()) != solution.universe_size()) {
    throw std::invalid_argument("weights must be indexed by element id");
  }
  if (!candidates.IsSubsetOf(solution)) {
    throw std::invalid_argument("exchange candidates must lie in the solution");
  }
  if (order_.empty()) {
    throw std::invalid_argument("exchange candidate set is empty");
  }
  std::stable_sort(order_.begin(), order_.end(),
                   [&](ElementId a, ElementId b) {
                     return weights[a] < weights[b];
                   });
}

ElementId MinWeightExchange::Find(ElementId v) const {
  if (solution_.contains(v)) {
    throw std::invalid_argument("incoming element already in the solution");
  }
  ElementSet probe = kept_.With(v);
  if (check_ == Check::kFull) {
    if (!matroid_.IsIndependent(probe)) {
      throw std::invalid_argument(
          "(S \\ S') + v is dependent; no exchange exists");
    }
    if (matroid_.IsIndependent(solution_.With(v))) {
      throw std::invalid_argument("S + v is independent; nothing to exchange");
    }
  }
  // Positions are 1-based over order_. Invariant: suffix from lo is
  // dependent (lo = 1 is S + v), suffix from hi is independent
  // (hi = m + 1 is (S \ S') + v).
  const int m = static_cast<int>(order_.size());
  int lo = 1;
  int hi = m + 1;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    ElementSet suffix = probe;
    for (int i = mid; i <= m; ++i) suffix.insert(order_[i - 1]);
    if (matroid_.IsIndependent(suffix)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // The suffix from hi is independent but adding position hi - 1 = lo breaks
  // it, so S - order[lo] + v is the unique feasible swap among positions
  // <= lo and every earlier position is infeasible.
  return order_[lo - 1];
}

namespace {

bool Augment(int a, const std::vector<std::vector<int>>& adj,
             std::vector<int>& match_of_b, std::vector<bool>& seen) {
  for (int b : adj[a]) {
    if (seen[b]) continue;
    seen[b] = true;
    if (match_of_b[b] == -1 || Augment(match_of_b[b], adj, match_of_b, seen)) {
      match_of_b[b] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

std::map<ElementId, ElementId> ExchangeBijection(const MatroidOracle& matroid,
                                                 const ElementSet& a,
                                                 const ElementSet& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bases must have equal size");
  }
  std::map<ElementId, ElementId> h;
  (a & b).ForEach([&](ElementId u) { h[u] = u; });
  const std::vector<ElementId> left = (a - b).ToVector();
  const std::vector<ElementId> right = (b - a).ToVector();
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (matroid.IsIndependent(b.Without(right[j]).With(left[i]))) {
        adj[i].push_back(static_cast<int>(j));
      }
    }
  }
  std::vector<int> match_of_b(right.size(), -1);
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<bool> seen(right.size(), false);
    if (!Augment(static_cast<int>(i), adj, match_of_b, seen)) {
      throw std::logic_error(
          "no exchange bijection between the bases; oracle is not a matroid");
    }
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    h[left[match_of_b[j]]] = right[j];
  }
  return h;
}

}  // namespace nols
