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

#ifndef NOLS_MATROIDS_OPERATIONS_H_
#define NOLS_MATROIDS_OPERATIONS_H_

#include <map>
#include <span>
#include <vector>

#include "core/element_set.h"
#include "core/oracles.h"

namespace nols {

// Completes an independent set to a base with one ascending pass over the
// ground set: n + 1 independence queries (the extra one rejects a dependent
// start with std::invalid_argument).
ElementSet ExtendToBase(const MatroidOracle& matroid, const ElementSet& start);

// Size of a base.
int Rank(const MatroidOracle& matroid);

// Greedy maximum-weight independent set: elements in non-increasing weight
// order (ties by ascending id), kept when the set stays independent.
// Negative weights never improve the objective and are skipped; zero weights
// are kept, so all-zero weights yield the greedy base.
ElementSet MaxWeightIndependent(const MatroidOracle& matroid,
                                std::span<const double> weights);

// Finds argmin { w_u : u in candidates, S - u + v independent } by binary
// search over the candidates sorted by (weight, id).
//
// Preconditions (trusted unless Check::kFull is requested):
//   S independent, candidates a non-empty subset of S, v not in S,
//   S + v dependent, (S \ candidates) + v independent.
// Cheap structural preconditions are always checked and throw
// std::invalid_argument. kFull additionally spends two independence queries
// on the oracle-level preconditions.
//
// The sort is done once on construction so several v can share it.
class MinWeightExchange {
 public:
  enum class Check { kTrusted, kFull };

  MinWeightExchange(const MatroidOracle& matroid, const ElementSet& solution,
                    const ElementSet& candidates,
                    std::span<const double> weights,
                    Check check = Check::kTrusted);

  // ceil(log2 |candidates|) independence queries (+2 with kFull).
  ElementId Find(ElementId v) const;

 private:
  const MatroidOracle& matroid_;
  const ElementSet& solution_;
  ElementSet kept_;  // solution \ candidates
  std::vector<ElementId> order_;
  Check check_;
};

inline ElementId FindMinWeightExchange(
    const MatroidOracle& matroid, const ElementSet& solution,
    const ElementSet& candidates, ElementId v, std::span<const double> weights,
    MinWeightExchange::Check check = MinWeightExchange::Check::kTrusted) {
  return MinWeightExchange(matroid, solution, candidates, weights, check)
      .Find(v);
}

// Bijection h: A -> B with (B - h(u)) + u independent for every u and h
// identity on A ∩ B, via bipartite matching. Test-scale helper (n <= 20);
// throws std::logic_error if no perfect matching exists.
std::map<ElementId, ElementId> ExchangeBijection(const MatroidOracle& matroid,
                                                 const ElementSet& a,
                                                 const ElementSet& b);

}  // namespace nols

#endif  // NOLS_MATROIDS_OPERATIONS_H_
