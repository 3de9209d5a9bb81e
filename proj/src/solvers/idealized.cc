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

#include "solvers/idealized.h"

#include <stdexcept>

#include "matroids/operations.h"
#include "objectives/guide.h"

namespace nols {
namespace {

ElementSet Union(const std::vector<ElementSet>& parts, int n) {
  ElementSet all(n);
  for (const auto& p : parts) all |= p;
  return all;
}

}  // namespace

std::vector<ElementSet> IdealizedLocalSearch(const ValueOracle& f,
                                             const MatroidOracle& matroid,
                                             int levels, NumericPolicy policy) {
  const int n = matroid.ground_size();
  if (f.ground_size() != n) {
    throw std::invalid_argument("objective and matroid sizes differ");
  }
  if (n > kIdealizedMaxGround) {
    throw std::invalid_argument("idealized local search is limited to n <= 16");
  }
  const AlphaSchedule alpha = AlphaSchedule::ForLevels(levels);
  std::vector<ElementSet> parts(levels, ElementSet(n));
  parts[0] = ExtendToBase(matroid, ElementSet(n));
  if (parts[0].size() > kIdealizedMaxRank) {
    throw std::invalid_argument(
        "idealized local search is limited to rank <= 6");
  }

  double value = GEval(f, alpha, parts);
  while (true) {
    bool improved = false;
    // Step 1: move an element between parts.
    for (int k = 0; k < levels && !improved; ++k) {
      for (ElementId u : parts[k].ToVector()) {
        for (int j = 0; j < levels && !improved; ++j) {
          if (j == k) continue;
          std::vector<ElementSet> next = parts;
          next[k].erase(u);
          next[j].insert(u);
          const double candidate = GEval(f, alpha, next);
          if (policy.Exceeds(candidate, value)) {
            parts = std::move(next);
            value = candidate;
            improved = true;
          }
        }
        if (improved) break;
      }
    }
    if (improved) continue;
    // Step 2: exchange an element of the union for an outside element.
    const ElementSet all = Union(parts, n);
    for (int k = 0; k < levels && !improved; ++k) {
      for (ElementId u : parts[k].ToVector()) {
        const ElementSet rest = all.Without(u);
        for (ElementId v = 0; v < n && !improved; ++v) {
          if (all.contains(v) || !matroid.IsIndependent(rest.With(v))) {
            continue;
          }
          for (int j = 0; j < levels && !improved; ++j) {
            std::vector<ElementSet> next = parts;
            next[k].erase(u);
            next[j].insert(v);
            const double candidate = GEval(f, alpha, next);
            if (policy.Exceeds(candidate, value)) {
              parts = std::move(next);
              value = candidate;
              improved = true;
            }
          }
        }
        if (improved) break;
      }
    }
    if (!improved) break;
  }
  return parts;
}

}  // namespace nols
