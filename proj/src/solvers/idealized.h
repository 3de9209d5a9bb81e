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

#ifndef NOLS_SOLVERS_IDEALIZED_H_
#define NOLS_SOLVERS_IDEALIZED_H_

#include <vector>

#include "core/element_set.h"
#include "core/numeric_policy.h"
#include "core/oracles.h"

namespace nols {

inline constexpr int kIdealizedMaxGround = 16;
inline constexpr int kIdealizedMaxRank = 6;

// Reference non-oblivious local search over l disjoint parts whose union is a
// base, guided by g. Moves, tried in a fixed order and taken on strict
// improvement of g:
//   1. move u from part k to part j != k;
//   2. drop u from part k and put some v outside the union into any part j,
//      provided (union - u) + v is independent.
// Exponential in the worst case; limited to n <= 16 and rank <= 6
// (std::invalid_argument otherwise). Returns the parts.
std::vector<ElementSet> IdealizedLocalSearch(
    const ValueOracle& f, const MatroidOracle& matroid, int levels,
    NumericPolicy policy = NumericPolicy::Floating());

}  // namespace nols

#endif  // NOLS_SOLVERS_IDEALIZED_H_
