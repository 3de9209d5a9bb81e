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

#ifndef NOLS_TESTS_FIXTURES_H_
#define NOLS_TESTS_FIXTURES_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/oracles.h"
#include "objectives/objectives.h"

namespace nols::testing {

struct Fixture {
  std::string name;
  std::unique_ptr<ValueOracle> f;
  std::unique_ptr<MatroidOracle> matroid;
  std::optional<LinearRegularizer> regularizer;
};

// Four sets over points {a, b, c, d, e}: 0 -> {a, b}, 1 -> {b, c}, 2 -> {d},
// 3 -> {a, d, e}, unit weights. Under a rank-2 uniform matroid the optimum is
// {1, 3} with value 5.
std::unique_ptr<CoverageFunction> SmallCoverage();

// Brute-forceable instances (n <= 14, rank <= 4) with integer-valued
// objectives: generated coverage/partition/graphic families plus modular and
// capped objectives on assorted matroids.
std::vector<Fixture> SmallSuite();

// Fixtures with non-negative linear regularizers (n <= 10).
std::vector<Fixture> RegularizedSuite();

// f(S) = |S|^2, which is supermodular.
std::unique_ptr<ValueOracle> SquaredCardinality(int n);

}  // namespace nols::testing

#endif  // NOLS_TESTS_FIXTURES_H_
