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

#ifndef NOLS_IO_GENERATOR_H_
#define NOLS_IO_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>

#include "io/instance.h"

namespace nols {

// Every family uses a weighted coverage objective over about 2n points; the
// family picks the matroid:
//   coverage   uniform matroid of rank r
//   partition  `blocks` blocks (default r) with capacity `cap` (default 1)
//   graphic    n edges on r + 1 vertices: a random spanning tree plus
//              random extra edges, so the rank is r
struct GeneratorOptions {
  std::string family = "coverage";
  int n = 12;
  int r = 3;
  std::uint64_t seed = 0;
  std::optional<int> blocks;
  std::optional<int> cap;
};

// Deterministic in the options. Throws std::invalid_argument on bad
// parameters.
Instance GenerateInstance(const GeneratorOptions& options);

}  // namespace nols

#endif  // NOLS_IO_GENERATOR_H_
