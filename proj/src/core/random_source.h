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

#ifndef NOLS_CORE_RANDOM_SOURCE_H_
#define NOLS_CORE_RANDOM_SOURCE_H_

#include <array>
#include <cstdint>

#include "core/element_set.h"

namespace nols {

// xoshiro256** seeded through SplitMix64. Bounded draws use Lemire's
// multiply-and-reject method, so a seed reproduces the same stream on every
// platform (std::uniform_int_distribution does not guarantee that).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Next();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform integer in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

// Uniformly random k-subset of pool (Floyd's algorithm over the pool's
// members in ascending order). Throws std::invalid_argument if k > |pool|.
ElementSet SampleWithoutReplacement(RandomSource& rng, const ElementSet& pool,
                                    int k);

}  // namespace nols

#endif  // NOLS_CORE_RANDOM_SOURCE_H_
